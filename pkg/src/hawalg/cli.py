"""Command line interface: ``verify``, ``fit``, ``apply`` and ``params``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .appendix import PRINTED, appendixA_constants, constant_diff, resolve_readings
from .arith import rational_str
from .checks import CHECK_IDS, realization_shifts
from .errors import DegenerateParametersError, HawError, InvalidInputError
from .operators import DEFAULT_NMAX, ParameterSet, apply_x, build_realization
from .parsing import parse_xpolynomial
from .presentation import SPECIALIZATIONS
from .raising import fit_degree_raising_family
from .relations import Binding, fit_coefficients
from .shiftop import op_is_scalar
from .structure import SYMMETRIC_NAMES, build_omega_AW, fit_aw_constants, fit_haw_constants, symmetric_casimir_template
from .suite import SuiteConfig, exit_code, report_json, run_suite, sample_parameters, summary_lines

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2
FIT_TARGETS = ("aw-constants", "appendixA", "symmetric-casimir", "degree-raising")


def _read_json(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInputError(f"{path} must hold a JSON object")
    return data


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_params(args) -> ParameterSet:
    if getattr(args, "params", None):
        p = ParameterSet.from_json(_read_json(args.params))
        if args.nmax is not None:
            p = ParameterSet(p.q, p.xi, p.tau, p.seed, p.resamples, args.nmax)
    else:
        p = sample_parameters(args.seed if args.seed is not None else 0, args.nmax or DEFAULT_NMAX)
    bad = p.degeneracies()
    if bad:
        raise InvalidInputError("degenerate parameters: " + "; ".join(bad))
    return p


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    cfg = SuiteConfig.from_mapping(_read_json(args.config)) if args.config else SuiteConfig()
    if args.check:
        cfg.checks = [c for group in args.check for c in group]
    elif args.all:
        cfg.checks = list(CHECK_IDS)
    if args.seeds is not None:
        cfg.seeds = args.seeds
    if args.seed is not None:
        cfg.seed = args.seed
    if args.params:
        cfg.params = ParameterSet.from_json(_read_json(args.params))
        if args.nmax is None:
            cfg.nmax = cfg.params.nmax
    if args.nmax is not None:
        cfg.nmax = args.nmax
    if args.specialization is not None:
        cfg.specialization = args.specialization
    if args.timings:
        cfg.timings = True
    cfg.validate()
    try:
        report = run_suite(cfg)
    except DegenerateParametersError as exc:
        raise InvalidInputError(str(exc)) from exc
    if args.json:
        _write(report_json(report), args.json)
    if not args.quiet and args.json != "-":
        print("\n".join(summary_lines(report)))
    return exit_code(report)


def _fit_aw(p: ParameterSet) -> dict:
    r = build_realization(p)
    b = Binding(r.ops())
    a, fit = fit_aw_constants(p.q, b)
    omega = op_is_scalar(build_omega_AW(a, p, r.X, r.Y))
    return {"status": fit.status, "equations": fit.equations, "constants": a.to_json(),
            "casimir": None if omega is None else rational_str(omega)}


def _fit_appendix(p: ParameterSet) -> tuple[dict, bool]:
    out = {}
    ok = True
    shifts = {"plain": (0, 0), "shifted": realization_shifts(p)}
    for name, (al, be) in shifts.items():
        r = build_realization(p, al, be)
        b = Binding(r.ops())
        a, _ = fit_aw_constants(p.q, b)
        omega = op_is_scalar(build_omega_AW(a, p, r.X, r.Y))
        h, _ = fit_haw_constants(p.q, b)
        diff = constant_diff(appendixA_constants(a, p, omega), h)
        ok = ok and not diff
        out[name] = {
            "shift": [rational_str(r.alpha), rational_str(r.beta)],
            "fitted": h.to_json(),
            "diff": diff,
            "literal_table_diff": constant_diff(appendixA_constants(a, p, omega, PRINTED), h),
            "readings": resolve_readings(a, p, omega, h),
        }
    return out, ok


def _fit_symmetric(p: ParameterSet) -> dict:
    r = build_realization(p)
    fit = fit_coefficients(symmetric_casimir_template(p.q), Binding({"X": r.X, "W": r.W}))
    return {
        "status": fit.status,
        "nullspace_dim": fit.nullspace_dim,
        "unknowns": list(SYMMETRIC_NAMES) + ["c0"],
        "nullspace": [{k: rational_str(v) for k, v in vec.items()} for vec in fit.nullspace],
    }


def _fit_raising(p: ParameterSet) -> dict:
    fit = fit_degree_raising_family(p, max(9, p.nmax))
    return {
        "status": fit.status,
        "nullspace_dim": fit.nullspace_dim,
        "unknowns": fit.unknowns,
        "nullspace": [{k: rational_str(v) for k, v in vec.items()} for vec in fit.nullspace],
    }


def cmd_fit(args) -> int:
    p = _load_params(args)
    ok = True
    if args.target == "aw-constants":
        result = _fit_aw(p)
    elif args.target == "appendixA":
        result, ok = _fit_appendix(p)
    elif args.target == "symmetric-casimir":
        result = _fit_symmetric(p)
        ok = result["status"] != "inconsistent"
    else:
        result = _fit_raising(p)
        ok = result["nullspace_dim"] == 9
    doc = {"target": args.target, "params": p.to_json(), "result": result}
    _write(_dump(doc), args.json)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_apply(args) -> int:
    p = _load_params(args)
    f = parse_xpolynomial(args.input)
    r = build_realization(p)
    op = {"X": r.X, "Y": r.Y, "W": r.W}[args.op]
    print(apply_x(op, f))
    return EXIT_OK


def cmd_params(args) -> int:
    p = sample_parameters(args.seed, args.nmax or DEFAULT_NMAX)
    _write(_dump(p.to_json()), args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _add_param_source(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--seed", type=_nonneg_int, help="sample parameters from this seed (default 0)")
    sp.add_argument("--params", metavar="FILE", help="parameter JSON file (overrides --seed)")
    sp.add_argument("--nmax", type=_nonneg_int, help=f"basis depth (default {DEFAULT_NMAX})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hawalg", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity checks on sampled or given parameters")
    sel = v.add_mutually_exclusive_group()
    sel.add_argument("--all", action="store_true", help="run every check (default)")
    sel.add_argument("--check", action="append", nargs="+", metavar="ID", choices=CHECK_IDS,
                     help="run only these checks")
    v.add_argument("--seeds", type=_nonneg_int, help="number of parameter sets (default 5)")
    _add_param_source(v)
    v.add_argument("--specialization", choices=SPECIALIZATIONS, help="adjust tau to a special case")
    v.add_argument("--config", metavar="FILE", help="JSON config; flags override it")
    v.add_argument("--json", metavar="OUT", help="write the JSON report here ('-' for stdout)")
    v.add_argument("--timings", action="store_true", help="include per-check milliseconds (not deterministic)")
    v.add_argument("--quiet", action="store_true", help="suppress the text summary")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fit", help="fit implicit constants and print them as JSON")
    f.add_argument("--target", required=True, choices=FIT_TARGETS)
    _add_param_source(f)
    f.add_argument("--json", metavar="OUT", help="write here instead of stdout")
    f.set_defaults(func=cmd_fit)

    a = sub.add_parser("apply", help="apply X, Y or W to an x-polynomial")
    a.add_argument("--op", required=True, choices=("X", "Y", "W"))
    a.add_argument("--input", required=True, metavar="POLY", help='e.g. "x^2 - 3/2*x + 1"')
    _add_param_source(a)
    a.set_defaults(func=cmd_apply)

    pr = sub.add_parser("params", help="print the parameter set sampled from a seed")
    pr.add_argument("--seed", type=_nonneg_int, required=True)
    pr.add_argument("--nmax", type=_nonneg_int)
    pr.add_argument("--json", metavar="OUT", help="write here instead of stdout")
    pr.set_defaults(func=cmd_params)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInputError, DegenerateParametersError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HawError as exc:  # pragma: no cover - every package error is one of the above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
