"""Seeded parameter sampling, suite execution and JSON reports."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from . import __version__
from .checks import CHECK_IDS, REGISTRY, CheckOutcome, Context, run_check
from .errors import DegenerateParametersError, InvalidInputError
from .operators import DEFAULT_NMAX, ParameterSet
from .presentation import SPECIALIZATIONS, special_tau

MAX_RESAMPLES = 10_000


def _draw(rng: random.Random, signed: bool) -> Fraction:
    v = Fraction(rng.randint(1, 50), rng.randint(1, 50))
    return -v if signed and rng.random() < 0.5 else v


def sample_parameters(seed: int, nmax: int = DEFAULT_NMAX) -> ParameterSet:
    """Deterministic nondegenerate parameters for ``seed``.

    Numerators and denominators are uniform on 1..50; ``xi`` and ``tau``
    get random signs, ``q`` stays positive.  Draws that hit a degenerate
    locus are discarded and counted in ``resamples``.
    """
    rng = random.Random(seed)
    for attempt in range(MAX_RESAMPLES):
        q = _draw(rng, signed=False)
        xi = tuple(_draw(rng, True) for _ in range(4))
        tau = tuple(_draw(rng, True) for _ in range(5))
        p = ParameterSet(q, xi, tau, seed=seed, resamples=attempt, nmax=nmax)
        if not p.degeneracies():
            return p
    raise DegenerateParametersError(f"no usable parameters after {MAX_RESAMPLES} draws")  # pragma: no cover


@dataclass
class SuiteConfig:
    checks: list[str] = field(default_factory=lambda: list(CHECK_IDS))
    seeds: int = 5
    seed: int = 0
    nmax: int = DEFAULT_NMAX
    specialization: str = "generic"
    params: ParameterSet | None = None
    timings: bool = False

    def validate(self) -> "SuiteConfig":
        unknown = [c for c in self.checks if c not in REGISTRY]
        if unknown:
            raise InvalidInputError(f"unknown check ids: {unknown}")
        if not self.checks:
            raise InvalidInputError("no checks selected")
        if self.seeds < 1:
            raise InvalidInputError("seeds must be >= 1")
        if self.nmax < 1:
            raise InvalidInputError("nmax must be >= 1")
        if self.specialization not in SPECIALIZATIONS:
            raise InvalidInputError(f"specialization must be one of {SPECIALIZATIONS}")
        if self.params is not None:
            bad = self.params.degeneracies(self.nmax)
            if bad:
                raise InvalidInputError("parameter file is degenerate: " + "; ".join(bad))
        return self

    def to_json(self) -> dict:
        return {
            "checks": sorted(self.checks),
            "seeds": self.seeds,
            "seed": self.seed,
            "nmax": self.nmax,
            "specialization": self.specialization,
            "params": None if self.params is None else self.params.to_json(),
        }

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "SuiteConfig":
        known = {"checks", "seeds", "seed", "nmax", "specialization", "params", "timings"}
        extra = set(data) - known
        if extra:
            raise InvalidInputError(f"unknown config keys: {sorted(extra)}")
        cfg = cls()
        if "checks" in data:
            checks = data["checks"]
            cfg.checks = list(CHECK_IDS) if checks == "all" else [str(c) for c in checks]
        for key in ("seeds", "seed", "nmax"):
            if key in data:
                try:
                    setattr(cfg, key, int(data[key]))
                except (TypeError, ValueError) as exc:
                    raise InvalidInputError(f"{key} must be an integer") from exc
        if "specialization" in data:
            cfg.specialization = str(data["specialization"])
        if data.get("params") is not None:
            cfg.params = ParameterSet.from_json(data["params"])
        cfg.timings = bool(data.get("timings", False))
        return cfg


def _parameter_sets(cfg: SuiteConfig) -> list[ParameterSet]:
    if cfg.params is not None:
        base = [cfg.params]
    else:
        base = [sample_parameters(cfg.seed + i, cfg.nmax) for i in range(cfg.seeds)]
    out = []
    for p in base:
        p = ParameterSet(p.q, p.xi, p.tau, p.seed, p.resamples, cfg.nmax)
        if cfg.specialization != "generic":
            p = p.with_tau(special_tau(p, cfg.specialization))
            bad = p.degeneracies(cfg.nmax)
            if bad:
                raise DegenerateParametersError(f"specialized parameters degenerate: {'; '.join(bad)}")
        out.append(p)
    return out


def run_suite(cfg: SuiteConfig) -> dict:
    """Run every selected check on every parameter set; the report is ordered by check id."""
    cfg.validate()
    runs = []
    for p in _parameter_sets(cfg):
        ctx = Context(p, cfg.specialization)
        checks = []
        for cid in sorted(cfg.checks):
            t0 = time.perf_counter()
            out: CheckOutcome = run_check(cid, ctx)
            entry: dict[str, Any] = {"id": cid, "status": out.status}
            if out.witness is not None:
                entry["witness"] = out.witness
            if out.fitted is not None:
                entry["fitted"] = out.fitted
            if cfg.timings:
                entry["millis"] = round((time.perf_counter() - t0) * 1000, 3)
            checks.append(entry)
        runs.append({"seed": p.seed, "specialization": cfg.specialization, "params": p.to_json(), "checks": checks})
    statuses = [c["status"] for r in runs for c in r["checks"]]
    return {
        "version": __version__,
        "seed": cfg.seed if cfg.params is None else cfg.params.seed,
        "config": cfg.to_json(),
        "runs": runs,
        "summary": {s: statuses.count(s) for s in ("pass", "fail", "skipped")},
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def exit_code(report: dict) -> int:
    return 1 if report["summary"]["fail"] else 0


def summary_lines(report: dict) -> list[str]:
    lines = []
    for run in report["runs"]:
        for c in run["checks"]:
            lines.append(f"seed={run['seed']} {c['id']}: {c['status']}")
    s = report["summary"]
    lines.append(f"pass={s['pass']} fail={s['fail']} skipped={s['skipped']}")
    return lines


def select_checks(ids: Sequence[str] | None) -> list[str]:
    return list(CHECK_IDS) if not ids else list(ids)
