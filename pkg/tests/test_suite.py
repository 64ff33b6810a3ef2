import pytest

from hawalg.checks import CHECK_IDS, REGISTRY, Context, run_check, verify_haw_relations
from hawalg.errors import InvalidInputError
from hawalg.suite import SuiteConfig, exit_code, report_json, run_suite, sample_parameters, summary_lines


def test_sampling_is_deterministic_and_usable():
    for seed in range(8):
        a, b = sample_parameters(seed), sample_parameters(seed)
        assert a == b
        assert a.seed == seed and not a.degeneracies()
    assert sample_parameters(0) != sample_parameters(1)


def test_registry_ids_are_sorted_and_complete():
    assert list(CHECK_IDS) == sorted(REGISTRY)
    assert len(CHECK_IDS) == 25


@pytest.mark.parametrize(
    "data",
    [
        {"checks": ["no-such-check"]},
        {"checks": []},
        {"seeds": 0},
        {"nmax": 0},
        {"specialization": "case-iii"},
        {"colour": "blue"},
        {"seeds": "many"},
    ],
)
def test_invalid_configs(data):
    with pytest.raises(InvalidInputError):
        SuiteConfig.from_mapping(data).validate()


def test_degenerate_parameter_config():
    params = sample_parameters(0).to_json()
    params["q"] = "-1"
    with pytest.raises(InvalidInputError):
        SuiteConfig.from_mapping({"params": params}).validate()


def test_report_shape_and_order():
    cfg = SuiteConfig(checks=["X-recurrence", "aw-rel", "P-eigen"], seeds=2, nmax=4)
    report = run_suite(cfg)
    assert set(report) == {"version", "seed", "config", "runs", "summary"}
    assert [r["seed"] for r in report["runs"]] == [0, 1]
    for run in report["runs"]:
        assert [c["id"] for c in run["checks"]] == sorted(cfg.checks)
        assert all("millis" not in c for c in run["checks"])
    assert report["summary"] == {"pass": 6, "fail": 0, "skipped": 0}
    assert exit_code(report) == 0
    assert summary_lines(report)[-1] == "pass=6 fail=0 skipped=0"


def test_timings_are_opt_in():
    report = run_suite(SuiteConfig(checks=["aw-rel"], seeds=1, nmax=3, timings=True))
    assert "millis" in report["runs"][0]["checks"][0]


def test_report_is_reproducible():
    cfg = dict(checks=["W-equivalence", "haw-rel-1"], seeds=2, seed=7, nmax=3)
    assert report_json(run_suite(SuiteConfig(**cfg))) == report_json(run_suite(SuiteConfig(**cfg)))


def test_three_pairs_check_skips_on_generic_runs():
    out = run_check("all-three-pairs", Context(sample_parameters(0)))
    assert out.status == "skipped"


def test_failing_check_carries_witness():
    ctx = Context(sample_parameters(0))
    h = ctx.haw["plain"]
    failures = verify_haw_relations(h.replace(b7=h.b7 * 2 + 1), ctx.p.q, ctx.plain.X, ctx.plain.W)
    assert failures and {"identity", "shift", "coefficient"} <= set(failures[0])
