from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hawalg.arith import LaurentPoly, Polynomial, XPolynomial  # noqa: E402
from hawalg.checks import Context  # noqa: E402
from hawalg.operators import ParameterSet  # noqa: E402
from hawalg.suite import sample_parameters  # noqa: E402

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SEEDS = tuple(range(5))

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_fractions = small_fractions.filter(lambda v: v != 0)


@st.composite
def polynomials(draw, max_len: int = 5) -> Polynomial:
    return Polynomial(draw(st.lists(small_fractions, max_size=max_len)))


@st.composite
def nonzero_polynomials(draw, max_len: int = 4) -> Polynomial:
    p = draw(polynomials(max_len))
    if p.is_zero():
        p = Polynomial([draw(nonzero_fractions)])
    return p


@st.composite
def xpolynomials(draw, max_len: int = 5) -> XPolynomial:
    return XPolynomial(draw(st.lists(small_fractions, max_size=max_len)))


@st.composite
def laurent_polys(draw, span: int = 3) -> LaurentPoly:
    exps = draw(st.lists(st.integers(-span, span), max_size=4, unique=True))
    return LaurentPoly({k: draw(small_fractions) for k in exps})


@st.composite
def q_values(draw) -> Fraction:
    q = draw(st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=6))
    return q if q not in (0, 1) else Fraction(2)


@pytest.fixture(scope="session")
def params() -> list[ParameterSet]:
    return [sample_parameters(s) for s in SEEDS]


@pytest.fixture(scope="session")
def p0() -> ParameterSet:
    return sample_parameters(0)


@pytest.fixture(scope="session")
def contexts(params) -> list[Context]:
    return [Context(p) for p in params]


@pytest.fixture
def example_params() -> ParameterSet:
    """q = 2, xi = (2, 3, 5, 7) with a generic tau."""
    return ParameterSet(Fraction(2), (2, 3, 5, 7), (Fraction(1, 3), 3, 1, Fraction(-2, 5), Fraction(3, 7)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
