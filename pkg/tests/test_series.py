import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gkzmod.errors import ResonantExponent
from gkzmod.indicial import fake_exponents, t_initial_monomial_ideal
from gkzmod.series import (
    GammaSeries,
    OperatorExpr,
    apply_operator,
    build_system,
    gamma_series,
    residual_check,
)
from gkzmod.standard_pairs import StandardPair
from gkzmod.indicial import FakeExponent
from gkzmod.toric import ProblemSpec

F = Fraction


def airy_series(spec, K):
    (fe,) = fake_exponents(t_initial_monomial_ideal(spec), spec)
    return gamma_series(fe, spec, K)


def test_build_system_airy(airy):
    labels = [(lab, str(op)) for lab, op in build_system(airy).generators()]
    assert labels == [
        ("euler1", "x1*d1 + 3*x2*d2 + 1"),
        ("weight-euler", "-x1*d1 - t*dt"),
        ("toric1", "t^3*d1^3 - d2"),
    ]


def test_generator_count(bessel321):
    sys_ = build_system(bessel321)
    assert len(sys_.generators()) == bessel321.d + 1 + len(sys_.binomials)


def test_euler_kills_admissible_monomial(bessel321):
    v = (F(-1, 2), F(0), F(0))
    term = {(v, sum(a * b for a, b in zip(bessel321.w, v))): F(1)}
    for op in build_system(bessel321).euler:
        assert op.apply(term) == {}


def test_t_dt_on_rational_power():
    op = OperatorExpr(0, {((), 1, (), 1): 1})
    assert op.apply({((), F(5, 2)): F(1)}) == {((), F(5, 2)): F(5, 2)}


def test_airy_coefficient_magnitudes(airy):
    s = airy_series(airy, 10)
    for m, expected in enumerate([1, 6, 360, 60480]):
        assert abs(s.coefficient((-3 * m, m))) == expected
    s = airy_series(airy, 30)
    for m in range(11):
        assert abs(s.coefficient((-3 * m, m))) == math.factorial(3 * m) // math.factorial(m)


def test_airy_signs_alternate(airy):
    s = airy_series(airy, 10)
    assert [s.coefficient((-3 * m, m)) for m in range(4)] == [1, -6, 360, -60480]


def test_airy_t_exponents(airy):
    assert airy_series(airy, 30).t_orders() == [3 * m + 1 for m in range(11)]


def test_truncation_zero_is_leading_monomial(airy, bessel321):
    s = airy_series(airy, 0)
    assert s.as_terms() == {((F(-1), F(0)), F(1)): 1}
    rep = residual_check(build_system(airy), s)
    assert all(c.ok for c in rep.checks if c.label.startswith(("euler", "weight")))


def test_residual_airy_k30(airy):
    rep = residual_check(build_system(airy), airy_series(airy, 30))
    assert rep.ok
    assert all(c.verified_through == 31 for c in rep.checks)


def test_residual_bessel_all_exponents(bessel321):
    sys_ = build_system(bessel321)
    exps = fake_exponents(t_initial_monomial_ideal(bessel321), bessel321)
    assert len(exps) == 3
    for fe in exps:
        assert residual_check(sys_, gamma_series(fe, bessel321, 15)).ok


def test_corrupted_coefficient_is_caught(airy):
    s = airy_series(airy, 12)
    bad = s.with_coefficient((-6, 2), s.coefficient((-6, 2)) + 1)
    rep = residual_check(build_system(airy), bad)
    assert not rep.ok
    (fail,) = [c for c in rep.checks if not c.ok]
    assert fail.label == "toric1"
    # d2 keeps the t-order, so the bad term at t^7 shows up at 7
    assert fail.first_failure == 7 and fail.verified_through == 6


def test_toric_residual_lives_beyond_truncation(airy):
    s = airy_series(airy, 9)
    op = build_system(airy).binomials[0]
    full = op.apply(s.as_terms())
    assert full and min(t for _, t in full) > s.e + s.K
    assert apply_operator(op, s, s.K) == {}


@pytest.mark.parametrize("K", [0, 5, 15])
def test_support_law(bessel321, K):
    for fe in fake_exponents(t_initial_monomial_ideal(bessel321), bessel321):
        s = gamma_series(fe, bessel321, K)
        for x, t in s.as_terms():
            assert [sum(a * e for a, e in zip(row, x)) for row in bessel321.A] == list(bessel321.beta)
            assert t == sum(c * e for c, e in zip(bessel321.w, x))
            assert t - s.e in range(K + 1)


def test_airy_growth_gevrey_bracket(airy):
    """log|c_m| / (m log m) stays in [1.8, 2.2] for m = 20..40."""
    s = airy_series(airy, 3 * 40)
    for m in range(20, 41):
        ratio = math.log(abs(s.coefficient((-3 * m, m)))) / (m * math.log(m))
        assert 1.8 <= ratio <= 2.2, (m, ratio)


def test_airy_growth_against_factorial_square(airy):
    # (3m)!/m! / (m!)^2 grows like 27^m up to a polynomial factor
    s = airy_series(airy, 3 * 60)
    rates = []
    for m in (20, 40, 60):
        c = abs(s.coefficient((-3 * m, m)))
        rates.append(math.log(c / math.factorial(m) ** 2) / m)
    assert rates == sorted(rates)
    assert abs(rates[-1] - math.log(27)) < 0.1


def test_resonant_exponent():
    # hand-built exponent with v1 = -2: the offset (3,-1) hits [1]_3 = 0
    spec = ProblemSpec([[1, 3]], [0], [0, -1])
    fe = FakeExponent(StandardPair((0, 0), frozenset({1})), (F(-2), F(2, 3)), F(-2, 3))
    with pytest.raises(ResonantExponent, match=r"\[3, -1\]"):
        gamma_series(fe, spec, 3)


@settings(max_examples=30, deadline=None)
@given(st.integers(-40, 40), st.integers(1, 9), st.integers(0, 12))
def test_airy_family_residual(num, den, K):
    beta = F(num, den)
    if beta.denominator == 1:
        return
    spec = ProblemSpec([[1, 3]], [beta], [-1, 0])
    s = airy_series(spec, K)
    assert isinstance(s, GammaSeries)
    assert residual_check(build_system(spec), s).ok
