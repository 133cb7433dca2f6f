import random
from fractions import Fraction

import pytest

from gkzmod.errors import InputError
from gkzmod.groebner import Ideal, saturate
from gkzmod.polyalgebra import Polynomial, d_ring
from gkzmod.toric import (
    ProblemSpec,
    binomial,
    build_atilde,
    in_tau,
    lattice_ideal,
    lattice_kernel,
    lattice_member,
    toric_ideal,
)

from conftest import P


def test_build_atilde(airy, bessel321):
    assert build_atilde(airy) == [[1, 3, 0], [-1, 0, 1]]
    assert build_atilde(bessel321) == [[-1, 1, 2, 0], [3, 2, 1, 1]]
    assert build_atilde(ProblemSpec([[1, 3]], [0], [0, 0]))[-1] == [0, 0, 1]


def test_spec_validation():
    with pytest.raises(InputError):
        ProblemSpec([[2, 4]], [0], [0, 0])
    with pytest.raises(InputError):
        ProblemSpec([[1, 3]], [0, 1], [0, 0])
    with pytest.raises(InputError):
        ProblemSpec([[1, 3]], [0], [0])
    with pytest.raises(InputError):
        ProblemSpec([[1, 3], [1]], [0, 0], [0, 0])


def test_kernel_airy():
    assert lattice_kernel([[1, 3, 0], [-1, 0, 1]]) == [[3, -1, 3]]


def test_kernel_bessel():
    K = lattice_kernel([[-1, 1, 2, 0], [3, 2, 1, 1]])
    assert K == [[1, 1, 0, -5], [0, 2, -1, -3]]


def torus_image(M, f):
    """Exponent of each term under d_i -> s^{a_i} tau^{w_i}, t -> tau."""
    return {tuple(sum(row[j] * m[j] for j in range(len(m))) for row in M) for m in f.monomials()}


def test_kernel_binomials_vanish_on_torus(bessel321):
    M = build_atilde(bessel321)
    ring = d_ring(3)
    for u in lattice_kernel(M):
        assert len(torus_image(M, binomial(u, ring))) == 1


def test_toric_airy(airy):
    I = toric_ideal(build_atilde(airy))
    assert I.generators == (P("d1^3*t^3 - d2", d_ring(2)),)


def test_bessel_negative_membership(bessel_neg):
    M = build_atilde(bessel_neg)
    f = P("d1^2*d3*t^4 - 1", d_ring(3))
    assert lattice_member(M, f)
    assert toric_ideal(M).contains(f)
    # without the t-power the binomial is not in the ideal
    assert not toric_ideal(M).contains(P("1 - d1^2*d3", d_ring(3)))


@pytest.mark.parametrize("fix", ["airy", "bessel321", "bessel_neg"])
def test_no_power_of_t(fix, request):
    spec = request.getfixturevalue(fix)
    I = toric_ideal(build_atilde(spec))
    G = I.groebner()
    t = Polynomial.variable(I.ring, "t")
    for m in range(6):
        assert not G.normal_form(t ** m).is_zero()


CORPUS = [
    ([[1, 3]], [-1, 0]),
    ([[-1, 1, 2]], [3, 2, 1]),
    ([[-1, 1, 2]], [-2, -1, 0]),
    ([[1, 1, 1], [0, 1, 2]], [1, 1, 1]),
    ([[1, 2, 5]], [2, -1, 3]),
    ([[1, 0, 1], [0, 1, 1]], [1, 3, 7]),
]


@pytest.mark.parametrize("A,w", CORPUS)
def test_toric_generators_vanish_and_saturated(A, w):
    spec = ProblemSpec(A, [0] * len(A), w)
    M = build_atilde(spec)
    I = toric_ideal(M)
    for g in I.generators:
        assert len(torus_image(M, g)) == 1
    assert saturate(I, Polynomial.variable(I.ring, "t")).same_ideal(I)


def test_toric_ideal_independent_of_kernel_basis():
    rng = random.Random(11)
    M = [[-1, 1, 2, 0], [3, 2, 1, 1]]
    ring = d_ring(3)
    reference = toric_ideal(M)
    K = lattice_kernel(M)
    for _ in range(4):
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        u = [x + a * y for x, y in zip(K[0], K[1])]
        v = [y + b * x for x, y in zip(u, K[1])]
        I = lattice_ideal([u, v], ring)
        for var in ring:
            I = saturate(I, Polynomial.variable(ring, var))
        assert I.canonical().generators == reference.generators


def test_in_tau_examples(airy, bessel321, bessel_neg):
    r = in_tau(toric_ideal(build_atilde(airy)))
    assert r.is_monomial and r.ideal.generators == (P("d2", d_ring(2)),)
    assert r.monomial_ideal.generators == ((0, 1),)
    r = in_tau(toric_ideal(build_atilde(bessel_neg)))
    assert r.is_monomial and r.monomial_ideal.is_unit()
    r = in_tau(toric_ideal(build_atilde(bessel321)))
    assert r.is_monomial
    assert set(r.monomial_ideal.generators) == {(1, 1, 0), (0, 2, 0), (1, 0, 1)}


def test_in_tau_reports_non_monomial():
    # w orthogonal to the kernel of A makes the two sides of d1^3 - d2 tie
    spec = ProblemSpec([[1, 3]], [0], [1, 3])
    r = in_tau(toric_ideal(build_atilde(spec)))
    assert not r.is_monomial and r.monomial_ideal is None


def test_generic_weights_give_monomial_in_tau():
    rng = random.Random(5)
    for _ in range(6):
        w = [rng.randint(-9, 9) for _ in range(3)]
        if 2 * w[0] + w[2] == 0 or w[0] + w[1] == 0 or 2 * w[1] - w[2] == 0 or w[0] - w[1] + w[2] == 0:
            continue
        spec = ProblemSpec([[-1, 1, 2]], ["1/3"], w)
        assert in_tau(toric_ideal(build_atilde(spec))).is_monomial, w


def test_in_tau_is_w_initial_of_dehomogenized_ideal(bessel321):
    # setting t = 1 recovers I_A; t-initial data equals the w-initial ideal of I_A
    from gkzmod.groebner import initial_monomial_ideal
    I = toric_ideal(build_atilde(bessel321))
    ring = d_ring(3, with_t=False)
    IA = Ideal(ring, [g.substitute({"t": 1}).change_ring(ring) for g in I.generators])
    J = initial_monomial_ideal(IA, list(bessel321.w))
    r = in_tau(I)
    assert {next(iter(g.monomials())) for g in J.generators} == set(r.monomial_ideal.generators)


def test_beta_is_exact():
    spec = ProblemSpec([[1, 3]], ["-7/3"], [0, 1])
    assert spec.beta == (Fraction(-7, 3),)
