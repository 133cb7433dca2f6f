"""Indicial polynomial along t = 0.

Two independent routes:

* ``indicial_by_pairs``: one linear factor ``s - w.v`` per top-dimensional
  standard pair of the t-initial monomial ideal M, where ``v`` is the pair's
  fake exponent.
* ``indicial_by_elimination``: eliminate ``th1..thn`` from the distraction of M
  plus the Euler forms ``A th - beta`` and ``w th - th_t``; the surviving
  univariate generator in ``th_t`` is the polynomial in ``s = th_t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .errors import NonGenericParameter, RouteDisagreement, UnitIndicialIdeal
from .groebner import Ideal, eliminate
from .lattice import solve_rational
from .polyalgebra import Polynomial, format_rational, theta_ring
from .standard_pairs import MonomialIdeal, StandardPair, top_pairs
from .toric import ProblemSpec, build_atilde, in_tau, toric_ideal

S_RING = ("s",)


def euler_forms(spec: ProblemSpec) -> list[Polynomial]:
    """``A th - beta`` (d forms) followed by ``w th - th_t``."""
    ring = theta_ring(spec.n)
    forms = []
    for row, b in zip(spec.A, spec.beta):
        terms = {}
        for j, a in enumerate(row):
            if a:
                e = [0] * (spec.n + 1)
                e[j] = 1
                terms[tuple(e)] = a
        terms[(0,) * (spec.n + 1)] = -b
        forms.append(Polynomial(ring, terms))
    terms = {}
    for j, c in enumerate(spec.w):
        if c:
            e = [0] * (spec.n + 1)
            e[j] = 1
            terms[tuple(e)] = c
    terms[(0,) * spec.n + (1,)] = -1
    forms.append(Polynomial(ring, terms))
    return forms


def falling_factorial(ring: Sequence[str], u: Sequence[int]) -> Polynomial:
    """prod_j th_j (th_j - 1) ... (th_j - u_j + 1)."""
    out = Polynomial.constant(ring, 1)
    for j, k in enumerate(u):
        x = Polynomial.variable(ring, ring[j])
        for i in range(k):
            out = out * (x - i)
    return out


def distraction(M: MonomialIdeal) -> Ideal:
    """Falling-factorial images of the generators of M, in ``th1..thn, th_t``."""
    ring = theta_ring(M.nvars)
    return Ideal(ring, [falling_factorial(ring, g + (0,)) for g in M.generators])


@dataclass(frozen=True)
class FakeExponent:
    pair: StandardPair
    point: tuple[Fraction, ...]
    t_exponent: Fraction


def fake_exponent(pair: StandardPair, spec: ProblemSpec) -> FakeExponent:
    """Solve ``th_j = root_j`` off the face together with ``A th = beta``."""
    n = spec.n
    rows = [list(r) for r in spec.A]
    rhs = list(spec.beta)
    for j in range(n):
        if j not in pair.face:
            e = [0] * n
            e[j] = 1
            rows.append(e)
            rhs.append(Fraction(pair.root[j]))
    sol = solve_rational(rows, rhs)
    if sol is None:
        raise NonGenericParameter(
            f"standard pair root={list(pair.root)} face={sorted(j + 1 for j in pair.face)} "
            "does not determine a unique exponent")
    point = tuple(sol)
    return FakeExponent(pair, point, sum(c * x for c, x in zip(spec.w, point)))


def fake_exponents(M: MonomialIdeal, spec: ProblemSpec) -> list[FakeExponent]:
    return [fake_exponent(p, spec) for p in top_pairs(M)]


@dataclass(frozen=True)
class IndicialPolynomial:
    """Univariate polynomial in ``s``; ``roots`` is set when it splits over Q."""

    poly: Polynomial
    roots: tuple[Fraction, ...] | None

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def degree(self) -> int:
        return self.poly.total_degree()

    @classmethod
    def zero(cls) -> "IndicialPolynomial":
        return cls(Polynomial(S_RING), ())

    @classmethod
    def from_roots(cls, roots: Sequence[Fraction]) -> "IndicialPolynomial":
        s = Polynomial.variable(S_RING, "s")
        p = Polynomial.constant(S_RING, 1)
        for r in roots:
            p = p * (s - r)
        return cls(p, tuple(sorted(roots)))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "IndicialPolynomial":
        if p.is_zero():
            return cls.zero()
        p = p.monic()
        return cls(p, _rational_roots(p))

    def coefficients(self) -> list[Fraction]:
        """Coefficients from the constant term upward."""
        if self.is_zero:
            return []
        return [self.poly.coefficient((k,)) for k in range(self.degree + 1)]

    def factored(self) -> str:
        if self.is_zero:
            return "0"
        if self.roots is None:
            return str(self.poly)
        if not self.roots:
            return "1"
        parts = []
        for r in self.roots:
            if r == 0:
                parts.append("s")
            elif r > 0:
                parts.append(f"(s - {format_rational(r)})")
            else:
                parts.append(f"(s + {format_rational(-r)})")
        return "*".join(parts)

    def __eq__(self, other):
        if not isinstance(other, IndicialPolynomial):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly)


def _rational_roots(p: Polynomial) -> tuple[Fraction, ...] | None:
    s = sympy.Symbol("s")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * s ** m[0] for m, c in p.items())
    _, factors = sympy.factor_list(sympy.Poly(expr, s, domain="QQ"))
    roots = []
    for f, mult in factors:
        if f.degree() != 1:
            return None
        a, b = f.all_coeffs()
        r = -sympy.Rational(b) / sympy.Rational(a)
        roots.extend([Fraction(int(r.p), int(r.q))] * mult)
    return tuple(sorted(roots))


def t_initial_monomial_ideal(spec: ProblemSpec) -> MonomialIdeal:
    """M for the problem; raises NonGenericWeight if it is not monomial."""
    return in_tau(toric_ideal(build_atilde(spec))).require_monomial()


def indicial_by_pairs(spec: ProblemSpec, M: MonomialIdeal | None = None) -> IndicialPolynomial:
    if M is None:
        M = t_initial_monomial_ideal(spec)
    exps = fake_exponents(M, spec)
    if not exps:
        return IndicialPolynomial.zero()
    return IndicialPolynomial.from_roots([fe.t_exponent for fe in exps])


def indicial_ideal(spec: ProblemSpec, M: MonomialIdeal) -> Ideal:
    ring = theta_ring(spec.n)
    J = Ideal(ring, list(distraction(M).generators) + euler_forms(spec))
    return eliminate(J, ring[:-1])


def indicial_by_elimination(spec: ProblemSpec, M: MonomialIdeal | None = None) -> IndicialPolynomial:
    if M is None:
        M = t_initial_monomial_ideal(spec)
    E = indicial_ideal(spec, M)
    if E.is_zero():
        return IndicialPolynomial.zero()
    (gen,) = E.generators
    if gen.is_constant():
        raise UnitIndicialIdeal("the elimination ideal along t=0 is the unit ideal")
    return IndicialPolynomial.from_polynomial(Polynomial(S_RING, dict(gen.items())))


def indicial(spec: ProblemSpec, method: str = "pairs") -> IndicialPolynomial:
    """Indicial polynomial by ``pairs``, ``elimination`` or ``both`` (cross-checked).

    With ``both``, an empty set of top pairs and a unit elimination ideal are
    the same answer: the zero polynomial.
    """
    M = t_initial_monomial_ideal(spec)
    if method == "pairs":
        return indicial_by_pairs(spec, M)
    if method == "elimination":
        return indicial_by_elimination(spec, M)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    by_pairs = indicial_by_pairs(spec, M)
    try:
        by_elim = indicial_by_elimination(spec, M)
    except UnitIndicialIdeal:
        if by_pairs.is_zero:
            return by_pairs
        raise RouteDisagreement(f"pairs gave {by_pairs}, elimination gave the unit ideal")
    if by_pairs != by_elim:
        raise RouteDisagreement(f"pairs gave {by_pairs}, elimination gave {by_elim}")
    return by_pairs
