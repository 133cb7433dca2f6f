"""Problem data, the extended matrix, toric ideals and their t-initial ideals.

Rings are ``d1..dn, t``.  The extended matrix stacks ``A`` (padded with a zero
column) over the row ``(w, 1)``; its integer kernel gives the binomials of the
toric ideal, which is then saturated by every variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateMatrix, InputError
from .groebner import Ideal, initial_ideal, initial_monomial_ideal, saturate
from .lattice import (
    columns_span_lattice,
    integer_kernel,
    maximal_minor_gcd,
    rank,
)
from .polyalgebra import Polynomial, as_rational, d_ring
from .standard_pairs import MonomialIdeal


@dataclass(frozen=True, init=False)
class ProblemSpec:
    """One modified system instance: integer matrix A, parameters beta, weight w."""

    A: tuple[tuple[int, ...], ...]
    beta: tuple[Fraction, ...]
    w: tuple[int, ...]

    def __init__(self, A, beta, w):
        try:
            A = tuple(tuple(int(x) for x in row) for row in A)
            beta = tuple(as_rational(b) for b in beta)
            w = tuple(int(x) for x in w)
        except (TypeError, ValueError) as exc:
            raise InputError(f"malformed problem data: {exc}") from None
        if not A or not A[0]:
            raise InputError("A must be a nonempty matrix")
        n = len(A[0])
        if any(len(row) != n for row in A):
            raise InputError("rows of A have different lengths")
        if len(beta) != len(A):
            raise InputError(f"beta has {len(beta)} entries, A has {len(A)} rows")
        if len(w) != n:
            raise InputError(f"w has {len(w)} entries, A has {n} columns")
        if not columns_span_lattice(A):
            raise InputError("the columns of A do not span the integer lattice Z^d")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "w", w)

    @property
    def d(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0])

    def with_weight(self, w) -> "ProblemSpec":
        return ProblemSpec(self.A, self.beta, w)

    def with_beta(self, beta) -> "ProblemSpec":
        return ProblemSpec(self.A, beta, self.w)


def build_atilde(spec: ProblemSpec) -> list[list[int]]:
    rows = [list(row) + [0] for row in spec.A]
    rows.append(list(spec.w) + [1])
    return rows


def lattice_kernel(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Hermite-reduced basis of the full integer kernel of ``M``."""
    if rank(M) != len(M):
        raise DegenerateMatrix("extended matrix is rank deficient")
    basis = integer_kernel(M)
    if basis and maximal_minor_gcd(basis) != 1:
        raise AssertionError("kernel basis does not generate a saturated lattice")
    return basis


def binomial(u: Sequence[int], ring: Sequence[str]) -> Polynomial:
    """``x^(u+) - x^(u-)`` for an integer vector ``u``."""
    pos = tuple(max(e, 0) for e in u)
    neg = tuple(max(-e, 0) for e in u)
    return Polynomial(ring, {pos: 1}) - Polynomial(ring, {neg: 1})


def lattice_ideal(basis: Sequence[Sequence[int]], ring: Sequence[str]) -> Ideal:
    return Ideal(ring, [binomial(u, ring) for u in basis])


def toric_ideal(M: Sequence[Sequence[int]]) -> Ideal:
    """The toric ideal of ``M`` in ``d1..dn, t`` as its reduced grevlex basis."""
    ring = d_ring(len(M[0]) - 1)
    I = lattice_ideal(lattice_kernel(M), ring)
    for v in ring:
        I = saturate(I, Polynomial.variable(ring, v))
    return I.canonical()


def tau_weight(nvars: int) -> list[int]:
    return [0] * (nvars - 1) + [-1]


@dataclass(frozen=True)
class InTau:
    ideal: Ideal
    is_monomial: bool
    monomial_ideal: MonomialIdeal | None

    def require_monomial(self) -> MonomialIdeal:
        from .errors import NonGenericWeight
        if not self.is_monomial:
            bad = [str(g) for g in self.ideal.generators if not g.is_monomial()]
            raise NonGenericWeight("t-initial ideal has non-monomial generators: "
                                   + ", ".join(bad))
        return self.monomial_ideal


def _strip_t(ideal: Ideal) -> MonomialIdeal:
    ring = ideal.ring[:-1]
    return MonomialIdeal(ring, [next(iter(g.monomials()))[:-1] for g in ideal.generators])


def in_tau(I: Ideal) -> InTau:
    """Initial ideal for t of weight -1 (d's weight 0), with a monomiality report.

    A monomial outcome is also given as a monomial ideal in ``d1..dn``
    (t-powers dropped; they cannot occur for t-saturated toric ideals).
    """
    J = initial_ideal(I, tau_weight(len(I.ring)))
    mono = all(g.is_monomial() for g in J.generators)
    return InTau(J, mono, _strip_t(J) if mono else None)


def in_tau_monomial(I: Ideal) -> MonomialIdeal:
    """Monomial ideal of the t-weight refined by grevlex, t-powers dropped.

    Equals ``in_tau(I).monomial_ideal`` whenever that is monomial.
    """
    return _strip_t(initial_monomial_ideal(I, tau_weight(len(I.ring))))


def lattice_member(M: Sequence[Sequence[int]], f: Polynomial) -> bool:
    """Whether a binomial ``x^a - x^b`` has ``M (a - b) = 0``."""
    items = list(f.items())
    if len(items) != 2 or items[0][1] != -items[1][1]:
        return False
    diff = [a - b for a, b in zip(items[0][0], items[1][0])]
    return all(sum(r * x for r, x in zip(row, diff)) == 0 for row in M)
