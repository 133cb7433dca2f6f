"""Monomial ideals and their standard pairs.

A standard pair ``(root, face)`` of a monomial ideal M stands for the family of
standard monomials ``root * x^b`` with ``b`` supported on ``face``; the pairs
are the maximal such families.  The top-dimensional pairs (largest face) count
the degree of M.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .polyalgebra import Monomial, Polynomial, format_monomial, monomial_divides


@dataclass(frozen=True, init=False)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (exponent vectors)."""

    ring: tuple[str, ...]
    generators: tuple[Monomial, ...]

    def __init__(self, ring: Sequence[str], generators: Iterable[Sequence[int]]):
        ring = tuple(ring)
        gens = sorted({tuple(int(e) for e in g) for g in generators})
        for g in gens:
            if len(g) != len(ring) or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for ring {ring}")
        minimal = [g for g in gens
                   if not any(h != g and monomial_divides(h, g) for h in gens)]
        minimal.sort(key=lambda m: (-sum(m), tuple(-e for e in m)))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(minimal))

    @property
    def nvars(self) -> int:
        return len(self.ring)

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, m: Sequence[int]) -> bool:
        return any(monomial_divides(g, m) for g in self.generators)

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(self.ring, g) for g in self.generators]

    def permuted(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Relabel variable ``i`` as variable ``perm[i]``."""
        def move(m):
            out = [0] * len(m)
            for i, e in enumerate(m):
                out[perm[i]] = e
            return out
        return MonomialIdeal(self.ring, [move(g) for g in self.generators])

    def __str__(self):
        return "<" + ", ".join(format_monomial(self.ring, g) or "1"
                               for g in self.generators) + ">"


@dataclass(frozen=True)
class StandardPair:
    root: Monomial
    face: frozenset[int]

    def contains(self, m: Sequence[int]) -> bool:
        return all(e >= r if i in self.face else e == r
                   for i, (e, r) in enumerate(zip(m, self.root)))

    def to_text(self, ring: Sequence[str]) -> str:
        face = ",".join(ring[i] for i in sorted(self.face))
        return f"({format_monomial(ring, self.root) or '1'}, {{{face}}})"


def _admissible(gens, root, face) -> bool:
    # root * C[x_face] avoids M iff no generator divides root off the face
    return not any(all(g[j] <= root[j] for j in range(len(root)) if j not in face)
                   for g in gens)


def _roots(gens, face, bounds):
    """Admissible roots for ``face``: staircase walk on the non-face variables."""
    n = len(bounds)
    free = [j for j in range(n) if j not in face]
    out = []
    seen = set()
    stack = [(0,) * n]
    while stack:
        a = stack.pop()
        if a in seen:
            continue
        seen.add(a)
        if not _admissible(gens, a, face):
            continue
        out.append(a)
        for j in free:
            if a[j] < bounds[j]:
                b = list(a)
                b[j] += 1
                stack.append(tuple(b))
    return out


def standard_pairs(M: MonomialIdeal) -> list[StandardPair]:
    """All standard pairs of M, sorted by decreasing face size then root."""
    gens = M.generators
    n = M.nvars
    if M.is_unit():
        return []
    # a standard pair never has root exponent beyond the largest generator exponent
    bounds = [max((g[j] for g in gens), default=0) for j in range(n)]
    pairs = []
    for size in range(n, -1, -1):
        for face in combinations(range(n), size):
            face = frozenset(face)
            if not _admissible(gens, (0,) * n, face):
                continue
            for a in _roots(gens, face, bounds):
                dominated = False
                for j in range(n):
                    if j in face:
                        continue
                    b = list(a)
                    b[j] = 0
                    if _admissible(gens, b, face | {j}):
                        dominated = True
                        break
                if not dominated:
                    pairs.append(StandardPair(a, face))
    pairs.sort(key=lambda p: (-len(p.face), sorted(p.face), p.root))
    return pairs


def krull_dimension(M: MonomialIdeal) -> int:
    """Largest face size among admissible faces; -1 for the unit ideal."""
    if M.is_unit():
        return -1
    n = M.nvars
    for size in range(n, -1, -1):
        for face in combinations(range(n), size):
            if _admissible(M.generators, (0,) * n, frozenset(face)):
                return size
    return -1


def top_pairs(M: MonomialIdeal) -> list[StandardPair]:
    pairs = standard_pairs(M)
    if not pairs:
        return []
    top = max(len(p.face) for p in pairs)
    return [p for p in pairs if len(p.face) == top]


def rank_lower_bound(A: Sequence[Sequence[int]]) -> int:
    """Number of top standard pairs of the t-initial monomial ideal at w = (1,...,1).

    This is the normalized volume of conv(0, columns of A), a lower bound for
    the holonomic rank of the GKZ system of A.
    """
    from .toric import ProblemSpec, build_atilde, in_tau_monomial, toric_ideal

    n = len(A[0])
    spec = ProblemSpec(A, [0] * len(A), [1] * n)
    M = in_tau_monomial(toric_ideal(build_atilde(spec)))
    return len(top_pairs(M))
