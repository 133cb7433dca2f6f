"""Buchberger's algorithm over the rationals and the ideal operations built on it.

The inner loops work on plain ``{exponent: Fraction}`` dicts; ``Polynomial``
objects are only built at the boundary.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonGlobalOrder
from .polyalgebra import (
    GREVLEX,
    Monomial,
    Polynomial,
    TermOrder,
    elimination_order,
    initial_form,
    monomial_divides,
    monomial_lcm,
    weight_order,
)


# ---------------------------------------------------------------------------
# dict-level kernels


def _lead(p: dict, key) -> Monomial:
    return max(p, key=key)


def _sub_scaled(f: dict, g: dict, shift: Monomial, c: Fraction) -> None:
    """In place: f -= c * x^shift * g."""
    for m, a in g.items():
        mm = tuple(x + y for x, y in zip(m, shift))
        v = f.get(mm, 0) - c * a
        if v:
            f[mm] = v
        else:
            f.pop(mm, None)


def _reduce(f: dict, basis: Sequence[tuple[Monomial, dict]], key) -> dict:
    """Fully reduce ``f`` by monic ``(lm, poly)`` pairs; returns the remainder."""
    f = dict(f)
    rem = {}
    while f:
        m = _lead(f, key)
        c = f[m]
        for lm, g in basis:
            if all(x >= y for x, y in zip(m, lm)):
                _sub_scaled(f, g, tuple(x - y for x, y in zip(m, lm)), c)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _monic(p: dict, key) -> tuple[Monomial, dict]:
    lm = _lead(p, key)
    c = p[lm]
    if c == 1:
        return lm, p
    return lm, {m: a / c for m, a in p.items()}


def _spoly(lf, f, lg, g, lcm) -> dict:
    s = {}
    shift_f = tuple(x - y for x, y in zip(lcm, lf))
    for m, a in f.items():
        s[tuple(x + y for x, y in zip(m, shift_f))] = a
    _sub_scaled(s, g, tuple(x - y for x, y in zip(lcm, lg)), Fraction(1))
    return s


def _buchberger(polys: Iterable[dict], order: TermOrder) -> list[tuple[Monomial, dict]]:
    key = order.key
    G: list[tuple[Monomial, dict]] = []
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def add(p):
        lm, p = _monic(p, key)
        k = len(G)
        G.append((lm, p))
        for i in range(k):
            lcm = monomial_lcm(G[i][0], lm)
            pending.add((i, k))
            heapq.heappush(heap, (sum(lcm), key(lcm), i, k))

    for p in polys:
        r = _reduce(p, G, key)
        if r:
            add(r)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, fi = G[i]
        lj, fj = G[j]
        lcm = monomial_lcm(li, lj)
        # first criterion: coprime leading monomials
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # second (chain) criterion
        skip = False
        for k, (lk, _) in enumerate(G):
            if k in (i, j) or not monomial_divides(lk, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        s = _spoly(li, fi, lj, fj, lcm)
        r = _reduce(s, G, key)
        if r:
            add(r)
    return G


def _interreduce(G: list[tuple[Monomial, dict]], order: TermOrder) -> list[tuple[Monomial, dict]]:
    key = order.key
    G = sorted(G, key=lambda g: key(g[0]))
    minimal = []
    for idx, (lm, p) in enumerate(G):
        if any(monomial_divides(lm2, lm) and (lm2 != lm or j < idx)
               for j, (lm2, _) in enumerate(G) if j != idx):
            continue
        minimal.append((lm, p))
    out = []
    for idx, (lm, p) in enumerate(minimal):
        others = [g for j, g in enumerate(minimal) if j != idx]
        tail = dict(p)
        del tail[lm]
        r = _reduce(tail, others, key)
        r[lm] = Fraction(1)
        out.append((lm, r))
    out.sort(key=lambda g: key(g[0]), reverse=True)
    return out


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class GroebnerBasis:
    ring: tuple[str, ...]
    order: TermOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def ideal(self) -> "Ideal":
        return Ideal(self.ring, self.elements)

    def _pairs(self):
        return [(g.leading_monomial(self.order), dict(g.items())) for g in self.elements]


@dataclass(frozen=True, init=False)
class Ideal:
    ring: tuple[str, ...]
    generators: tuple[Polynomial, ...]

    def __init__(self, ring: Sequence[str], generators: Iterable[Polynomial] = ()):
        ring = tuple(ring)
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError(f"generator ring {g.ring} differs from ideal ring {ring}")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def groebner(self, order: TermOrder = GREVLEX) -> GroebnerBasis:
        return buchberger(self, order)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.groebner().elements)

    def canonical(self) -> "Ideal":
        """The ideal generated by its reduced grevlex basis."""
        return self.groebner().ideal()

    def same_ideal(self, other: "Ideal") -> bool:
        return (self.ring == other.ring
                and self.groebner().elements == other.groebner().elements)

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def buchberger(I: Ideal, order: TermOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of ``I`` under a global monomial order."""
    if not order.is_global():
        raise NonGlobalOrder(f"{order!r} is not a well-order; use initial_ideal for weights")
    G = _buchberger((dict(g.items()) for g in I.generators), order)
    G = _interreduce(G, order) if G else []
    if any(not any(lm) for lm, _ in G):
        G = [((0,) * len(I.ring), {(0,) * len(I.ring): Fraction(1)})]
    elements = tuple(Polynomial._raw(I.ring, p) for _, p in G)
    return GroebnerBasis(I.ring, order, elements, True)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.ring != G.ring:
        raise ValueError(f"ring mismatch: {f.ring} vs {G.ring}")
    r = _reduce(dict(f.items()), G._pairs(), G.order.key)
    return Polynomial._raw(f.ring, r)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = monomial_lcm(lf, lg)
    _, fm = _monic(dict(f.items()), order.key)
    _, gm = _monic(dict(g.items()), order.key)
    return Polynomial._raw(f.ring, _spoly(lf, fm, lg, gm, lcm))


def satisfies_buchberger_criterion(G: GroebnerBasis) -> bool:
    """Every S-polynomial of two basis elements reduces to zero."""
    els = G.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if not normal_form(s_polynomial(els[i], els[j], G.order), G).is_zero():
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    lms = G.leading_monomials()
    for g, lm in zip(G.elements, lms):
        if g.leading_coefficient(G.order) != 1:
            return False
        for other, olm in zip(G.elements, lms):
            if other is g:
                continue
            if any(monomial_divides(olm, m) for m in g.monomials()):
                return False
    return True


# ---------------------------------------------------------------------------
# derived operations


def eliminate(I: Ideal, drop: Iterable[str], order: TermOrder | None = None) -> Ideal:
    """Generators of ``I`` intersected with the subring omitting ``drop``.

    The result lives in the ring with the dropped variables removed.
    """
    drop = set(drop)
    unknown = drop - set(I.ring)
    if unknown:
        raise ValueError(f"cannot eliminate unknown variables {sorted(unknown)}")
    idx = [i for i, v in enumerate(I.ring) if v in drop]
    if order is None:
        order = elimination_order(len(I.ring), idx)
    G = buchberger(I, order)
    keep = [v for v in I.ring if v not in drop]
    out = []
    for g in G.elements:
        if all(m[i] == 0 for m in g.monomials() for i in idx):
            out.append(g.change_ring(keep))
    return Ideal(keep, out).canonical()


def _aux_name(ring, base="_y"):
    name = base
    while name in ring:
        name += "_"
    return name


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^oo) via one auxiliary variable y: eliminate y from <I, 1 - y f>."""
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    y = _aux_name(I.ring)
    ring = I.ring + (y,)
    gens = [g.change_ring(ring) for g in I.generators]
    gens.append(Polynomial.constant(ring, 1) - Polynomial.variable(ring, y) * f.change_ring(ring))
    return eliminate(Ideal(ring, gens), [y])


def homogenize(f: Polynomial, hname: str) -> Polynomial:
    ring = f.ring + (hname,)
    deg = f.total_degree()
    return Polynomial._raw(ring, {m + (deg - sum(m),): c for m, c in f.items()})


def _weighted_basis(I: Ideal, weight: Sequence[int]):
    """A Groebner basis from which weight-initial data of ``I`` can be read.

    Returns ``(elements, order, dehomogenize)``.  Nonnegative weights refine to
    a global order directly.  Otherwise ``I`` is homogenized (from its grevlex
    basis, which generates the homogenization) and the weight is shifted by a
    multiple of the total degree; on homogeneous ideals that shift leaves
    initial forms unchanged.
    """
    weight = tuple(int(c) for c in weight)
    if len(weight) != len(I.ring):
        raise ValueError("weight length does not match ring")
    if all(c >= 0 for c in weight):
        order = weight_order(weight)
        return buchberger(I, order).elements, order, None
    h = _aux_name(I.ring, "_h")
    ring = I.ring + (h,)
    gens = [homogenize(g, h) for g in buchberger(I, GREVLEX).elements]
    shift = -min(weight)
    order = weight_order([c + shift for c in weight] + [shift])
    G = buchberger(Ideal(ring, gens), order)
    return G.elements, order, (h, I.ring)


def _dehomogenize(p: Polynomial, info) -> Polynomial:
    h, ring = info
    return p.substitute({h: 1}).change_ring(ring) if h in p.ring else p


def initial_ideal(I: Ideal, weight: Sequence[int]) -> Ideal:
    """The ideal of ``weight``-initial forms of ``I`` (weights may be negative)."""
    if I.is_zero():
        return I
    elements, order, info = _weighted_basis(I, weight)
    forms = []
    for g in elements:
        if info is None:
            forms.append(initial_form(g, weight))
        else:
            forms.append(_dehomogenize(initial_form(g, order.weight), info))
    return Ideal(I.ring, forms).canonical()


def initial_monomial_ideal(I: Ideal, weight: Sequence[int]) -> Ideal:
    """Monomial ideal of ``weight`` refined by grevlex (well defined for any weight)."""
    if I.is_zero():
        return I
    elements, order, info = _weighted_basis(I, weight)
    mons = []
    for g in elements:
        lm = Polynomial.monomial(g.ring, g.leading_monomial(order))
        mons.append(lm if info is None else _dehomogenize(lm, info))
    return Ideal(I.ring, mons).canonical()
