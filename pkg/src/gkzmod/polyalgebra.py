"""Exact multivariate polynomials over the rationals.

Polynomials are sparse maps from exponent tuples to nonzero ``Fraction``
coefficients.  Monomial orders are expressed as sort keys: a larger key means
a larger monomial, so ``max(terms, key=order.key)`` is the leading monomial.

Text format
-----------
``str(p)`` lists terms in descending default order (grevlex, variable
precedence as in the ring), e.g. ``d1^3*t^3 - d2`` or ``-3/2*th1 + 1``.
Coefficients are printed as ``p`` or ``p/q`` and a unit coefficient is
omitted.  ``parse_polynomial`` reads this format back.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    raise TypeError(f"cannot use {x!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# term orders


class TermOrder:
    """A monomial order given by a sort key.

    ``kind`` is one of ``"lex"``, ``"grevlex"`` or ``"weight"``.  A weight
    order compares ``weight . m`` first and falls back to ``tiebreak``
    (grevlex by default).  Weight orders with a negative entry are not
    well-orders; ``is_global`` reports this and the Groebner engine refuses
    them.
    """

    def __init__(self, kind: str = "grevlex", weight: Sequence[int] | None = None,
                 tiebreak: "TermOrder | None" = None):
        if kind not in ("lex", "grevlex", "weight"):
            raise ValueError(f"unknown term order kind {kind!r}")
        if kind == "weight":
            if weight is None:
                raise ValueError("weight order needs a weight vector")
            weight = tuple(int(c) for c in weight)
            if tiebreak is None:
                tiebreak = GREVLEX
        elif weight is not None or tiebreak is not None:
            raise ValueError(f"{kind} order takes no weight or tiebreak")
        self.kind = kind
        self.weight = weight
        self.tiebreak = tiebreak

    def key(self, m: Monomial) -> tuple:
        if self.kind == "grevlex":
            return (sum(m),) + tuple(-e for e in reversed(m))
        if self.kind == "lex":
            return m
        if len(m) != len(self.weight):
            raise ValueError("weight length does not match monomial length")
        return (sum(a * b for a, b in zip(self.weight, m)),) + self.tiebreak.key(m)

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """Return 1, 0 or -1 as ``m1`` is larger than, equal to or smaller than ``m2``."""
        if len(m1) != len(m2):
            raise ValueError("exponent vectors of different lengths")
        k1, k2 = self.key(tuple(m1)), self.key(tuple(m2))
        return (k1 > k2) - (k1 < k2)

    def is_global(self) -> bool:
        """True when 1 is the smallest monomial (the order is a well-order)."""
        if self.kind != "weight":
            return True
        return all(c >= 0 for c in self.weight) and self.tiebreak.is_global()

    def __eq__(self, other):
        return (isinstance(other, TermOrder) and self.kind == other.kind
                and self.weight == other.weight and self.tiebreak == other.tiebreak)

    def __hash__(self):
        return hash((self.kind, self.weight, self.tiebreak))

    def __repr__(self):
        if self.kind == "weight":
            return f"TermOrder('weight', {list(self.weight)}, {self.tiebreak!r})"
        return f"TermOrder({self.kind!r})"


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


def weight_order(weight: Sequence[int], tiebreak: TermOrder | None = None) -> TermOrder:
    return TermOrder("weight", weight, tiebreak)


def elimination_order(nvars: int, drop: Iterable[int]) -> TermOrder:
    """Weight order eliminating the variables at positions ``drop``.

    The weight counts the degree in the dropped variables, so a polynomial
    whose leading monomial avoids them avoids them entirely.
    """
    drop = set(drop)
    return weight_order([1 if i in drop else 0 for i in range(nvars)])


# ---------------------------------------------------------------------------
# monomial helpers


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable polynomial with rational coefficients over a named ring."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Sequence[str], terms: Mapping[Monomial, object] | None = None):
        self.ring = tuple(ring)
        n = len(self.ring)
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n:
                raise ValueError(f"exponent vector {m} does not fit ring {self.ring}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = as_rational(c)
            if c:
                clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # construction helpers
    @classmethod
    def constant(cls, ring, c) -> "Polynomial":
        return cls(ring, {(0,) * len(tuple(ring)): c})

    @classmethod
    def monomial(cls, ring, exps, c=1) -> "Polynomial":
        return cls(ring, {tuple(exps): c})

    @classmethod
    def variable(cls, ring, name) -> "Polynomial":
        ring = tuple(ring)
        e = [0] * len(ring)
        e[ring.index(name)] = 1
        return cls(ring, {tuple(e): 1})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def __len__(self):
        return len(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    # arithmetic
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            if not c:
                return Polynomial._raw(self.ring, {})
            return Polynomial._raw(self.ring, {m: c * v for m, v in self._terms.items()})
        self._check(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # orders
    def leading_monomial(self, order: TermOrder = GREVLEX) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: TermOrder = GREVLEX) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder = GREVLEX) -> "Polynomial":
        return self * (1 / self.leading_coefficient(order))

    def sign_normalized(self, order: TermOrder = GREVLEX) -> "Polynomial":
        """Return ``self`` or ``-self`` so that the leading coefficient is positive."""
        if self._terms and self.leading_coefficient(order) < 0:
            return -self
        return self

    def sorted_terms(self, order: TermOrder = GREVLEX) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def weight_degree(self, weight: Sequence[int]) -> int:
        return max(sum(a * b for a, b in zip(weight, m)) for m in self._terms)

    def evaluate(self, point: Sequence) -> Fraction:
        """Evaluate at a rational point (one value per ring variable)."""
        point = [as_rational(p) for p in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for p, e in zip(point, m):
                if e:
                    v *= p ** e
            total += v
        return total

    def substitute(self, values: Mapping[str, object]) -> "Polynomial":
        """Substitute rational values for some variables (they stay in the ring)."""
        idx = {self.ring.index(k): as_rational(v) for k, v in values.items()}
        out: dict = {}
        for m, c in self._terms.items():
            v = c
            mm = list(m)
            for i, val in idx.items():
                if mm[i]:
                    v *= val ** mm[i]
                    mm[i] = 0
            key = tuple(mm)
            out[key] = out.get(key, 0) + v
        return Polynomial(self.ring, out)

    def change_ring(self, ring: Sequence[str]) -> "Polynomial":
        """Re-embed into a ring containing all variables that actually occur."""
        ring = tuple(ring)
        pos = {name: i for i, name in enumerate(ring)}
        out = {}
        for m, c in self._terms.items():
            e = [0] * len(ring)
            for name, k in zip(self.ring, m):
                if k:
                    if name not in pos:
                        raise ValueError(f"variable {name} not in target ring")
                    e[pos[name]] = k
            out[tuple(e)] = c
        return Polynomial._raw(ring, out)

    def initial_form(self, weight: Sequence[int]) -> "Polynomial":
        """Sum of the terms of maximal ``weight``-degree."""
        return initial_form(self, weight)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.ring}, '{self}')"


def initial_form(f: Polynomial, weight: Sequence[int]) -> Polynomial:
    """Sum of the terms of ``f`` whose weight is maximal."""
    if f.is_zero():
        raise ValueError("initial form of the zero polynomial is undefined")
    if len(weight) != len(f.ring):
        raise ValueError("weight length does not match ring")
    wt = {m: sum(a * b for a, b in zip(weight, m)) for m in f.monomials()}
    top = max(wt.values())
    return Polynomial._raw(f.ring, {m: c for m, c in f.items() if wt[m] == top})


def format_monomial(ring: Sequence[str], m: Monomial) -> str:
    parts = []
    for name, e in zip(ring, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order: TermOrder = GREVLEX) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms(order)):
        mon = format_monomial(p.ring, m)
        neg = c < 0
        a = -c if neg else c
        if mon and a == 1:
            body = mon
        elif mon:
            body = f"{format_rational(a)}*{mon}"
        else:
            body = format_rational(a)
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def parse_polynomial(text: str, ring: Sequence[str]) -> Polynomial:
    """Parse the canonical text format (and ordinary ``+ - * / ^ ( )`` expressions)."""
    ring = tuple(ring)
    tokens = []
    for num, name, op in _TOKEN.findall(text.replace("−", "-").replace("**", "^")):
        if num:
            tokens.append(("num", int(num)))
        elif name:
            if name not in ring:
                raise ValueError(f"unknown variable {name!r} for ring {ring}")
            tokens.append(("var", name))
        elif op.strip():
            tokens.append(("op", op))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ValueError("can only divide by nonzero constants")
                acc = acc * (1 / rhs.coefficient((0,) * len(ring)))
        return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** val
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Polynomial.constant(ring, val)
        if kind == "var":
            return Polynomial.variable(ring, val)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return inner
        if (kind, val) == ("op", "-"):
            return -atom()
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


# ---------------------------------------------------------------------------
# ring name conventions


def d_ring(n: int, with_t: bool = True) -> tuple[str, ...]:
    names = tuple(f"d{i}" for i in range(1, n + 1))
    return names + ("t",) if with_t else names


def theta_ring(n: int) -> tuple[str, ...]:
    return tuple(f"th{i}" for i in range(1, n + 1)) + ("th_t",)
