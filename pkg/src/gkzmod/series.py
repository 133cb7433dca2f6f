"""Truncated Gamma-series solutions along t = 0 and their symbolic verification.

A series attached to a fake exponent ``v`` is

    sum_u  [v]_{u-} / [v+u]_{u+}  x^(v+u) t^(w.(v+u))

over integer kernel vectors ``u`` of A, where ``[a]_k`` is the falling
factorial (componentwise).  Offsets are kept while ``w.u <= K``.  Exponents
are exact rationals; all operator actions are computed termwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .errors import GKZError, NonGenericWeight, ResonantExponent
from .indicial import FakeExponent
from .lattice import solve_rational
from .polyalgebra import Polynomial, format_rational
from .toric import ProblemSpec, build_atilde, toric_ideal

# a term of a formal sum: (x-exponents, t-exponent) -> coefficient
Key = tuple[tuple[Fraction, ...], Fraction]


def falling(x: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= x - i
    return out


# ---------------------------------------------------------------------------
# operators


@dataclass(frozen=True)
class OperatorExpr:
    """Sum of ``c * x^p t^q d^r dt^s`` in normal order (multiplications left)."""

    n: int
    terms: dict = field(hash=False, compare=True)

    def __post_init__(self):
        clean = {k: Fraction(c) for k, c in self.terms.items() if c}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def euler(cls, coeffs: Sequence[int], constant, t_coeff=0) -> "OperatorExpr":
        """``sum coeffs_j x_j d_j + t_coeff * t dt - constant``."""
        n = len(coeffs)
        terms = {}
        for j, a in enumerate(coeffs):
            e = [0] * n
            e[j] = 1
            terms[(tuple(e), 0, tuple(e), 0)] = a
        if t_coeff:
            terms[((0,) * n, 1, (0,) * n, 1)] = t_coeff
        if constant:
            terms[((0,) * n, 0, (0,) * n, 0)] = -Fraction(constant)
        return cls(n, terms)

    @classmethod
    def from_dt_polynomial(cls, f: Polynomial) -> "OperatorExpr":
        """A polynomial in ``d1..dn, t`` read as the operator ``t^a d^u``."""
        n = len(f.ring) - 1
        return cls(n, {((0,) * n, m[-1], m[:-1], 0): c for m, c in f.items()})

    def apply_term(self, xexp: tuple[Fraction, ...], texp: Fraction, coeff: Fraction):
        for (p, q, r, s), c in self.terms.items():
            k = c * coeff
            for xe, re_ in zip(xexp, r):
                if re_:
                    k *= falling(xe, re_)
            if s:
                k *= falling(texp, s)
            if not k:
                continue
            nx = tuple(xe - re_ + pe for xe, re_, pe in zip(xexp, r, p))
            yield (nx, texp - s + q), k

    def apply(self, terms: dict[Key, Fraction]) -> dict[Key, Fraction]:
        out: dict[Key, Fraction] = {}
        for (xexp, texp), coeff in terms.items():
            for key, k in self.apply_term(xexp, texp, coeff):
                v = out.get(key, 0) + k
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    def _display_order(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0][2]) + kv[0][3], kv[0]), reverse=True)

    def sign_normalized(self) -> "OperatorExpr":
        items = self._display_order()
        if items and items[0][1] < 0:
            return OperatorExpr(self.n, {k: -c for k, c in self.terms.items()})
        return self

    def __str__(self):
        def mono(name, e):
            return "" if not e else (name if e == 1 else f"{name}^{e}")

        parts = []
        for (p, q, r, s), c in self._display_order():
            factors = [mono(f"x{j + 1}", e) for j, e in enumerate(p)]
            factors.append(mono("t", q))
            factors += [mono(f"d{j + 1}", e) for j, e in enumerate(r)]
            factors.append(mono("dt", s))
            body = "*".join(f for f in factors if f)
            a = abs(c)
            if body and a != 1:
                body = f"{format_rational(a)}*{body}"
            elif not body:
                body = format_rational(a)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class ModifiedSystem:
    spec: ProblemSpec
    euler: tuple[OperatorExpr, ...]
    binomials: tuple[OperatorExpr, ...]

    def generators(self) -> list[tuple[str, OperatorExpr]]:
        out = [(f"euler{i + 1}", op) for i, op in enumerate(self.euler[:-1])]
        out.append(("weight-euler", self.euler[-1]))
        out += [(f"toric{i + 1}", op) for i, op in enumerate(self.binomials)]
        return out


def build_system(spec: ProblemSpec) -> ModifiedSystem:
    """Euler operators ``A theta - beta``, ``w theta - t dt`` and the toric operators."""
    euler = [OperatorExpr.euler(row, b) for row, b in zip(spec.A, spec.beta)]
    euler.append(OperatorExpr.euler(spec.w, 0, t_coeff=-1))
    toric = toric_ideal(build_atilde(spec))
    binomials = [OperatorExpr.from_dt_polynomial(g).sign_normalized() for g in toric.generators]
    return ModifiedSystem(spec, tuple(euler), tuple(binomials))


# ---------------------------------------------------------------------------
# series


@dataclass(frozen=True)
class GammaSeries:
    """``t^e * sum_k c_k(x) t^k`` truncated at ``k <= K``; terms keyed by kernel offset."""

    v: tuple[Fraction, ...]
    w: tuple[int, ...]
    e: Fraction
    K: int
    terms: dict = field(hash=False)

    def exponents(self, u) -> Key:
        x = tuple(a + b for a, b in zip(self.v, u))
        return x, sum(c * xe for c, xe in zip(self.w, x))

    def as_terms(self) -> dict[Key, Fraction]:
        return {self.exponents(u): c for u, c in self.terms.items()}

    def coefficient(self, u: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(u), Fraction(0))

    def t_orders(self) -> list[Fraction]:
        return sorted({self.exponents(u)[1] for u in self.terms})

    def with_coefficient(self, u: Sequence[int], c) -> "GammaSeries":
        terms = dict(self.terms)
        terms[tuple(u)] = Fraction(c)
        return replace(self, terms=terms)

    def records(self) -> list[dict]:
        """Serialization records ordered by t-exponent, then x-exponent."""
        rows = sorted((t, x, c) for (x, t), c in self.as_terms().items())
        return [{"x": [format_rational(a) for a in x], "t": format_rational(t),
                 "coeff": format_rational(c)} for t, x, c in rows]


def _offsets(fe: FakeExponent, spec: ProblemSpec, K: int):
    """Kernel vectors u with v+u >= 0 off the face and w.u <= K."""
    n, d = spec.n, spec.d
    face = sorted(fe.pair.face)
    off = [j for j in range(n) if j not in fe.pair.face]
    if len(face) != d:
        raise NonGenericWeight(f"top pair face {[j + 1 for j in face]} has size != rank of A")
    # u_face = -A_face^{-1} A_off u_off, column by column
    A_face = [[spec.A[i][j] for j in face] for i in range(d)]
    cols = []
    for j in off:
        sol = solve_rational(A_face, [-spec.A[i][j] for i in range(d)])
        if sol is None:
            raise NonGenericWeight(f"face {[k + 1 for k in face]} columns are singular")
        cols.append(sol)
    reduced = [spec.w[j] + sum(spec.w[f] * s for f, s in zip(face, col))
               for j, col in zip(off, cols)]
    bad = [off[i] + 1 for i, c in enumerate(reduced) if c <= 0]
    if bad:
        raise NonGenericWeight(
            f"weight does not grow along variables {bad}; series is not formal in t")
    lower = [-int(fe.pair.root[j]) for j in off]

    def rec(i, budget, acc):
        if i == len(off):
            yield tuple(acc)
            return
        rest_min = sum(c * lo for c, lo in zip(reduced[i + 1:], lower[i + 1:]))
        k = lower[i]
        while reduced[i] * k + rest_min <= budget:
            acc.append(k)
            yield from rec(i + 1, budget - reduced[i] * k, acc)
            acc.pop()
            k += 1

    for uo in rec(0, Fraction(K), []):
        u = [0] * n
        for j, x in zip(off, uo):
            u[j] = x
        ok = True
        for idx, f in enumerate(face):
            val = sum(col[idx] * x for col, x in zip(cols, uo))
            if val.denominator != 1:
                ok = False
                break
            u[f] = int(val)
        if ok:
            yield tuple(u)


def gamma_series(fe: FakeExponent, spec: ProblemSpec, K: int) -> GammaSeries:
    """Truncated series for a fake exponent, normalized so the x^v coefficient is 1."""
    if K < 0:
        raise ValueError("truncation order must be nonnegative")
    v = fe.point
    terms = {}
    for u in _offsets(fe, spec, K):
        wu = sum(c * x for c, x in zip(spec.w, u))
        if wu < 0:
            raise GKZError(f"offset {list(u)} lies below the leading t-exponent")
        num = Fraction(1)
        den = Fraction(1)
        for vj, uj in zip(v, u):
            if uj < 0:
                num *= falling(vj, -uj)
            elif uj > 0:
                den *= falling(vj + uj, uj)
        if den == 0:
            raise ResonantExponent(f"zero denominator at lattice offset {list(u)}")
        if num:
            terms[u] = num / den
    return GammaSeries(tuple(v), tuple(spec.w), fe.t_exponent, K, terms)


# ---------------------------------------------------------------------------
# verification


def apply_operator(op: OperatorExpr, s: GammaSeries | dict, K: int, e: Fraction | None = None):
    """``op`` applied to a series, keeping t-orders up to ``e + K``."""
    if isinstance(s, GammaSeries):
        e = s.e if e is None else e
        s = s.as_terms()
    limit = e + K
    return {k: c for k, c in op.apply(s).items() if k[1] <= limit}


@dataclass(frozen=True)
class GeneratorCheck:
    label: str
    operator: str
    ok: bool
    verified_through: Fraction | None
    first_failure: Fraction | None


@dataclass(frozen=True)
class ResidualReport:
    e: Fraction
    K: int
    checks: tuple[GeneratorCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def residual_check(system: ModifiedSystem, s: GammaSeries, K: int | None = None) -> ResidualReport:
    """Apply every generator; all terms of t-order <= e + K must vanish."""
    K = s.K if K is None else K
    orders = [s.e + k for k in range(K + 1)]
    terms = s.as_terms()
    checks = []
    for label, op in system.generators():
        res = apply_operator(op, terms, K, s.e)
        if res:
            first = min(t for _, t in res)
            below = [o for o in orders if o < first]
            checks.append(GeneratorCheck(label, str(op), False,
                                         below[-1] if below else None, first))
        else:
            checks.append(GeneratorCheck(label, str(op), True, s.e + K, None))
    return ResidualReport(s.e, K, tuple(checks))
