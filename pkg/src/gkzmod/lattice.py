"""Exact integer linear algebra: Hermite forms, integer kernels, determinants."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form; zero rows are dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    H = [list(map(int, r)) for r in rows]
    if not H:
        return []
    ncols = len(H[0])
    r = 0
    for c in range(ncols):
        if r == len(H):
            break
        while True:
            nz = [i for i in range(r, len(H)) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            H[r], H[p] = H[p], H[r]
            done = True
            for i in range(r + 1, len(H)):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
        r += 1
    return [row for row in H if any(row)]


def integer_kernel(M: Sequence[Sequence[int]]) -> Matrix:
    """A basis (as rows) of the full integer kernel lattice {u : M u = 0}.

    Column operations bring ``M`` to echelon form while recording a unimodular
    transform; its trailing columns span the kernel over Z, so the lattice is
    saturated by construction.  The basis is returned in Hermite normal form.
    """
    M = [list(map(int, r)) for r in M]
    n = len(M[0])
    A = [row[:] for row in M]
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # columns track transforms

    def colop(dst, src, q):
        # column dst -= q * column src
        for row in A:
            row[dst] -= q * row[src]
        for row in U:
            row[dst] -= q * row[src]

    def swap(a, b):
        for row in A:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    piv = 0
    for i in range(len(A)):
        if piv == n:
            break
        while True:
            nz = [j for j in range(piv, n) if A[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda j: abs(A[i][j]))
            swap(piv, p)
            for j in range(piv + 1, n):
                if A[i][j]:
                    colop(j, piv, A[i][j] // A[i][piv])
            if all(A[i][j] == 0 for j in range(piv + 1, n)):
                break
        if any(A[i][j] for j in range(piv, n)):
            piv += 1
    kernel = [[U[r][c] for r in range(n)] for c in range(piv, n)]
    return hermite_normal_form(kernel)


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    A = [list(map(int, r)) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(M: Sequence[Sequence[int]]) -> int:
    return len(hermite_normal_form(M))


def maximal_minor_gcd(rows: Sequence[Sequence[int]]) -> int:
    """gcd of the maximal minors of a full-row-rank integer matrix."""
    k = len(rows)
    if k == 0:
        return 1
    g = 0
    for cols in combinations(range(len(rows[0])), k):
        g = gcd(g, determinant([[r[c] for c in cols] for r in rows]))
    return abs(g)


def columns_span_lattice(A: Sequence[Sequence[int]]) -> bool:
    """True when the columns of ``A`` generate Z^d."""
    d = len(A)
    cols = [[A[i][j] for i in range(d)] for j in range(len(A[0]))]
    H = hermite_normal_form(cols)
    return len(H) == d and all(H[i][i] == 1 for i in range(d))


def solve_rational(M: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Unique solution of a square (or overdetermined) rational system, else None."""
    rows = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(M, b)]
    ncols = len(rows[0]) - 1 if rows else 0
    r = 0
    pivots = []
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    if len(pivots) < ncols:
        return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][-1]
    return sol
