"""Exact rational and integer linear algebra helpers.

Small dense problems only (the lattice rank here is r+1 <= ~20), so the
classical algorithms over `fractions.Fraction` are the right tool: no
pivot-growth concerns, no floating-point soundness gap.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


class LinearAlgebraError(ArithmeticError):
    pass


def solve_linear(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Solve A x = b exactly by Gaussian elimination with partial pivoting."""
    n = len(A)
    if n == 0:
        return []
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            raise LinearAlgebraError("singular system")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        for i in range(n):
            if i == col or M[i][col] == 0:
                continue
            f = M[i][col] * inv
            for j in range(col, n + 1):
                M[i][j] -= f * M[col][j]
    return [M[i][n] / M[i][i] for i in range(n)]


def ldl_decompose(G: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[Fraction]]:
    """Factor a symmetric rational matrix as G = L diag(pivots) L^T.

    L is unit lower triangular and no row/column pivoting is performed, so
    the pivots are the ratios of leading principal minors.  A zero pivot
    before completion (possible only for non-definite G) raises
    :class:`LinearAlgebraError`.
    """
    n = len(G)
    L: Matrix = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    pivots: list[Fraction] = []
    # Working copy of the lower triangle.
    work = [[Fraction(G[i][j]) for j in range(i + 1)] for i in range(n)]
    for k in range(n):
        piv = work[k][k]
        if piv == 0:
            raise LinearAlgebraError("zero pivot in LDL (matrix is not definite)")
        pivots.append(piv)
        for i in range(k + 1, n):
            L[i][k] = work[i][k] / piv
        for i in range(k + 1, n):
            for j in range(k + 1, i + 1):
                work[i][j] -= L[i][k] * L[j][k] * piv
    return L, pivots


def is_negative_definite(G: Sequence[Sequence[Fraction]]) -> bool:
    """Exact negative-definiteness test via LDL pivot signs."""
    if len(G) == 0:
        return True
    try:
        _, pivots = ldl_decompose(G)
    except LinearAlgebraError:
        return False
    return all(p < 0 for p in pivots)


def integer_kernel_of_row(coeffs: Sequence[int]) -> list[list[int]]:
    """Basis of the saturated integer kernel of one linear functional.

    Runs unimodular column operations (the Euclidean algorithm across the
    row) on an identity matrix; the columns not carrying the final gcd form
    a basis of {x in Z^n : sum coeffs[i] x[i] = 0}.
    """
    n = len(coeffs)
    v = [int(c) for c in coeffs]
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    if all(c == 0 for c in v):
        return cols
    while True:
        nonzero = [j for j in range(n) if v[j] != 0]
        if len(nonzero) == 1:
            k = nonzero[0]
            return [cols[j] for j in range(n) if j != k]
        piv = min(nonzero, key=lambda j: abs(v[j]))
        for j in nonzero:
            if j == piv:
                continue
            q = v[j] // v[piv]
            if q:
                v[j] -= q * v[piv]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[piv])]


def floor_sqrt(x: Fraction) -> int:
    """Largest integer s with s^2 <= x, for rational x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    return math.isqrt(x.numerator // x.denominator)


def quadratic_integer_range(c: Fraction, rho: Fraction) -> range:
    """All integers z with (z + c)^2 <= rho, as a range (empty if rho < 0).

    Endpoints are found from floor_sqrt plus a single exact adjustment, so
    the bounds are provably tight without any floating point.
    """
    if rho < 0:
        return range(0)
    s = floor_sqrt(rho)

    def valid(z: int) -> bool:
        t = z + c
        return t * t <= rho

    upper = math.floor(s - c)
    if valid(upper + 1):
        upper += 1
    lower = math.ceil(-s - c)
    if valid(lower - 1):
        lower -= 1
    return range(lower, upper + 1)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    pn = math.isqrt(x.numerator)
    pd = math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None
