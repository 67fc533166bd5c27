"""Exact integer and rational matrix routines.

Everything here works over Python ints and ``fractions.Fraction``; no
floating point is used anywhere.  The routines are sized for the small
dense matrices produced by surgery diagrams (a handful of rows up to a
few hundred), so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


Matrix = list[list[int]]


def copy_matrix(m):
    return [list(row) for row in m]


def det(m: Matrix) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: division is exact at every step.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: Matrix) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns nonnegative invariant factors ``d_1 | d_2 | ...`` padded with
    zeros up to ``min(rows, cols)``.
    """
    a = copy_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        pivot = _smallest_nonzero(a, t)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            reduced = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                    reduced = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j] != 0:
                        for i in range(rows):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                    reduced = True
            if not reduced:
                break
        # Pivot must divide every remaining entry for d_1 | d_2 | ... ;
        # if not, fold the offending row in and redo this corner.
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(t, cols):
                a[t][j] += a[offender][j]
            continue
        t += 1
    for k in range(t):
        diag.append(abs(a[k][k]))
    diag.extend([0] * (min(rows, cols) - t))
    return diag


def _smallest_nonzero(a, t):
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def signature(m: Matrix) -> int:
    """Signature of a symmetric integer matrix.

    Congruence-diagonalizes over the rationals (symmetric Gaussian
    elimination); a zero diagonal with a nonzero off-diagonal entry is
    exposed by adding the partner row/column, which creates a nonzero
    pivot without leaving exact arithmetic.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    live = list(range(n))
    while live:
        k = next((i for i in live if a[i][i] != 0), None)
        if k is None:
            pair = next(
                ((i, j) for i in live for j in live if i != j and a[i][j] != 0),
                None,
            )
            if pair is None:
                break
            i, j = pair
            # x_i -> x_i + x_j turns the hyperbolic corner into a pivot.
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        live.remove(k)
        for i in live:
            if a[i][k] != 0:
                f = a[i][k] / d
                for t in range(n):
                    a[i][t] -= f * a[k][t]
                for t in range(n):
                    a[t][i] -= f * a[t][k]
    return pos - neg


def solve_exact(m: Matrix, rhs: list) -> list[Fraction]:
    """Solve ``m x = rhs`` exactly over the rationals.

    Raises ``ZeroDivisionError`` if the matrix is singular.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                for c in range(col, n + 1):
                    a[r][c] -= f * a[col][c]
    return [a[r][n] / a[r][r] for r in range(n)]
