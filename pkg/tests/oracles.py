"""Independent oracles used only by the test suite.

These deliberately avoid the package's own code paths: the braid
word-problem oracle is the reduced Burau representation over exact
Laurent polynomials (faithful on three strands), the determinant
oracle is cofactor expansion, and the invariant-factor oracle is the
gcd-of-minors formula.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# Laurent polynomials over Z as sparse {exponent: coefficient} dicts.

def lp(d=None):
    out = {k: v for k, v in (d or {}).items() if v}
    return out


def lp_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return lp(out)


def lp_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            out[ka + kb] = out.get(ka + kb, 0) + va * vb
    return lp(out)


LP_ONE = {0: 1}
LP_ZERO = {}


def mat_mul(x, y):
    return tuple(
        tuple(
            lp_add(lp_mul(x[i][0], y[0][j]), lp_mul(x[i][1], y[1][j]))
            for j in range(2)
        )
        for i in range(2)
    )


BURAU_GEN = {
    1: ((lp({1: -1}), LP_ONE), (LP_ZERO, LP_ONE)),
    -1: ((lp({-1: -1}), lp({-1: 1})), (LP_ZERO, LP_ONE)),
    2: ((LP_ONE, LP_ZERO), (lp({1: 1}), lp({1: -1}))),
    -2: ((LP_ONE, LP_ZERO), (LP_ONE, lp({-1: -1}))),
}

BURAU_ID = ((LP_ONE, LP_ZERO), (LP_ZERO, LP_ONE))


def burau3(letters) -> tuple:
    """Reduced Burau matrix of a word in the three-strand group."""
    m = BURAU_ID
    for x in letters:
        m = mat_mul(m, BURAU_GEN[x])
    return m


def burau3_is_identity(letters) -> bool:
    return burau3(letters) == BURAU_ID


# ---------------------------------------------------------------------------
# Integer matrix oracles.

def det_cofactor(m) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det_cofactor(minor)
    return total


def invariant_factors_by_minors(m) -> list[int]:
    """d_k = gcd(k-minors) / gcd((k-1)-minors); zero once minors vanish."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                sub = [[m[i][j] for j in ci] for i in ri]
                g = gcd(g, abs(det_cofactor(sub)))
        if g == 0:
            out.append(0)
            prev = 0
        else:
            out.append(g // prev)
            prev = g
    return out


def random_unimodular(rng, n: int):
    """Product of random elementary integer row operations; det is +-1."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        return [[rng.choice([-1, 1])]]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for t in range(n):
            m[i][t] += c * m[j][t]
    return m


def congruence(u, d):
    """u^T d u for integer matrices (exactly)."""
    n = len(u)
    ud = [
        [sum(u[k][i] * d[k][t] for k in range(n)) for t in range(n)]
        for i in range(n)
    ]
    return [
        [sum(ud[i][k] * u[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
