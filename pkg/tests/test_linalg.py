import random
from fractions import Fraction

import pytest

from braidsurgery import linalg
from oracles import congruence, det_cofactor, invariant_factors_by_minors, random_unimodular


def random_matrix(rng, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def test_det_matches_cofactor_expansion():
    rng = random.Random(101)
    for _ in range(120):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n)
        assert linalg.det(m) == det_cofactor(m)


def test_det_known_values():
    assert linalg.det([]) == 1
    assert linalg.det([[0, 1], [1, -5]]) == -1
    assert linalg.det([[0, 3], [3, 7]]) == -9
    assert linalg.det([[0, 1, 0], [1, -4, 1], [0, 1, -2]]) == 2


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        linalg.det([[1, 2, 3], [4, 5, 6]])


def test_snf_against_minor_gcds():
    rng = random.Random(202)
    for _ in range(60):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n, -4, 4)
        assert linalg.smith_normal_form(m) == invariant_factors_by_minors(m)


def test_snf_divisibility_chain_and_det_product():
    rng = random.Random(303)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n)
        snf = linalg.smith_normal_form(m)
        for a, b in zip(snf, snf[1:]):
            if b != 0:
                assert a != 0 and b % a == 0
        d = linalg.det(m)
        if d != 0:
            prod = 1
            for x in snf:
                prod *= x
            assert prod == abs(d)


def test_signature_on_known_congruence_classes():
    rng = random.Random(404)
    for _ in range(80):
        n = rng.randint(1, 5)
        diag_entries = [rng.choice([-3, -1, 0, 1, 2, 5]) for _ in range(n)]
        d = [[diag_entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        u = random_unimodular(rng, n)
        m = congruence(u, d)
        expected = sum(1 for x in diag_entries if x > 0) - sum(
            1 for x in diag_entries if x < 0
        )
        assert linalg.signature(m) == expected


def test_signature_hyperbolic_block():
    assert linalg.signature([[0, 1], [1, 0]]) == 0
    assert linalg.signature([[0, 1], [1, -5]]) == 0
    assert linalg.signature([[2, 0], [0, 3]]) == 2


def test_signature_requires_symmetry():
    with pytest.raises(ValueError):
        linalg.signature([[0, 1], [2, 0]])


def test_solve_exact_roundtrip():
    rng = random.Random(505)
    solved = 0
    while solved < 40:
        n = rng.randint(1, 5)
        m = random_matrix(rng, n)
        if linalg.det(m) == 0:
            continue
        rhs = [rng.randint(-5, 5) for _ in range(n)]
        x = linalg.solve_exact(m, rhs)
        for i in range(n):
            assert sum(Fraction(m[i][j]) * x[j] for j in range(n)) == rhs[i]
        solved += 1


def test_solve_exact_singular():
    with pytest.raises(ZeroDivisionError):
        linalg.solve_exact([[1, 1], [1, 1]], [1, 2])


def test_signature_invariant_under_simultaneous_permutation():
    rng = random.Random(606)
    for _ in range(30):
        n = rng.randint(2, 5)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-4, 4)
        perm = list(range(n))
        rng.shuffle(perm)
        permuted = [[m[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
        assert linalg.signature(permuted) == linalg.signature(m)
