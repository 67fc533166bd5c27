import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidsurgery import braid as B
from oracles import burau3, burau3_is_identity


def word(strands, *letters):
    return B.BraidWord(strands, tuple(letters))


words3 = st.lists(
    st.sampled_from([1, -1, 2, -2]), min_size=0, max_size=14
).map(lambda ls: word(3, *ls))


# -- parsing and formatting -------------------------------------------------

def test_parse_expands_exponents():
    w = B.parse_braid("B3 s1^3 s2^-1")
    assert w.strands == 3
    assert len(w) == 4
    assert w.c_plus == 3 and w.c_minus == 1
    assert w.letters == (1, 1, 1, -2)


def test_parse_identity_word():
    w = B.parse_braid("B2")
    assert w.strands == 2 and len(w) == 0


@pytest.mark.parametrize(
    "text", ["B3 s3", "s1 s2", "B3 sx", "B3 s1^0", "B1 s1", "B3 s0"]
)
def test_parse_rejects(text):
    with pytest.raises(B.BraidError):
        B.parse_braid(text)


@given(words3)
def test_format_round_trips(w):
    assert B.parse_braid(B.format_braid(w)) == w


def test_format_merges_runs():
    assert B.format_braid(word(3, 1, 1, 1, -2, 2, 2)) == "B3 s1^3 s2^-1 s2^2"


# -- permutations and crossing statistics -----------------------------------

def test_permutation_examples():
    p = B.permutation(B.parse_braid("B3 s1^3 s2^-1"))
    assert p.cycle_type == (3,) and p.is_knot
    p = B.permutation(B.parse_braid("B4"))
    assert p.permutation == (1, 2, 3, 4) and p.num_components == 4
    p = B.permutation(word(2, 1, 1))
    assert p.permutation == (1, 2) and p.num_components == 2


def test_components_numbered_by_smallest_position():
    p = B.permutation(word(4, 2, 2))  # strands 2,3 swap twice; all fixed
    assert p.component_of == (1, 2, 3, 4)
    p = B.permutation(word(3, 2))
    assert p.component_of == (1, 2, 2)


def test_crossing_stats_hopf_link():
    stats = B.crossing_stats(word(2, 1, 1))
    assert stats.per_component == ((0, 0), (0, 0))
    assert stats.linking == ((0, 1), (1, 0))
    assert stats.d_minus == (0, 0)
    assert stats.axis_linking == (1, 1)


def test_crossing_stats_single_component():
    stats = B.crossing_stats(B.parse_braid("B3 s1^3 s2^-1"))
    assert stats.per_component == ((3, 1),)
    assert stats.d_minus == (0,)
    assert stats.axis_linking == (3,)


def test_negative_hopf_linking():
    stats = B.crossing_stats(word(2, -1, -1))
    assert stats.linking == ((0, -1), (-1, 0))
    assert stats.d_minus == (2, 2)
    assert stats.inter_negative == ((0, 2), (2, 0))


@given(words3)
def test_linking_matrix_symmetric_integer(w):
    stats = B.crossing_stats(w)
    n = len(stats.axis_linking)
    for i in range(n):
        for j in range(n):
            assert stats.linking[i][j] == stats.linking[j][i]
            assert isinstance(stats.linking[i][j], int)
    # every letter is attributed exactly once:
    # self crossings + positive inter (2*lk + d_-) + negative inter (d_-)
    total_self = sum(cp + cm for cp, cm in stats.per_component)
    pos_inter = sum(
        2 * stats.linking[i][j] + stats.inter_negative[i][j]
        for i in range(n)
        for j in range(i + 1, n)
    )
    neg_inter = sum(
        stats.inter_negative[i][j] for i in range(n) for j in range(i + 1, n)
    )
    assert total_self + pos_inter + neg_inter == len(w)


def test_doubling_pure_braid_doubles_linking():
    rng = random.Random(7)
    for _ in range(30):
        m = rng.choice([2, 3, 4])
        letters = []
        for _ in range(rng.randint(1, 5)):
            g = rng.randint(1, m - 1)
            s = rng.choice([2, -2])
            letters.extend([g if s > 0 else -g] * 2)
        w = B.BraidWord(m, tuple(letters))
        assert B.permutation(w).permutation == tuple(range(1, m + 1))
        single = B.crossing_stats(w)
        double = B.crossing_stats(B.compose(w, w))
        for i in range(m):
            for j in range(m):
                assert double.linking[i][j] == 2 * single.linking[i][j]


# -- half twist and word arithmetic -----------------------------------------

@pytest.mark.parametrize("m,n", [(2, 1), (3, 3), (4, 6), (5, 10)])
def test_garside_length(m, n):
    w = B.garside(m)
    assert len(w) == n == m * (m - 1) // 2
    assert w.c_minus == 0


def test_garside_three_strands():
    assert B.garside(3).letters == (1, 2, 1)


def test_garside_rejects_small():
    with pytest.raises(B.BraidError):
        B.garside(1)


def test_compose_power_inverse():
    w = word(2, 1)
    assert B.power(w, 2).letters == (1, 1)
    assert B.power(w, -2).letters == (-1, -1)
    assert B.inverse(word(3, 1, -2)).letters == (2, -1)
    with pytest.raises(B.BraidError):
        B.compose(word(2, 1), word(3, 1))


def test_delta_squared_times_adds_positive_letters():
    w = B.parse_braid("B3 s1^3 s2^-1")
    for ell in (1, 2, 3):
        out = B.delta_squared_times(w, ell)
        assert len(out) == len(w) + 2 * ell * 3
        assert out.c_plus == w.c_plus + ell * 6
        assert out.c_minus == w.c_minus
        stats = B.crossing_stats(out)
        assert stats.c_plus == w.c_plus + ell * 6


# -- handle reduction and the word problem ----------------------------------

def test_braid_relation_trivial():
    w = B.parse_braid("B3 s1 s2 s1 s2^-1 s1^-1 s2^-1")
    assert B.is_trivial(w)


def test_far_commutation_trivial():
    w = B.parse_braid("B4 s1 s3 s1^-1 s3^-1")
    assert B.is_trivial(w)


def test_delta_squared_central():
    for m in (2, 3, 4):
        d2 = B.power(B.garside(m), 2)
        for g in range(1, m):
            gen = word(m, g)
            conj = B.compose(
                B.compose(d2, gen), B.inverse(B.compose(gen, d2))
            )
            assert B.is_trivial(conj)


def test_nontrivial_words_detected():
    assert not B.is_trivial(B.parse_braid("B3 s1^3 s2^-1"))
    assert not B.is_trivial(word(2, 1))
    assert not B.is_trivial(word(3, 1, -2))


@given(words3)
@settings(max_examples=150, deadline=None)
def test_reduction_agrees_with_burau(w):
    # the reduced Burau representation is faithful on three strands
    assert B.is_trivial(w) == burau3_is_identity(w.letters)


def test_burau_oracle_sees_the_relation():
    assert burau3_is_identity([1, 2, 1, -2, -1, -2])
    assert not burau3_is_identity([1])
    assert burau3([1, 2, 1]) == burau3([2, 1, 2])


@given(words3)
@settings(max_examples=100, deadline=None)
def test_reduction_preserves_permutation_and_exponent(w):
    reduced = B.handle_reduce(w)
    assert B.permutation(reduced).permutation == B.permutation(w).permutation
    assert reduced.exponent_sum == w.exponent_sum


@given(words3)
@settings(max_examples=100, deadline=None)
def test_word_times_inverse_is_trivial(w):
    assert B.is_trivial(B.compose(w, B.inverse(w)))


def test_exponent_sum_obstruction_in_b2():
    # the two-strand group is infinite cyclic: triviality == zero exponent sum
    rng = random.Random(11)
    for _ in range(60):
        letters = tuple(rng.choice([1, -1]) for _ in range(rng.randint(0, 12)))
        w = B.BraidWord(2, letters)
        assert B.is_trivial(w) == (w.exponent_sum == 0)


def test_budget_cap_raises():
    w = B.power(B.parse_braid("B4 s1 s2 s3 s1^-1 s2^-1 s3^-1"), 6)
    with pytest.raises(B.ReductionBudgetExceeded):
        B.handle_reduce(w, max_steps=2)


def test_sigma_signs():
    assert B.is_sigma_positive(word(2, 1))
    assert B.is_sigma_negative(word(2, -1))
    assert not B.is_sigma_positive(word(2, 1, -1))
    assert not B.is_sigma_negative(word(2, 1, -1))
    # lowest index wins: s1 positive beats s2 negative
    assert B.is_sigma_positive(word(3, 1, -2))


# -- Dehornoy floor probe ----------------------------------------------------

def test_floor_probe_delta_powers():
    d6 = B.power(B.garside(3), 6)
    assert B.dehornoy_floor_at_least(d6, 3)
    assert B.dehornoy_floor_at_least(d6, 2)
    assert not B.dehornoy_floor_at_least(d6, 4)


def test_floor_probe_small_braid():
    assert not B.dehornoy_floor_at_least(word(2, 1), 1)
    assert B.dehornoy_floor_at_least(word(2, 1), 0)


def test_floor_probe_symmetric_under_inverse():
    d6 = B.power(B.garside(3), 6)
    assert B.dehornoy_floor_at_least(B.inverse(d6), 3)


@given(words3, st.integers(min_value=1, max_value=3))
@settings(max_examples=60, deadline=None)
def test_floor_probe_monotone(w, d):
    if B.dehornoy_floor_at_least(w, d):
        assert B.dehornoy_floor_at_least(w, d - 1)


def test_floor_probe_rejects_negative():
    with pytest.raises(B.BraidError):
        B.dehornoy_floor_at_least(word(2, 1), -1)


# -- hypothesis report -------------------------------------------------------

def test_hypothesis_seven_positive():
    rep = B.check_hypothesis(B.parse_braid("B3 s1^7 s2^-1"))
    assert rep.is_knot and rep.cond_tb and rep.cond_parity
    assert rep.per_component_cond == (True,)
    assert rep.hyperbolicity == "unknown"


def test_hypothesis_three_positive_fails_tb():
    rep = B.check_hypothesis(B.parse_braid("B3 s1^3 s2^-1"))
    assert not rep.cond_tb


def test_hypothesis_b2_power_five():
    rep = B.check_hypothesis(B.parse_braid("B2 s1^5"), hyperbolic_asserted=True)
    assert rep.is_knot and rep.cond_tb and rep.cond_parity
    assert rep.hyperbolicity == "asserted"


@given(words3)
def test_knot_case_conditions_agree(w):
    rep = B.check_hypothesis(w)
    if rep.is_knot:
        assert rep.cond_tb == rep.per_component_cond[0]


# -- families ----------------------------------------------------------------

def test_square_knot_recipe():
    assert B.square_knot_recipe(word(3, 1, 2))  # 3-cycle squared is a 3-cycle
    assert not B.square_knot_recipe(word(4, 1, 2, 3))
    assert not B.square_knot_recipe(word(3, 1))  # transposition squares to id


def test_example_braid():
    assert B.example_braid(1).letters == (1, 1, 1, -2)
    assert B.example_braid(0).letters == (1, -2)
    assert B.example_braid(2).letters == (1, 1, 1, 1, 1, -2)
    with pytest.raises(B.BraidError):
        B.example_braid(-1)


def test_relation_insertion_preserves_element():
    # words differing by one inserted relation or far commutation stay equal
    rng = random.Random(23)
    for _ in range(60):
        m = rng.choice([3, 4, 5])
        letters = [
            rng.choice([1, -1]) * rng.randint(1, m - 1)
            for _ in range(rng.randint(0, 8))
        ]
        pos = rng.randint(0, len(letters))
        if rng.random() < 0.5 or m < 4:
            g = rng.randint(1, m - 2)
            patch = [g, g + 1, g, -(g + 1), -g, -(g + 1)]
        else:
            g = rng.randint(1, m - 3)
            h = rng.randint(g + 2, m - 1)
            patch = [g, h, -g, -h]
        w1 = B.BraidWord(m, tuple(letters))
        w2 = B.BraidWord(m, tuple(letters[:pos] + patch + letters[pos:]))
        assert B.is_trivial(B.compose(w1, B.inverse(w2)))
        assert B.is_trivial(B.compose(w2, B.inverse(w1)))
