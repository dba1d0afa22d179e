import pytest
from hypothesis import given, settings, strategies as st

from dconsec.combi import binomial, compositions, factorial
from dconsec.counts import (
    CountSpec,
    _outer_factor,
    count_d0,
    count_d0_formula,
    count_d1,
    count_exact,
    count_general,
    count_general_reference,
    q_value,
    q_value_reference,
    residue_profile,
)
from dconsec.oracle import oracle_count
from tables import TABLE, column


@pytest.mark.parametrize("n,d,expected", [(8, 2, [4, 4]), (16, 3, [6, 5, 5]), (5, 3, [2, 2, 1]), (2, 5, [1, 1, 0, 0, 0])])
def test_residue_profile(n, d, expected):
    sizes = residue_profile(n, d)
    assert sizes == expected
    assert sizes == [sum(1 for i in range(1, n + 1) if i % d == k % d) for k in range(1, d + 1)]


def test_residue_profile_rejects_circular():
    with pytest.raises(ValueError):
        residue_profile(5, 0)


def test_countspec_validation():
    assert CountSpec(3, 0).d == 0
    with pytest.raises(ValueError):
        CountSpec(0, 1)
    with pytest.raises(ValueError):
        CountSpec(3, -1)


def test_q_examples():
    assert q_value(5, 1, [1, 1]) == binomial(3, 2) * 2 == 6
    assert q_value(7, 3, []) == 1
    assert q_value(4, 2, [1]) == 2
    assert q_value(4, 2, [1, 1]) == 2
    # hand enumeration of the four assignments for n=4, d=2, L=[1,1]:
    # both parts in one block of size 2 -> C(0, 2) = 0; split -> C(1,1)*1 each
    assert q_value_reference(4, 2, [1, 1]) == 0 + 1 + 1 + 0


def test_q_rejects_nonpositive_parts():
    with pytest.raises(ValueError):
        q_value(5, 2, [1, 0])


parts_lists = st.lists(st.integers(min_value=1, max_value=4), max_size=6)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=1, max_value=14), st.integers(min_value=1, max_value=4), parts_lists)
def test_q_dynamic_program_matches_enumeration(n, d, parts):
    assert q_value(n, d, parts) == q_value_reference(n, d, parts)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=14), st.integers(min_value=1, max_value=4), parts_lists, st.randoms())
def test_q_invariant_under_reordering(n, d, parts, rnd):
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    assert q_value_reference(n, d, shuffled) == q_value_reference(n, d, parts)


def test_robbins_reduction_small():
    for n in range(1, 9):
        for r in range(1, n + 1):
            for c in range(1, r + 1):
                lhs = sum(q_value_reference(n, 1, comp) for comp in compositions(r, c))
                assert lhs == binomial(r - 1, c - 1) * binomial(n - r, c) * factorial(c)


@pytest.mark.parametrize("n,expected", [(5, 10), (8, 2832), (2, 0), (12, 43546872), (1, 1)])
def test_count_d0(n, expected):
    assert count_d0(n) == expected


def test_d0_formula_small_n_deviation():
    assert count_d0_formula(1) == -1
    assert count_d0_formula(2) == -2
    assert [count_d0_formula(n) for n in range(3, 17)] == column(0)[2:]


@pytest.mark.parametrize("n,expected", [(4, 2), (7, 646), (1, 1)])
def test_count_d1(n, expected):
    assert count_d1(n) == expected


@pytest.mark.parametrize("n,d,expected", [(3, 2, 4), (4, 2, 16), (9, 3, 123456), (16, 2, 3648471927912)])
def test_count_general(n, d, expected):
    assert count_general(n, d) == expected


def test_count_general_hand_expansion():
    # n=3, d=2: 3! - 2 * 1! * C(1,1) * q([1]) with q_{3,2}([1]) = 1
    assert q_value(3, 2, [1]) == 1
    assert factorial(3) - 2 * factorial(1) * q_value(3, 2, [1]) == count_general(3, 2)


@pytest.mark.parametrize("n,d", [(3, 3), (4, 1), (4, 0), (1, 2)])
def test_count_general_domain(n, d):
    with pytest.raises(ValueError):
        count_general(n, d)


@pytest.mark.parametrize("n", range(3, 10))
def test_grouped_sum_matches_literal_compositions(n):
    for d in range(2, n):
        assert count_general(n, d) == count_general_reference(n, d)


def test_leading_term_and_upper_bound():
    for n in range(3, 13):
        for d in range(2, n):
            sizes = residue_profile(n, d)
            assert _outer_factor(n, sizes, [0] * d, [0] * d) * q_value(n, d, []) == factorial(n)
            assert 0 <= count_general(n, d) <= factorial(n)


@pytest.mark.parametrize("n,d,expected", [(8, 2, 9512), (2, 3, 2)] + [(1, d, 1) for d in range(6)])
def test_count_exact_examples(n, d, expected):
    assert count_exact(CountSpec(n, d)) == expected
    assert count_exact(n, d) == expected


def test_free_case():
    for n in range(1, 13):
        for d in range(n, n + 3):
            assert count_exact(n, d) == factorial(n)


@pytest.mark.parametrize("d", range(4))
def test_table_columns(d):
    assert [count_exact(n, d) for n in sorted(TABLE)] == column(d)


def test_small_oracle_agreement():
    for n in range(1, 8):
        for d in range(0, n + 2):
            assert count_exact(n, d) == oracle_count(n, d)


def test_d0_formula_against_oracle():
    for n in range(3, 9):
        assert count_d0_formula(n) == oracle_count(n, 0)
