"""Graded-lex enumeration against brute-force sorting."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lejalab.numeration import (
    block_size,
    compare,
    degree_block,
    graded_lex_key,
    index_to_multi,
    multi_to_index,
    successor,
)


def brute_enumeration(s, max_degree):
    """All multi-indices with |k| <= max_degree, sorted graded-lex."""
    pool = itertools.product(range(max_degree + 1), repeat=s)
    return sorted((k for k in pool if sum(k) <= max_degree), key=graded_lex_key)


def test_block_size_examples():
    assert block_size(2, 2) == 6
    assert block_size(1, 7) == 8
    # brute force count of |k| <= 1 in N^3
    assert block_size(3, 1) == len(brute_enumeration(3, 1)) == 4


def test_block_size_monotone_and_errors():
    sizes = [block_size(3, d) for d in range(8)]
    assert sizes == sorted(sizes) and len(set(sizes)) == len(sizes)
    with pytest.raises(ValueError):
        block_size(0, 3)
    with pytest.raises(ValueError):
        block_size(2, -1)


def test_block_size_overflow_reported():
    with pytest.raises(OverflowError):
        block_size(30, 40)


def test_compare_examples():
    assert compare((0, 2), (1, 1)) == -1
    assert compare((1, 0, 0), (0, 0, 2)) == -1
    assert compare((0, 1, 1), (0, 1, 1)) == 0
    with pytest.raises(ValueError):
        compare((0, 1), (0, 1, 1))
    with pytest.raises(ValueError):
        compare((0, -1), (0, 1))


def test_compare_total_order_brute_force():
    for s in (1, 2, 3):
        all_k = brute_enumeration(s, 5)
        for a, b in itertools.combinations(all_k, 2):
            # antisymmetry on distinct elements
            assert compare(a, b) == -compare(b, a) != 0
        # transitivity: compare agrees with position in the sorted listing
        for i, a in enumerate(all_k):
            for j, b in enumerate(all_k):
                expected = (i > j) - (i < j)
                assert compare(a, b) == expected


def test_index_to_multi_examples():
    assert index_to_multi(3, 1) == (0, 0, 0)
    assert index_to_multi(3, 6) == (0, 1, 1)
    assert index_to_multi(2, 5) == (1, 1)
    with pytest.raises(ValueError):
        index_to_multi(2, 0)


def test_multi_to_index_examples():
    assert multi_to_index((0, 0, 0)) == 1
    assert multi_to_index((0, 1, 1)) == 6
    assert multi_to_index((2, 0)) == 6


def test_successor_examples():
    assert successor((2, 0)) == (0, 3)
    assert successor((0, 0, 0)) == (0, 0, 1)
    # brute force settles the step after (0,1,1): degree-2 block of N^3 runs
    # (0,0,2) (0,1,1) (0,2,0) (1,0,1) (1,1,0) (2,0,0)
    all_k = brute_enumeration(3, 3)
    position = all_k.index((0, 1, 1))
    assert all_k[position + 1] == (0, 2, 0)
    assert successor((0, 1, 1)) == (0, 2, 0)
    assert successor((5,)) == (6,)


def test_enumeration_matches_brute_force():
    for s in (1, 2, 3):
        all_k = brute_enumeration(s, 5)
        for n, k in enumerate(all_k, start=1):
            assert index_to_multi(s, n) == k
            assert multi_to_index(k) == n
            if n < len(all_k):
                assert successor(k) == all_k[n]


def test_bijection_and_successor_ranges():
    for s in (1, 2, 3, 4):
        previous = None
        for n in range(1, 2001):
            k = index_to_multi(s, n)
            assert multi_to_index(k) == n
            if previous is not None:
                assert successor(previous) == k
            previous = k


def test_block_boundary_is_lex_maximum():
    for s in (1, 2, 3, 4):
        for d in range(6):
            top = index_to_multi(s, block_size(s, d))
            assert top == (d,) + (0,) * (s - 1)


def test_degree_block_counts():
    for s in (1, 2, 3):
        for d in range(6):
            block = degree_block(s, d)
            exact = [k for k in brute_enumeration(s, d) if sum(k) == d]
            assert block.size == len(exact)
            assert block.end_index == block_size(s, d)
            assert index_to_multi(s, block.start_index) == exact[0]


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=100_000))
def test_bijection_property(s, n):
    assert multi_to_index(index_to_multi(s, n)) == n
