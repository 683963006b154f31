import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from partition_lab.partitions import (D, DS, E, P, S, PartitionClass, class_contains,
                                      enumerate_partitions, format_partition, omega_letters,
                                      omega_weight, parse_partition, partitions_up_to,
                                      render_ferrers, statistics)


def _all_partitions(n, largest=None):
    """Plain recursive oracle, independent of the library enumerator."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in _all_partitions(n - first, first)]
    return out


def _k_strict(pi, k):
    # at most one part, counted with multiplicity, in each block {mk+1, ..., mk+k-1}
    blocks = Counter(p // k for p in pi if p % k)
    return all(c <= 1 for c in blocks.values())


def _even_multiples(pi, k):
    return all(p % k == 0 for p in pi) and all(c % 2 == 0 for c in Counter(pi).values())


ORACLES = {
    "P": lambda pi, k: True,
    "D": lambda pi, k: len(set(pi)) == len(pi),
    "S": _k_strict,
    "DS": lambda pi, k: len(set(pi)) == len(pi) and _k_strict(pi, k),
    "E": _even_multiples,
}


@pytest.mark.parametrize("kind,k", [("P", 1), ("D", 1)] + [(x, k) for x in ("S", "DS", "E")
                                                           for k in (1, 2, 3, 4)])
def test_enumeration_matches_filtered_oracle(kind, k):
    cls = PartitionClass(kind, k)
    for n in range(19):
        expected = [pi for pi in _all_partitions(n) if ORACLES[kind](pi, k)]
        assert enumerate_partitions(cls, n) == expected


def test_three_strict_partitions_of_ten():
    listed = {(10,), (9, 1), (8, 2), (7, 3), (6, 4), (6, 3, 1), (5, 3, 2), (4, 3, 3),
              (3, 3, 3, 1)}
    got = enumerate_partitions(S(3), 10)
    assert len(got) == 9 and set(got) == listed


def test_bounds_and_empty_partition():
    assert enumerate_partitions(S(3), 0) == [()]
    assert enumerate_partitions(P().bounded(3, 2), 6) == [(3, 3)]
    assert enumerate_partitions(D().bounded(4), 11) == []


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 14), st.sampled_from(["P", "D", "S", "DS", "E"]), st.integers(1, 4),
       st.integers(1, 8), st.integers(0, 6))
def test_membership_agrees_with_enumeration(n, kind, k, max_part, max_length):
    cls = PartitionClass(kind, k).bounded(max_part, max_length)
    members = set(enumerate_partitions(cls, n))
    for pi in _all_partitions(n):
        assert class_contains(cls, pi) == (pi in members)


def test_partitions_up_to_is_graded():
    sizes = [sum(pi) for pi in partitions_up_to(D(), 8)]
    assert sizes == sorted(sizes) and len(sizes) == sum(
        len(enumerate_partitions(D(), n)) for n in range(9))


def test_labelling_weights_of_sample():
    pi = (10, 10, 7, 5, 2)
    assert omega_weight(pi, 2) == (10, 9, 8, 7)
    assert omega_weight(pi, 3) == (8, 6, 5, 6, 5, 4)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 20), max_size=8).map(lambda xs: tuple(sorted(xs, reverse=True))),
       st.integers(1, 5))
def test_weight_counts_every_cell_once(pi, k):
    w = omega_weight(pi, k)
    assert sum(w) == sum(pi)
    # odd-indexed rows use the first k letters
    assert sum(w[:k]) == sum(pi[0::2])


def test_render_labels_rows_cyclically():
    assert render_ferrers((4, 3), 2).splitlines() == ["a b a b", "c d c"]
    assert omega_letters(4) == ("a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4")


def test_statistics():
    st_ = statistics((9, 7, 6, 5, 3), 3)
    assert (st_.size, st_.length) == (30, 5)
    assert (st_.odd_indexed_sum, st_.even_indexed_sum) == (18, 12)
    assert (st_.odd_parts_odd_indexed, st_.odd_parts_even_indexed) == (2, 2)
    # odd-indexed parts 9, 6, 3 are all 0 mod 3; even-indexed 7, 5 are 1 and 2 mod 3
    assert (st_.o(1), st_.o(2), st_.e(1), st_.e(2)) == (0, 0, 1, 1)


def test_parse_and_format():
    assert parse_partition("2,10,10,7,5") == (10, 10, 7, 5, 2)
    assert parse_partition("()") == () and format_partition(()) == "()"
    with pytest.raises(ValueError):
        parse_partition("3,0")
    with pytest.raises(ValueError):
        PartitionClass.parse("Q7")
    assert PartitionClass.parse("DS3") == DS(3) and PartitionClass.parse("E2") == E(2)


def test_statistics_examples():
    s = statistics((7, 6, 4), 3)
    assert (s.o(1), s.e(1)) == (2, 0)
    s = statistics((10, 10, 7, 5, 2))
    assert (s.odd_indexed_sum, s.even_indexed_sum) == (19, 15)
    # odd-indexed parts 10, 7, 2 hold one odd part; even-indexed 10, 5 hold one
    assert (s.odd_parts_odd_indexed, s.odd_parts_even_indexed) == (1, 1)
    assert statistics(()).size == 0 and statistics(()).residue_counts_odd == (0,)
