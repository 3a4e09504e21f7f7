from itertools import product as iproduct

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wheelsym.partitions import (
    Partition,
    admissible_filter,
    compare_dominance,
    compare_lex,
    count_by_weight,
    enumerate_partitions,
    parse_partition,
    partitions_of_weight,
    slim_filter,
)


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((1, -1))


def test_multiplicity_counts_zeros_within_length():
    assert Partition((3, 0)).multiplicity(0) == 1
    assert Partition((1, 1, 0)).multiplicity(1) == 2
    assert Partition((2, 2, 2)).multiplicity(2) == 3


def test_admissibility_examples():
    assert Partition((1, 0)).is_admissible(1, 1)
    assert not Partition((1, 1)).is_admissible(1, 1)
    assert Partition((4, 2, 0)).is_admissible(1, 2)


def test_admissibility_r1_equals_multiplicity_bound():
    for n in range(1, 7):
        for d in range(11):
            for lam in partitions_of_weight(d, n):
                for k in (1, 2, 3):
                    expected = max(lam.multiplicity(v) for v in set(lam)) <= k
                    assert lam.is_admissible(k, 1) == expected


def test_slim_examples():
    assert Partition((0, 0, 0)).is_slim(1)
    assert Partition((2, 1)).is_slim(3)
    assert not Partition((3, 0)).is_slim(3)  # gap 3 is not < 3


def test_slim_count_is_power():
    for n in range(1, 6):
        for m in (1, 2, 3, 4):
            bound = (m - 1) * n * (n + 1) // 2  # max weight of an m-slim partition
            count = len(enumerate_partitions(n, bound, slim_filter(m)))
            assert count == m**n, (n, m)


def _exhaustive_slim_decompositions(lam, m):
    """Oracle: all componentwise lam = m*mu + nu with both partitions, nu slim."""
    found = []
    ranges = [range(p // m + 1) for p in lam]
    for mu_parts in iproduct(*ranges):
        nu_parts = [p - m * q for p, q in zip(lam, mu_parts)]
        if any(
            mu_parts[i] < mu_parts[i + 1] or nu_parts[i] < nu_parts[i + 1]
            for i in range(len(lam) - 1)
        ):
            continue
        mu, nu = Partition(mu_parts), Partition(nu_parts)
        if nu.is_slim(m):
            found.append((mu, nu))
    return found


def test_divide_by_examples():
    d = Partition((6, 1)).divide_by(3)
    assert (tuple(d.quotient), tuple(d.remainder)) == ((1, 0), (3, 1))
    d = Partition((5, 3, 2)).divide_by(3)
    assert (tuple(d.quotient), tuple(d.remainder)) == ((0, 0, 0), (5, 3, 2))
    d = Partition((0, 0)).divide_by(4)
    assert (tuple(d.quotient), tuple(d.remainder)) == ((0, 0), (0, 0))


def test_divide_by_matches_exhaustive_oracle():
    for n in range(1, 5):
        for d in range(13):
            for lam in partitions_of_weight(d, n):
                for m in (2, 3, 4):
                    oracle = _exhaustive_slim_decompositions(lam, m)
                    assert len(oracle) == 1, (lam, m, oracle)
                    dec = lam.divide_by(m)
                    assert (dec.quotient, dec.remainder) == oracle[0]
                    assert dec.recompose() == lam


def test_dominance_examples():
    assert compare_dominance(Partition((2, 0)), Partition((1, 1))) == "greater"
    assert compare_dominance(Partition((2, 2, 0)), Partition((3, 1, 0))) == "less"
    assert (
        compare_dominance(Partition((3, 1, 1, 1)), Partition((2, 2, 2, 0)))
        == "incomparable"
    )
    with pytest.raises(ValueError):
        compare_dominance(Partition((2, 0)), Partition((1, 0)))


def test_lex_examples():
    assert compare_lex(Partition((1, 1)), Partition((2, 0))) == -1
    assert compare_lex(Partition((2, 0)), Partition((2, 0))) == 0
    assert Partition((1, 1)) < Partition((2, 0))


def test_dominance_refined_by_lex():
    for n in range(1, 5):
        for d in range(9):
            lams = list(partitions_of_weight(d, n))
            for a in lams:
                for b in lams:
                    if compare_dominance(a, b) == "greater":
                        assert compare_lex(a, b) == 1


def test_enumerate_examples():
    slim = enumerate_partitions(2, 10, slim_filter(2))
    assert [tuple(p) for p in slim] == [(0, 0), (1, 0), (1, 1), (2, 1)]
    adm = [p for p in partitions_of_weight(3, 2) if p.is_admissible(1, 1)]
    assert sorted(tuple(p) for p in adm) == [(2, 1), (3, 0)]
    assert list(partitions_of_weight(0, 0)) == [Partition(())]


def test_count_by_weight():
    tally = count_by_weight(2, 3, admissible_filter(1, 1))
    assert tally == {0: 0, 1: 1, 2: 1, 3: 2}


def test_union_and_arithmetic():
    assert tuple(Partition((2, 1)).union(Partition((3, 0)))) == (3, 2, 1, 0)
    assert tuple(Partition((2, 1)) + Partition((1, 1))) == (3, 2)
    assert tuple(Partition((2, 1)).scale(3)) == (6, 3)


def test_parse_partition():
    assert parse_partition("3,1,0") == Partition((3, 1, 0))
    assert parse_partition("") == Partition(())


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=9), min_size=0, max_size=5),
    st.integers(min_value=2, max_value=4),
)
def test_divide_by_round_trip(parts, m):
    lam = Partition(sorted(parts, reverse=True))
    dec = lam.divide_by(m)
    assert dec.recompose() == lam
    assert dec.remainder.is_slim(m)
