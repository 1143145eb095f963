from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from unimodal.combinatorics import (
    Composition, Partition, Permutation, compose, compositions_of, count_partitions,
    cycle_type, descent_composition, divisors, mobius, partitions_of, z_value,
)


def naive_partitions(n, largest=None):
    """Recursive enumeration, largest part first."""
    if n == 0:
        return [()]
    largest = n if largest is None else largest
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in naive_partitions(n - first, first)]
    return out


@pytest.mark.parametrize("n, expected", [(1, 1), (2, -1), (12, 0)])
def test_mobius_examples(n, expected):
    assert mobius(n) == expected


def test_mobius_rejects_zero():
    with pytest.raises(ValueError):
        mobius(0)


def test_mobius_multiplicative():
    from math import gcd
    for a in range(1, 1001):
        for b in range(1, 1000 // a + 1):
            if gcd(a, b) == 1:
                assert mobius(a * b) == mobius(a) * mobius(b)


def test_mobius_sums_over_divisors():
    for n in range(1, 200):
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_partitions_small():
    assert partitions_of(0) == [()]
    assert [tuple(p) for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(10)) == 42


@pytest.mark.parametrize("n", range(13))
def test_partitions_match_recursive_enumeration(n):
    # naive enumeration yields reverse-lexicographic order too
    assert [tuple(p) for p in partitions_of(n)] == naive_partitions(n)


def test_partition_counts_match_pentagonal_recurrence():
    for n in range(31):
        assert len(partitions_of(n)) == count_partitions(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_class_sizes_sum_to_factorial(n):
    assert sum(factorial(n) // z_value(a) for a in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("alpha, z", [((1, 1, 1), 6), ((2, 2), 8), ((3, 1), 3), ((), 1)])
def test_z_values(alpha, z):
    assert z_value(alpha) == z
    assert Partition(alpha).z == z


@pytest.mark.parametrize("n", range(1, 7))
def test_z_is_centralizer_order(n):
    # n!/z_alpha counts the permutations of cycle type alpha
    sizes = {}
    for w in permutations(range(1, n + 1)):
        a = cycle_type(Permutation(w))
        sizes[a] = sizes.get(a, 0) + 1
    for a in partitions_of(n):
        assert sizes[a] == factorial(n) // z_value(a)


def test_partition_derived_fields():
    a = Partition((3, 1, 1))
    assert (a.weight, a.length) == (5, 3)
    assert a.multiplicities == {3: 1, 1: 2}
    assert sum(i * m for i, m in a.multiplicities.items()) == a.weight


@pytest.mark.parametrize("bad", [(1, 2), (0,), (2, -1)])
def test_partition_rejects_invalid(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_descent_composition_examples():
    # the ribbon with rows 46 / 28 / 7 / 135
    assert descent_composition(Permutation((4, 6, 2, 8, 7, 1, 3, 5))) == (2, 2, 1, 3)
    # swapping the first two rows' entries moves the first descent
    assert descent_composition(Permutation((4, 2, 6, 8, 7, 1, 3, 5))) == (1, 3, 1, 3)
    assert descent_composition(Permutation.identity(5)) == (5,)
    assert descent_composition(Permutation((4, 3, 2, 1))) == (1, 1, 1, 1)
    assert sorted(Composition((2, 2, 1, 3)).descent_set()) == [2, 4, 5]


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)) == (1, 1, 1, 1)
    assert cycle_type(Permutation((2, 3, 4, 1))) == (4,)
    assert cycle_type(Permutation((4, 3, 2, 1))) == (2, 2)


def test_compose_examples():
    t = Permutation((3, 1, 2))
    assert compose(Permutation.identity(3), t) == t
    assert compose(Permutation((2, 1)), Permutation((2, 1))) == (1, 2)
    assert compose(Permutation((2, 3, 1)), Permutation((2, 3, 1))) == (3, 1, 2)
    with pytest.raises(ValueError):
        compose(Permutation((1, 2)), Permutation((1, 2, 3)))


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))


permutation_words = st.integers(1, 12).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))))


@given(permutation_words)
def test_shape_and_type_weights(word):
    sigma = Permutation(word)
    assert sum(sigma.descent_composition()) == len(word)
    assert sigma.cycle_type().weight == len(word)
    assert Composition.from_descent_set(sigma.descents(), len(word)) == sigma.descent_composition()


@given(permutation_words)
def test_inverse_has_same_cycle_type(word):
    sigma = Permutation(word)
    assert compose(sigma, sigma.inverse()) == Permutation.identity(len(word))
    assert sigma.inverse().cycle_type() == sigma.cycle_type()


@given(st.lists(st.integers(1, 5), min_size=1, max_size=8))
def test_composition_round_trip(parts):
    c = Composition(parts)
    assert Composition.from_descent_set(c.descent_set(), c.size) == c


def test_compositions_of_enumerates_all():
    for n in range(1, 9):
        comps = list(compositions_of(n))
        assert len(comps) == len(set(comps)) == 2 ** (n - 1)
        assert all(sum(c) == n for c in comps)
