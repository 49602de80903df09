"""Partition and conjugacy-class bookkeeping."""

from math import factorial, lcm

import pytest
from hypothesis import given, strategies as st

from sntorsion.partitions import (
    ClassLabel,
    all_partitions,
    check_partition,
    class_size,
    element_order,
    identity_partition,
    is_prime,
    parity,
    power_cycle_type,
    prime_order_classes,
)

# number of partitions of n, for 1 <= n <= 20
PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176,
                    231, 297, 385, 490, 627]


partitions_of = st.integers(min_value=1, max_value=12).flatmap(
    lambda n: st.sampled_from(all_partitions(n))
)


def test_counts_match_the_partition_numbers():
    for n, expected in enumerate(PARTITION_COUNTS, start=1):
        assert len(all_partitions(n)) == expected


def test_partitions_are_lex_decreasing_and_unique():
    for n in range(1, 13):
        parts = all_partitions(n)
        assert all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))
        assert all(sum(mu) == n for mu in parts)


def test_check_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((3, 0))
    with pytest.raises(ValueError):
        check_partition(())


def test_identity_partition():
    assert identity_partition(5) == (1, 1, 1, 1, 1)
    assert element_order(identity_partition(5)) == 1


@given(partitions_of, st.integers(min_value=1, max_value=40))
def test_power_cycle_type_reduces_the_order(mu, d):
    nu = power_cycle_type(mu, d)
    assert sum(nu) == sum(mu)
    k = element_order(mu)
    assert element_order(nu) == k // _gcd(k, d)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def test_power_cycle_type_examples():
    # a 6-cycle squared is two 3-cycles; cubed is three 2-cycles
    assert power_cycle_type((6,), 2) == (3, 3)
    assert power_cycle_type((6,), 3) == (2, 2, 2)
    assert power_cycle_type((6, 4), 2) == (3, 3, 2, 2)


@given(partitions_of)
def test_element_order_is_the_lcm(mu):
    assert element_order(mu) == lcm(*mu)


@given(partitions_of, st.integers(min_value=1, max_value=12))
def test_parity_is_a_homomorphism_under_powers(mu, d):
    # sign(g^d) = sign(g)^d
    assert parity(power_cycle_type(mu, d)) == parity(mu) ** d


def test_class_sizes_sum_to_the_group_order():
    for n in range(1, 11):
        assert sum(class_size(mu) for mu in all_partitions(n)) == factorial(n)


def test_class_size_examples():
    assert class_size((2, 1, 1)) == 6  # transpositions in S_4
    assert class_size((3, 1)) == 8  # 3-cycles in S_4
    assert class_size((13,)) == factorial(12)


def test_prime_order_classes():
    labels = prime_order_classes(13, 3)
    assert [lab.j for lab in labels] == [1, 2, 3, 4]
    assert all(lab.r == 3 for lab in labels)
    assert prime_order_classes(13, 11) == [ClassLabel(11, 1, 13)]
    assert prime_order_classes(7, 11) == []


def test_class_label_round_trip():
    lab = ClassLabel(3, 2, 13)
    assert lab.cycle_type() == (3, 3) + (1,) * 7
    assert str(lab) == "3.2"
    assert element_order(lab.cycle_type()) == 3


def test_is_prime_small_values():
    primes = [p for p in range(60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
