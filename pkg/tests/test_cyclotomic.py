"""Number-theoretic helpers: Moebius, totient, Ramanujan sums."""

from math import gcd, isclose, pi
import cmath

from hypothesis import given, strategies as st

from sntorsion.cyclotomic import euler_phi, mobius, ramanujan_sum

ks = st.integers(min_value=1, max_value=200)


def test_mobius_small_values():
    assert [mobius(k) for k in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


@given(ks, ks)
def test_mobius_is_multiplicative_on_coprime_arguments(a, b):
    if gcd(a, b) == 1:
        assert mobius(a * b) == mobius(a) * mobius(b)


@given(ks)
def test_totient_divisor_sum(k):
    assert sum(euler_phi(d) for d in range(1, k + 1) if k % d == 0) == k


def test_totient_small_values():
    assert [euler_phi(k) for k in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=-120, max_value=120))
def test_ramanujan_sum_matches_the_root_of_unity_sum(k, m):
    # c_k(m) = sum over primitive residues j of exp(2 pi i j m / k)
    total = sum(
        cmath.exp(2j * pi * j * m / k) for j in range(1, k + 1) if gcd(j, k) == 1
    )
    assert isclose(total.imag, 0.0, abs_tol=1e-9)
    assert ramanujan_sum(k, m) == round(total.real)


def test_ramanujan_sum_boundary_residues():
    for k in range(1, 40):
        assert ramanujan_sum(k, 0) == euler_phi(k)
        assert ramanujan_sum(k, 1) == mobius(k)
        assert ramanujan_sum(k, k) == euler_phi(k)


@given(ks, st.integers(min_value=-400, max_value=400))
def test_ramanujan_sum_depends_only_on_the_gcd(k, m):
    assert ramanujan_sum(k, m) == ramanujan_sum(k, gcd(k, m % k) if m % k else k)
