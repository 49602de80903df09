"""Rational arithmetic helpers and Galois traces of roots of unity.

Everything downstream works with exact fractions (`fractions.Fraction`);
the only trace ever needed is the trace of a root of unity from a
cyclotomic field down to Q, which is a Ramanujan sum with a Moebius/totient
closed form.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction


def _factorize(k: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= k:
        while k % d == 0:
            factors[d] = factors.get(d, 0) + 1
            k //= d
        d += 1 if d == 2 else 2
    if k > 1:
        factors[k] = factors.get(k, 0) + 1
    return factors


def mobius(k: int) -> int:
    """Moebius function."""
    if k < 1:
        raise ValueError("k must be >= 1")
    factors = _factorize(k)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(k: int) -> int:
    """Euler totient."""
    if k < 1:
        raise ValueError("k must be >= 1")
    result = k
    for p in _factorize(k):
        result = result // p * (p - 1)
    return result


def ramanujan_sum(k: int, m: int) -> int:
    """Trace from Q(zeta_k) to Q of zeta_k^m: mu(k/g) phi(k)/phi(k/g),
    g = gcd(k, m)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    g = gcd(k, m % k)
    return mobius(k // g) * euler_phi(k) // euler_phi(k // g)
