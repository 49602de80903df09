"""Cycle-type combinatorics of the symmetric group S_n.

Partitions are plain tuples of weakly decreasing positive integers; the
degree n is their sum.  Conjugacy classes of S_n are identified with cycle
types, and the classes of j disjoint r-cycles (r prime) get the short label
``r.j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial, gcd, lcm

Partition = tuple[int, ...]


def check_partition(mu: Partition) -> Partition:
    """Validate that mu is a weakly decreasing tuple of positive parts."""
    if not mu:
        raise ValueError("empty partition (n = 0 is not supported)")
    if any(p < 1 for p in mu):
        raise ValueError(f"partition {mu} has a part < 1")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"partition {mu} is not weakly decreasing")
    return mu


def identity_partition(n: int) -> Partition:
    if n < 1:
        raise ValueError("n must be >= 1")
    return (1,) * n


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class ClassLabel:
    """The conjugacy class of j disjoint r-cycles in S_n, with r prime."""

    r: int
    j: int
    n: int

    def __post_init__(self) -> None:
        if not is_prime(self.r):
            raise ValueError(f"class label {self.r}.{self.j}: {self.r} is not prime")
        if self.j < 1 or self.r * self.j > self.n:
            raise ValueError(f"class label {self.r}.{self.j} does not fit in S_{self.n}")

    def cycle_type(self) -> Partition:
        return (self.r,) * self.j + (1,) * (self.n - self.r * self.j)

    def __str__(self) -> str:
        return f"{self.r}.{self.j}"


@cache
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in lexicographically decreasing order."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def gen(total: int, largest: int):
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def power_cycle_type(mu: Partition, d: int) -> Partition:
    """Cycle type of sigma^d for sigma of cycle type mu.

    Each cycle of length c falls apart into gcd(c, d) cycles of length
    c / gcd(c, d).
    """
    check_partition(mu)
    if d < 1:
        raise ValueError("exponent must be >= 1")
    parts: list[int] = []
    for c in mu:
        g = gcd(c, d)
        parts.extend([c // g] * g)
    return tuple(sorted(parts, reverse=True))


def element_order(mu: Partition) -> int:
    """Order of a permutation of cycle type mu: the lcm of the parts."""
    check_partition(mu)
    return lcm(*mu)


def parity(mu: Partition) -> int:
    """Sign of a permutation of cycle type mu, +1 or -1."""
    check_partition(mu)
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def class_size(mu: Partition) -> int:
    """Number of permutations of cycle type mu in S_n, n = sum(mu)."""
    check_partition(mu)
    z = 1
    for c in set(mu):
        m = mu.count(c)
        z *= c**m * factorial(m)
    return factorial(sum(mu)) // z


def prime_order_classes(n: int, r: int) -> list[ClassLabel]:
    """The classes r.1, ..., r.floor(n/r) of order-r elements of S_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    return [ClassLabel(r, j, n) for j in range(1, n // r + 1)]
