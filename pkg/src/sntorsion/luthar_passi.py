"""Partial-augmentation bookkeeping and eigenvalue-multiplicity formulas.

A hypothetical normalized torsion unit u of order k is described by one
integer vector of partial augmentations per power u^d (d a proper divisor
of k).  For a rational-valued character the multiplicity of a fixed
k-th-root-of-unity eigenvalue is an exact rational, linear in the partial
augmentations; with the top level left symbolic it becomes an affine form
whose required non-negative-integrality drives all exclusions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .cyclotomic import ramanujan_sum
from .partitions import (
    ClassLabel,
    Partition,
    all_partitions,
    check_partition,
    element_order,
    identity_partition,
    is_prime,
    parity,
)

ClassKey = Partition  # canonical class key: the cycle type
VarKey = tuple[Partition, int]  # (cycle type, level d); the variable eps_C(u^d)


def as_cycle_type(cls: ClassLabel | Partition) -> Partition:
    if isinstance(cls, ClassLabel):
        return cls.cycle_type()
    return check_partition(cls)


def format_class(ct: Partition) -> str:
    """Short name of a class: 'r.j' when it is j disjoint r-cycles, '1' for
    the identity, otherwise the cycle type with '+' and '^'."""
    distinct = sorted(set(ct), reverse=True)
    if distinct == [1]:
        return "1"
    if (distinct == [distinct[0]] or distinct[1:] == [1]) and is_prime(distinct[0]):
        return f"{distinct[0]}.{ct.count(distinct[0])}"
    pieces = []
    for c in distinct:
        m = ct.count(c)
        pieces.append(f"{c}^{m}" if m > 1 else f"{c}")
    return "+".join(pieces)


def parse_class(token: str, n: int) -> Partition:
    """Inverse of format_class for degree n."""
    if token == "1":
        return identity_partition(n)
    if "." in token and "+" not in token and "^" not in token:
        r_s, j_s = token.split(".", 1)
        return ClassLabel(int(r_s), int(j_s), n).cycle_type()
    parts: list[int] = []
    for piece in token.split("+"):
        if "^" in piece:
            c_s, m_s = piece.split("^", 1)
            parts.extend([int(c_s)] * int(m_s))
        else:
            parts.append(int(piece))
    ct = tuple(sorted(parts, reverse=True))
    if sum(ct) != n:
        raise ValueError(f"cycle type {token} is not a partition of {n}")
    return check_partition(ct)


def class_sort_key(ct: Partition):
    """Canonical variable order: classes r.j by (r descending, j ascending),
    composite cycle types afterwards."""
    distinct = sorted(set(ct), reverse=True)
    if (distinct == [distinct[0]] or distinct[1:] == [1]) and is_prime(distinct[0]):
        return (0, -distinct[0], ct.count(distinct[0]))
    return (1, tuple(-p for p in ct))


@cache
def _allowed_support(n: int, k: int) -> tuple[Partition, ...]:
    support = [
        mu
        for mu in all_partitions(n)
        if element_order(mu) != 1 and k % element_order(mu) == 0
    ]
    return tuple(sorted(support, key=class_sort_key))


def allowed_support(n: int, k: int) -> list[Partition]:
    """Classes on which a normalized unit of order k can have a non-zero
    partial augmentation: element order divides k, identity excluded."""
    if k < 2:
        raise ValueError("unit order must be >= 2")
    return list(_allowed_support(n, k))


@dataclass(frozen=True)
class AugVector:
    """Partial augmentations of a normalized unit of order k in Z S_n."""

    k: int
    n: int
    entries: tuple[tuple[Partition, int], ...]

    @staticmethod
    def make(k: int, n: int, entries: dict[ClassLabel | Partition, int]) -> "AugVector":
        items = {}
        for cls, eps in entries.items():
            if eps:
                items[as_cycle_type(cls)] = eps
        return AugVector(k, n, tuple(sorted(items.items(), key=lambda kv: class_sort_key(kv[0]))))

    def __post_init__(self) -> None:
        total = sum(eps for _, eps in self.entries)
        if total != 1:
            raise ValueError(f"partial augmentations sum to {total}, not 1")
        for ct, _ in self.entries:
            if sum(ct) != self.n:
                raise ValueError(f"class {ct} does not live in S_{self.n}")
            order = element_order(ct)
            if self.k == 1:
                if order != 1:
                    raise ValueError("order-1 unit is supported on the identity only")
            elif order == 1 or self.k % order != 0:
                raise ValueError(
                    f"class {format_class(ct)} (order {order}) cannot support a unit of order {self.k}"
                )

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.entries)

    def value(self, cls: ClassLabel | Partition) -> int:
        return self.as_dict().get(as_cycle_type(cls), 0)


def forced_vector(n: int, s: int) -> AugVector:
    """The unique possible augmentation vector when S_n has a single class
    of order s (s prime with floor(n/s) = 1): eps = 1 there."""
    if not is_prime(s) or n // s != 1:
        raise ValueError(f"S_{n} does not have a unique class of order {s}")
    return AugVector.make(s, n, {ClassLabel(s, 1, n): 1})


@dataclass(frozen=True)
class UnitProfile:
    """Augmentation vectors of u^d for every proper divisor d of the order k
    (d = 1 is u itself)."""

    k: int
    n: int
    levels: tuple[tuple[int, AugVector], ...]

    @staticmethod
    def make(k: int, n: int, levels: dict[int, AugVector]) -> "UnitProfile":
        return UnitProfile(k, n, tuple(sorted(levels.items())))

    def __post_init__(self) -> None:
        for d, aug in self.levels:
            if d < 1 or d >= self.k or self.k % d != 0:
                raise ValueError(f"{d} is not a proper divisor of {self.k}")
            if aug.k != self.k // d:
                raise ValueError(f"level {d} must have order {self.k // d}, got {aug.k}")
            if aug.n != self.n:
                raise ValueError("degree mismatch inside profile")

    def level(self, d: int) -> AugVector:
        for dd, aug in self.levels:
            if dd == d:
                return aug
        raise KeyError(f"profile has no level {d}")

    @property
    def complete(self) -> bool:
        present = {d for d, _ in self.levels}
        return all(d in present for d in range(1, self.k) if self.k % d == 0)


@dataclass(frozen=True)
class CharacterRow:
    """Exact integer values of a rational-valued (ordinary or Brauer)
    character on a list of classes."""

    name: str
    degree: int
    mode: str = "ordinary"  # "ordinary" | "brauer"
    modulus: int | None = None
    values: tuple[tuple[Partition, int], ...] = ()

    @staticmethod
    def make(
        name: str,
        degree: int,
        values: dict[ClassLabel | Partition, int],
        mode: str = "ordinary",
        modulus: int | None = None,
    ) -> "CharacterRow":
        items = {as_cycle_type(c): v for c, v in values.items()}
        return CharacterRow(
            name, degree, mode, modulus,
            tuple(sorted(items.items(), key=lambda kv: class_sort_key(kv[0]))),
        )

    def __post_init__(self) -> None:
        if self.mode not in ("ordinary", "brauer"):
            raise ValueError(f"unknown character mode {self.mode!r}")
        if self.mode == "brauer":
            if self.modulus is None or not is_prime(self.modulus):
                raise ValueError("brauer mode needs a prime modulus")
        elif self.modulus is not None:
            raise ValueError("ordinary mode takes no modulus")
        for ct, v in self.values:
            order = element_order(ct)
            if order == 1 and v != self.degree:
                raise ValueError(f"identity value {v} differs from degree {self.degree}")
            if self.mode == "brauer" and order % self.modulus == 0:
                raise ValueError(
                    f"class {format_class(ct)} is {self.modulus}-singular in a brauer({self.modulus}) row"
                )

    def value(self, cls: ClassLabel | Partition) -> int:
        ct = as_cycle_type(cls)
        if element_order(ct) == 1:
            return self.degree
        for c, v in self.values:
            if c == ct:
                return v
        raise KeyError(f"row {self.name} has no value at class {format_class(ct)}")


def char_value_on_unit(row: CharacterRow, aug: AugVector) -> int:
    """Linear extension of the character to the group ring: sum of
    eps_C * row(C) over the support."""
    return sum(eps * row.value(ct) for ct, eps in aug.entries)


def multiplicity(profile: UnitProfile, row: CharacterRow, ell: int) -> Fraction:
    """Multiplicity of zeta^ell as an eigenvalue of the unit under a
    representation affording the (ordinary, rational-valued) row."""
    if row.mode != "ordinary":
        raise ValueError("multiplicity requires an ordinary character row")
    if not profile.complete:
        raise ValueError("profile is missing a divisor level")
    k = profile.k
    total = Fraction(0)
    for d in range(1, k + 1):
        if k % d:
            continue
        chi = row.degree if d == k else char_value_on_unit(row, profile.level(d))
        total += chi * ramanujan_sum(k // d, ell)
    return total / k


@dataclass(frozen=True)
class AffineForm:
    """Rational affine expression in augmentation variables, carried around
    with the contract that it must evaluate to a non-negative integer."""

    coeffs: tuple[tuple[VarKey, Fraction], ...]
    constant: Fraction

    @staticmethod
    def make(coeffs: dict[VarKey, Fraction | int], constant: Fraction | int) -> "AffineForm":
        items = {v: Fraction(c) for v, c in coeffs.items() if c}
        return AffineForm(
            tuple(sorted(items.items(), key=lambda kv: (kv[0][1], class_sort_key(kv[0][0])))),
            Fraction(constant),
        )

    def coeff(self, var: VarKey) -> Fraction:
        for v, c in self.coeffs:
            if v == var:
                return c
        return Fraction(0)

    def evaluate(self, point: dict[VarKey, int]) -> Fraction:
        return self.constant + sum(c * point.get(v, 0) for v, c in self.coeffs)

    def substitute(self, assignment: dict[VarKey, int]) -> "AffineForm":
        coeffs = {v: c for v, c in self.coeffs if v not in assignment}
        const = self.constant + sum(
            c * assignment[v] for v, c in self.coeffs if v in assignment
        )
        return AffineForm.make(coeffs, const)

    def eliminate(self, var: VarKey, equality: "AffineForm", target: Fraction | int) -> "AffineForm":
        """Substitute var using `equality = target` (which must involve var)."""
        pivot = equality.coeff(var)
        if pivot == 0:
            raise ValueError("equality does not involve the eliminated variable")
        # var = (target - constant - sum_other) / pivot
        factor = self.coeff(var) / pivot
        coeffs = {v: c for v, c in self.coeffs if v != var}
        for v, c in equality.coeffs:
            if v != var:
                coeffs[v] = coeffs.get(v, Fraction(0)) - factor * c
        const = self.constant + factor * (Fraction(target) - equality.constant)
        return AffineForm.make(coeffs, const)


def affine_form(
    row: CharacterRow,
    k: int,
    ell: int,
    lower_levels: dict[int, AugVector],
    variables: list[Partition],
) -> AffineForm:
    """Multiplicity of zeta^ell for a unit of order k as an affine form in
    the top-level augmentation variables, with all proper power levels d > 1
    fixed by `lower_levels`.

    Works verbatim for Brauer rows with modulus coprime to k: the eigenvalue
    multiplicity formula has the same shape, restricted to modulus-regular
    classes.
    """
    if row.mode == "brauer" and k % row.modulus == 0:
        raise ValueError(
            f"brauer({row.modulus}) rows cannot constrain units of order {k}"
        )
    coeffs: dict[VarKey, Fraction] = {}
    top_trace = Fraction(ramanujan_sum(k, ell), k)
    for ct in variables:
        coeffs[(ct, 1)] = top_trace * row.value(ct)
    constant = Fraction(row.degree, k)
    for d in range(2, k):
        if k % d:
            continue
        if d not in lower_levels:
            raise ValueError(f"level {d} of the unit is not fixed")
        chi = char_value_on_unit(row, lower_levels[d])
        constant += Fraction(chi * ramanujan_sum(k // d, ell), k)
    return AffineForm.make(coeffs, constant)


def orbit_residues(k: int) -> list[int]:
    """One residue per Galois orbit: the divisors of k (mod k, so k maps
    to 0).  For rational-valued rows mu_ell depends only on gcd(ell, k)."""
    return sorted({d % k for d in range(1, k + 1) if k % d == 0})
