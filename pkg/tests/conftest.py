"""Shared fixtures and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from sntorsion.cases import load_bundled_table
from sntorsion.luthar_passi import format_class
from sntorsion.solver import FeasibilitySystem


@pytest.fixture(scope="session")
def s13_order3_table():
    return load_bundled_table("s13-mod2-order3.tbl")


@pytest.fixture(scope="session")
def s13_order33_table():
    return load_bundled_table("s13-mod2-order33.tbl")


def brute_force_solutions(system: FeasibilitySystem, bound: int) -> list[tuple[int, ...]]:
    """All integer points of the system inside the box [-bound, bound]^vars,
    by exhaustive scan with cleared denominators."""
    nvar = len(system.variables)
    constraints = []  # (int coeffs, int const, kind, den*target)
    for f, target, _ in system.equalities:
        den = 1
        for _, c in f.coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        den = den * f.constant.denominator // _gcd(den, f.constant.denominator)
        coeffs = [int(den * f.coeff(v)) for v in system.variables]
        constraints.append((coeffs, int(den * f.constant), "eq", den * target))
    for f, _ in system.nonneg_integral:
        den = 1
        for _, c in f.coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        den = den * f.constant.denominator // _gcd(den, f.constant.denominator)
        coeffs = [int(den * f.coeff(v)) for v in system.variables]
        constraints.append((coeffs, int(den * f.constant), "nonneg-int", den))
    found = []
    for point in itertools.product(range(-bound, bound + 1), repeat=nvar):
        ok = True
        for coeffs, const, kind, aux in constraints:
            value = const + sum(c * x for c, x in zip(coeffs, point))
            if kind == "eq":
                if value != aux:
                    ok = False
                    break
            else:
                # form value is value/aux; needs to be an integer >= 0
                if value < 0 or value % aux:
                    ok = False
                    break
        if ok:
            found.append(point)
    return found


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def var_names(system: FeasibilitySystem) -> list[str]:
    return [f"{format_class(ct)}@{d}" for ct, d in system.variables]
