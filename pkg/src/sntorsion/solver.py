"""Exact enumeration of integer partial-augmentation vectors.

A feasibility system consists of affine forms in the augmentation
variables, some pinned to exact integer values (the augmentation equality,
lemma constraints) and some required to be non-negative integers (the
eigenvalue multiplicities).  The solver is exact and self-contained:

1. every "form is an integer" condition becomes a linear Diophantine
   equation by introducing an integer slack for the form's value;
2. the equation system is solved over the integers (column-style Hermite
   elimination), yielding either an immediate contradiction or a particular
   solution plus a lattice of homogeneous solutions;
3. lattice directions that leave every slack unchanged are split off (they
   can only produce infinite solution families);
4. the remaining coordinates are bounded by exact Fourier-Motzkin
   elimination of the slack inequalities and enumerated depth-first.

This decides infeasibility even when the rational relaxation is unbounded,
which is how the order-pq systems with few character rows are settled.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd, lcm

from .luthar_passi import (
    AffineForm,
    AugVector,
    CharacterRow,
    VarKey,
    affine_form,
    allowed_support,
    class_sort_key,
    format_class,
    forced_vector,
    orbit_residues,
)
from .partitions import Partition, is_prime, parity

# ---------------------------------------------------------------------------
# integer linear algebra


def solve_integer_system(
    rows: list[list[int]], rhs: list[int], nvar: int
) -> tuple[list[int], list[list[int]]] | None:
    """All integer solutions of A x = b as x0 + lattice combinations.

    Returns (x0, basis) with basis a list of column vectors spanning the
    integer kernel, or None when no integer solution exists.
    """
    m = len(rows)
    a = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(nvar)] for i in range(nvar)]

    def col_op(dst: int, src: int, factor: int) -> None:
        for i in range(m):
            a[i][dst] += factor * a[i][src]
        for i in range(nvar):
            u[i][dst] += factor * u[i][src]

    def col_swap(c1: int, c2: int) -> None:
        for i in range(m):
            a[i][c1], a[i][c2] = a[i][c2], a[i][c1]
        for i in range(nvar):
            u[i][c1], u[i][c2] = u[i][c2], u[i][c1]

    pivots: list[tuple[int, int]] = []
    pc = 0
    for row in range(m):
        if pc >= nvar:
            break
        while True:
            nz = [c for c in range(pc, nvar) if a[row][c]]
            if not nz:
                break
            c0 = min(nz, key=lambda c: abs(a[row][c]))
            if c0 != pc:
                col_swap(pc, c0)
            done = True
            for c in range(pc + 1, nvar):
                if a[row][c]:
                    col_op(c, pc, -(a[row][c] // a[row][pc]))
                    if a[row][c]:
                        done = False
            if done:
                break
        if pc < nvar and a[row][pc]:
            pivots.append((row, pc))
            pc += 1

    # forward solve in the echelon basis
    y = [0] * nvar
    known_cols: list[int] = []
    pivot_of_row = dict(pivots)
    for row in range(m):
        s = rhs[row] - sum(a[row][c] * y[c] for c in known_cols)
        col = pivot_of_row.get(row)
        if col is not None:
            if s % a[row][col]:
                return None
            y[col] = s // a[row][col]
            known_cols.append(col)
        elif s != 0:
            return None

    x0 = [sum(u[i][c] * y[c] for c in range(nvar)) for i in range(nvar)]
    basis = [[u[i][c] for i in range(nvar)] for c in range(len(pivots), nvar)]
    return x0, basis


# ---------------------------------------------------------------------------
# Fourier-Motzkin on integer inequality rows  (coeffs . t + const >= 0)

Ineq = tuple[tuple[int, ...], int]


def _normalize(coeffs: tuple[int, ...], const: int) -> Ineq:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, const)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        const = const // g
    return coeffs, const


def _fm_eliminate(ineqs: set[Ineq], var: int) -> set[Ineq] | None:
    """Project away one variable; None when a constant row is violated."""
    pos, neg, zero = [], [], []
    for coeffs, const in ineqs:
        c = coeffs[var]
        if c > 0:
            pos.append((coeffs, const))
        elif c < 0:
            neg.append((coeffs, const))
        else:
            zero.append((coeffs, const))
    out: set[Ineq] = set()
    for coeffs, const in zero:
        if any(coeffs):
            out.add(_normalize(coeffs, const))
        elif const < 0:
            return None
    for pc, pk in pos:
        for nc, nk in neg:
            a, b = pc[var], -nc[var]
            coeffs = tuple(b * pc[i] + a * nc[i] for i in range(len(pc)))
            const = b * pk + a * nk
            if any(coeffs):
                out.add(_normalize(coeffs, const))
            elif const < 0:
                return None
    return out


def _fm_bounds_frac(
    ineqs: set[Ineq], nvars: int, var: int
) -> tuple[Fraction | None, Fraction | None] | str:
    """Rational bounds of one variable over the relaxation, after eliminating
    all the others.  Returns 'infeasible', or (lo, hi) with None marking an
    unbounded side."""
    rows = ineqs
    for other in range(nvars):
        if other == var:
            continue
        rows = _fm_eliminate(rows, other)
        if rows is None:
            return "infeasible"
    lo: Fraction | None = None
    hi: Fraction | None = None
    for coeffs, const in rows:
        c = coeffs[var]
        if c > 0:
            bound = Fraction(-const, c)
            lo = bound if lo is None else max(lo, bound)
        elif c < 0:
            bound = Fraction(const, -c)
            hi = bound if hi is None else min(hi, bound)
        elif const < 0:
            return "infeasible"
    return lo, hi


def _fm_bounds(ineqs: set[Ineq], nvars: int, var: int) -> tuple[int | None, int | None] | str:
    """Integer bounds of one variable over the rational relaxation."""
    res = _fm_bounds_frac(ineqs, nvars, var)
    if res == "infeasible":
        return "infeasible"
    lo, hi = res
    return (None if lo is None else ceil(lo), None if hi is None else floor(hi))


def _fm_feasible(ineqs: set[Ineq], nvars: int) -> bool:
    rows = ineqs
    for var in range(nvars):
        rows = _fm_eliminate(rows, var)
        if rows is None:
            return False
    return all(const >= 0 for _, const in rows)


def _substitute(ineqs: set[Ineq], var: int, value: int) -> set[Ineq] | None:
    out: set[Ineq] = set()
    for coeffs, const in ineqs:
        if coeffs[var]:
            const = const + coeffs[var] * value
            coeffs = coeffs[:var] + (0,) + coeffs[var + 1 :]
        if any(coeffs):
            out.add(_normalize(coeffs, const))
        elif const < 0:
            return None
    return out


def _substitute_exact(ineqs: set[Ineq], var: int, value: Fraction) -> set[Ineq] | None:
    """Pin a variable to a rational value, rescaling rows to stay integral."""
    num, den = value.numerator, value.denominator
    out: set[Ineq] = set()
    for coeffs, const in ineqs:
        c = coeffs[var]
        if c:
            const = den * const + c * num
            coeffs = tuple(0 if i == var else den * x for i, x in enumerate(coeffs))
        if any(coeffs):
            out.add(_normalize(coeffs, const))
        elif const < 0:
            return None
    return out


def _fm_rational_point(ineqs: set[Ineq], nvars: int) -> list[Fraction] | None:
    """One rational point of the relaxation, by back-substitution."""
    point: list[Fraction] = []
    current = ineqs
    for var in range(nvars):
        res = _fm_bounds_frac(current, nvars, var)
        if res == "infeasible":
            return None
        lo, hi = res
        if lo is not None and hi is not None and lo > hi:
            return None
        value = lo if lo is not None else (hi if hi is not None else Fraction(0))
        point.append(Fraction(value))
        nxt = _substitute_exact(current, var, Fraction(value))
        if nxt is None:
            return None
        current = nxt
    return point


# ---------------------------------------------------------------------------
# feasibility systems


@dataclass(frozen=True)
class FeasibilitySystem:
    """Affine-form constraints over an ordered set of augmentation variables."""

    variables: tuple[VarKey, ...]
    equalities: tuple[tuple[AffineForm, int, str], ...]
    nonneg_integral: tuple[tuple[AffineForm, str], ...]

    @staticmethod
    def build(
        variables: list[VarKey],
        equalities: list[tuple[AffineForm, int, str]],
        nonneg_integral: list[tuple[AffineForm, str]],
    ) -> "FeasibilitySystem":
        variables = sorted(variables, key=lambda v: (v[1], class_sort_key(v[0])))
        levels = {d for _, d in variables}
        names = {name for _, _, name in equalities}
        eqs = list(equalities)
        for d in sorted(levels):
            name = f"augmentation(level {d})"
            if name not in names:
                aug = AffineForm.make({v: 1 for v in variables if v[1] == d}, 0)
                eqs.append((aug, 1, name))
        sys_ = FeasibilitySystem(tuple(variables), tuple(eqs), tuple(nonneg_integral))
        for v in variables:
            if all(f.coeff(v) == 0 for f, _, _ in sys_.equalities) and all(
                f.coeff(v) == 0 for f, _ in sys_.nonneg_integral
            ):
                raise ValueError(f"variable {format_class(v[0])}@{v[1]} appears in no constraint")
        return sys_


@dataclass
class SolveReport:
    """Outcome of an exact enumeration."""

    status: str  # "infeasible" | "solutions" | "unbounded"
    variables: tuple[VarKey, ...]
    solutions: list[tuple[int, ...]] = field(default_factory=list)
    certificate: list[str] = field(default_factory=list)
    ray: tuple[int, ...] | None = None
    eliminated_by: dict[str, int] = field(default_factory=dict)
    stats: dict[str, int | float] = field(default_factory=dict)

    def solution_dicts(self) -> list[dict[VarKey, int]]:
        return [dict(zip(self.variables, sol)) for sol in self.solutions]

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "variables": [f"{format_class(ct)}@{d}" for ct, d in self.variables],
            "solutions": [list(s) for s in self.solutions],
            "certificate": list(self.certificate),
            "ray": list(self.ray) if self.ray is not None else None,
            "eliminated_by": dict(self.eliminated_by),
            "stats": dict(self.stats),
        }


def _integer_rows(system: FeasibilitySystem):
    """Clear denominators: equality and slack-link rows over (vars, slacks)."""
    nvar = len(system.variables)
    nform = len(system.nonneg_integral)
    rows: list[list[int]] = []
    rhs: list[int] = []
    for f, target, _ in system.equalities:
        den = lcm(f.constant.denominator, *(c.denominator for _, c in f.coeffs)) if f.coeffs else f.constant.denominator
        row = [int(den * f.coeff(v)) for v in system.variables] + [0] * nform
        rows.append(row)
        rhs.append(int(den * (target - f.constant)))
    for i, (f, _) in enumerate(system.nonneg_integral):
        den = lcm(f.constant.denominator, *(c.denominator for _, c in f.coeffs)) if f.coeffs else f.constant.denominator
        row = [int(den * f.coeff(v)) for v in system.variables] + [0] * nform
        row[nvar + i] = -den
        rows.append(row)
        rhs.append(int(-den * f.constant))
    return rows, rhs, nvar, nform


def _solve(
    system: FeasibilitySystem, threads: int = 1, find_one: bool = False
) -> SolveReport:
    nodes = 0
    rows, rhs, nvar, nform = _integer_rows(system)
    sol = solve_integer_system(rows, rhs, nvar + nform)
    report = SolveReport(status="infeasible", variables=system.variables)
    if sol is None:
        report.stats["nodes"] = 0
        return report
    z0, basis = sol
    tdim = len(basis)

    # inequality rows (slacks >= 0) in lattice coordinates
    slack_rows = [[basis[t][nvar + i] for t in range(tdim)] for i in range(nform)]
    slack_const = [z0[nvar + i] for i in range(nform)]

    if tdim == 0:
        ok = all(c >= 0 for c in slack_const)
        if ok:
            report.status = "solutions"
            report.solutions = [tuple(z0[:nvar])]
        report.stats["nodes"] = 1
        return report

    # split off lattice directions that leave every slack unchanged
    quot = solve_integer_system(slack_rows, [0] * nform, tdim)
    assert quot is not None  # homogeneous
    _, free_basis = quot
    nfree = len(free_basis)

    # complement coordinates: column echelon of the slack matrix
    elim = _echelon_split(slack_rows, tdim)
    wdim, transform = elim  # t = transform . (w, v), first wdim coords hit slacks
    w_rows = [
        tuple(
            sum(slack_rows[i][t] * transform[t][c] for t in range(tdim))
            for c in range(wdim)
        )
        for i in range(nform)
    ]
    ineqs: set[Ineq] = set()
    for i in range(nform):
        if any(w_rows[i]) or slack_const[i] < 0:
            ineqs.add(_normalize(w_rows[i], slack_const[i]))
    for coeffs, const in list(ineqs):
        if not any(coeffs) and const < 0:
            report.stats["nodes"] = 0
            return report

    if wdim == 0:
        # all slacks are constant on the lattice
        if all(c >= 0 for c in slack_const):
            report.status = "unbounded" if nfree else "solutions"
            if nfree:
                report.ray = _x_ray(free_basis[0], basis, nvar)
            else:
                report.solutions = [tuple(z0[:nvar])]
        report.stats["nodes"] = 1
        return report

    if not _fm_feasible(ineqs, wdim):
        report.stats["nodes"] = 0
        return report

    bounds = [_fm_bounds(ineqs, wdim, var) for var in range(wdim)]
    if any(b == "infeasible" for b in bounds):
        report.stats["nodes"] = 0
        return report
    unbounded_vars = [v for v, b in enumerate(bounds) if b[0] is None or b[1] is None]
    if unbounded_vars:
        ray_w = _recession_ray(ineqs, wdim, unbounded_vars[0])
        report.status = "unbounded"
        report.ray = _x_ray(
            _t_from_w(ray_w, transform, tdim, wdim), basis, nvar
        )
        report.stats["nodes"] = 0
        return report

    def x_of_w(wvec: tuple[int, ...]) -> tuple[int, ...]:
        t = _t_from_w(wvec, transform, tdim, wdim)
        return tuple(z0[i] + sum(basis[c][i] * t[c] for c in range(tdim)) for i in range(nvar))

    solutions: list[tuple[int, ...]] = []

    def dfs(current: set[Ineq], depth: int, prefix: tuple[int, ...]):
        nonlocal nodes
        nodes += 1
        if depth == wdim:
            solutions.append(x_of_w(prefix))
            return not find_one
        b = _fm_bounds(current, wdim, depth)
        if b == "infeasible" or b[0] is None or b[1] is None:
            return True
        for value in range(b[0], b[1] + 1):
            nxt = _substitute(current, depth, value)
            if nxt is None:
                continue
            if not dfs(nxt, depth + 1, prefix + (value,)):
                return False
        return True

    if threads > 1 and not find_one:
        top = _fm_bounds(ineqs, wdim, 0)
        if top != "infeasible" and top[0] is not None and top[1] is not None:
            def branch(value: int) -> list[tuple[int, ...]]:
                sub = _substitute(ineqs, 0, value)
                if sub is None:
                    return []
                local: list[tuple[int, ...]] = []

                def bdfs(current, depth, prefix):
                    if depth == wdim:
                        local.append(x_of_w(prefix))
                        return
                    bb = _fm_bounds(current, wdim, depth)
                    if bb == "infeasible" or bb[0] is None or bb[1] is None:
                        return
                    for v in range(bb[0], bb[1] + 1):
                        nxt = _substitute(current, depth, v)
                        if nxt is not None:
                            bdfs(nxt, depth + 1, prefix + (v,))

                bdfs(sub, 1, (value,))
                return local

            with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
                for chunk in pool.map(branch, range(top[0], top[1] + 1)):
                    solutions.extend(chunk)
            nodes = -1  # node counts are not tracked across workers
    else:
        dfs(ineqs, 0, ())

    if solutions:
        solutions = sorted(set(solutions))
        if nfree:
            report.status = "unbounded"
            report.ray = _x_ray(free_basis[0], basis, nvar)
        else:
            report.status = "solutions"
            report.solutions = solutions
    report.stats["nodes"] = nodes
    return report


def _echelon_split(rows: list[list[int]], ncols: int):
    """Column echelon of a row-major matrix: returns (rank, transform) with
    matrix . transform having its nonzero columns first."""
    m = len(rows)
    a = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_op(dst, src, factor):
        for i in range(m):
            a[i][dst] += factor * a[i][src]
        for i in range(ncols):
            u[i][dst] += factor * u[i][src]

    def col_swap(c1, c2):
        for i in range(m):
            a[i][c1], a[i][c2] = a[i][c2], a[i][c1]
        for i in range(ncols):
            u[i][c1], u[i][c2] = u[i][c2], u[i][c1]

    pc = 0
    for row in range(m):
        if pc >= ncols:
            break
        while True:
            nz = [c for c in range(pc, ncols) if a[row][c]]
            if not nz:
                break
            c0 = min(nz, key=lambda c: abs(a[row][c]))
            if c0 != pc:
                col_swap(pc, c0)
            done = True
            for c in range(pc + 1, ncols):
                if a[row][c]:
                    col_op(c, pc, -(a[row][c] // a[row][pc]))
                    if a[row][c]:
                        done = False
            if done:
                break
        if a[row][pc] if pc < ncols else False:
            pc += 1
    return pc, u


def _t_from_w(wvec, transform, tdim, wdim) -> list[int]:
    return [sum(transform[t][c] * wvec[c] for c in range(wdim)) for t in range(tdim)]


def _x_ray(t_dir: list[int], basis: list[list[int]], nvar: int) -> tuple[int, ...]:
    ray = tuple(
        sum(basis[c][i] * t_dir[c] for c in range(len(basis))) for i in range(nvar)
    )
    g = 0
    for c in ray:
        g = gcd(g, c)
    if g > 1:
        ray = tuple(c // g for c in ray)
    return ray


def _recession_ray(ineqs: set[Ineq], wdim: int, var: int) -> tuple[int, ...]:
    """A nonzero integer direction keeping all inequalities satisfiable."""
    for sign in (1, -1):
        hom = {_normalize(coeffs, 0) for coeffs, _ in ineqs}
        pin_pos = (tuple(sign if i == var else 0 for i in range(wdim)), -1)
        point = _fm_rational_point(hom | {pin_pos}, wdim)
        if point is not None:
            den = lcm(*(f.denominator for f in point))
            return tuple(int(f * den) for f in point)
    raise RuntimeError("no recession ray found for an unbounded variable")


def enumerate_system(system: FeasibilitySystem, threads: int = 1) -> SolveReport:
    """Exhaustive, deterministic enumeration of all integer points."""
    report = _solve(system, threads=threads)
    if report.status == "solutions":
        # defensive re-check against the original forms
        for sol in report.solutions:
            point = dict(zip(system.variables, sol))
            for f, target, name in system.equalities:
                assert f.evaluate(point) == target, f"equality {name} violated"
            for f, name in system.nonneg_integral:
                value = f.evaluate(point)
                assert value.denominator == 1 and value >= 0, f"form {name} violated"
    elif report.status == "infeasible":
        report.certificate = _infeasible_core(system, threads)
        report.eliminated_by = {name: 1 for name in report.certificate}
    return report


def _infeasible_core(system: FeasibilitySystem, threads: int) -> list[str]:
    """Greedy minimal subset of the non-negative-integer forms that already
    makes the system infeasible (with all equalities kept)."""
    forms = list(system.nonneg_integral)
    core = forms[:]
    for f in forms:
        trial = [g for g in core if g is not f]
        sub = FeasibilitySystem(system.variables, system.equalities, tuple(trial))
        if _solve(sub, find_one=True).status == "infeasible":
            core = trial
    return [name for _, name in core]


def spot_check_infeasible(
    system: FeasibilitySystem, core: list[str], samples: int = 200
) -> bool:
    """Independent soundness pass: sample integer points satisfying the
    equalities and confirm each violates a core form (negative value or a
    non-integral rational)."""
    rows, rhs, nvar, nform = _integer_rows(system)
    # keep only the equality rows; slack links are dropped so the samples are
    # constrained by nothing but the equalities
    eq_rows = [r[:nvar] for r in rows[: len(system.equalities)]]
    eq_rhs = rhs[: len(system.equalities)]
    sol = solve_integer_system(eq_rows, eq_rhs, nvar)
    if sol is None:
        return True
    z0, basis = sol
    core_forms = [
        (f, name) for f, name in system.nonneg_integral if name in set(core)
    ]
    checked = 0
    span = 3
    import itertools

    for t in itertools.product(range(-span, span + 1), repeat=len(basis)):
        if checked >= samples:
            break
        point_vals = [
            z0[i] + sum(basis[c][i] * t[c] for c in range(len(basis)))
            for i in range(nvar)
        ]
        point = dict(zip(system.variables, point_vals))
        ok = False
        for f, _ in core_forms:
            value = f.evaluate(point)
            if value < 0 or value.denominator != 1:
                ok = True
                break
        if not ok:
            return False
        checked += 1
    return True


# ---------------------------------------------------------------------------
# the layered strategy


def prime_order_system(
    n: int,
    kind: str,
    q: int,
    rows_and_ells: list[tuple[CharacterRow, int]],
    extra_equalities: list[tuple[AffineForm, int, str]] | None = None,
) -> FeasibilitySystem:
    classes = allowed_support(n, q)
    if kind == "A":
        classes = [ct for ct in classes if parity(ct) == 1]
    variables = [(ct, 1) for ct in classes]
    forms = []
    for row, ell in rows_and_ells:
        f = affine_form(row, q, ell, {}, classes)
        forms.append((f, f"mu_{ell}({row.name})"))
    return FeasibilitySystem.build(variables, list(extra_equalities or []), forms)


def solve_prime_order(
    n: int,
    kind: str,
    q: int,
    rows_and_ells: list[tuple[CharacterRow, int]],
    threads: int = 1,
) -> SolveReport:
    """All augmentation vectors of order q consistent with the requested
    multiplicity constraints."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    for row, _ in rows_and_ells:
        if row.mode == "brauer" and row.modulus == q:
            raise ValueError(f"row {row.name} is a brauer({q}) row; it cannot constrain order {q}")
    system = prime_order_system(n, kind, q, rows_and_ells)
    return enumerate_system(system, threads=threads)


def report_aug_vectors(report: SolveReport, k: int, n: int) -> list[AugVector]:
    vectors = []
    for sol in report.solutions:
        entries = {
            ct: value for (ct, _), value in zip(report.variables, sol) if value
        }
        vectors.append(AugVector.make(k, n, entries))
    return vectors


def has_element_of_order(n: int, k: int) -> bool:
    """Whether S_n has an element of order exactly k, for k in {q, 2p, pq}."""
    from .partitions import all_partitions, element_order

    return any(element_order(mu) == k for mu in all_partitions(n))


@dataclass
class PairResult:
    q_candidate: AugVector
    p_candidate: AugVector
    group: str
    report: SolveReport


def solve_order_pq(
    n: int,
    kind: str,
    p: int,
    q: int,
    q_candidates: list[AugVector],
    p_candidates: list[AugVector],
    row_groups: list[dict],
    pi_row: CharacterRow | None = None,
    threads: int = 1,
) -> tuple[str, list[PairResult]]:
    """Build and enumerate the top-level order-pq system for every pair of
    power candidates.

    row_groups entries: {"name": str, "members": list[AugVector] | None,
    "rows_and_ells": list[(CharacterRow, ell)]}.  A group with members None
    covers every candidate not claimed by an explicit group.  When pi_row is
    given, the spectral equalities mu_1(u, pi) = 0 and mu_q(u, pi) = 1 are
    added (valid for p > n/2, q >= 3, n >= 7).

    Verdict: "excluded" iff every pair is infeasible.
    """
    if has_element_of_order(n, p * q):
        raise ValueError(f"S_{n} has elements of order {p * q}; nothing to exclude")
    classes = allowed_support(n, p * q)
    if kind == "A":
        classes = [ct for ct in classes if parity(ct) == 1]
    variables = [(ct, 1) for ct in classes]

    use_pi = pi_row is not None
    if use_pi and not (n >= 7 and 2 * p > n and q >= 3):
        raise ValueError("spectral equalities need n >= 7, p > n/2, q >= 3")

    def group_of(cand: AugVector) -> dict:
        fallback = None
        for grp in row_groups:
            if grp.get("members") is None:
                fallback = grp
            elif cand in grp["members"]:
                return grp
        if fallback is None:
            raise ValueError("candidate not covered by any row group")
        return fallback

    results: list[PairResult] = []
    for q_cand in q_candidates:
        grp = group_of(q_cand)
        for p_cand in p_candidates:
            lower = {p: q_cand, q: p_cand}
            forms = []
            for row, ell in grp["rows_and_ells"]:
                f = affine_form(row, p * q, ell, lower, classes)
                forms.append((f, f"mu_{ell}({row.name})"))
            equalities = []
            if use_pi:
                f1 = affine_form(pi_row, p * q, 1, lower, classes)
                fq = affine_form(pi_row, p * q, q, lower, classes)
                equalities.append((f1, 0, f"mu_1({pi_row.name}) = 0"))
                equalities.append((fq, 1, f"mu_{q}({pi_row.name}) = 1"))
            system = FeasibilitySystem.build(variables, equalities, forms)
            report = enumerate_system(system, threads=threads)
            results.append(PairResult(q_cand, p_cand, grp["name"], report))

    if any(r.report.status == "unbounded" for r in results):
        verdict = "undecided-unbounded"
    elif all(r.report.status == "infeasible" for r in results):
        verdict = "excluded"
    else:
        verdict = "candidates-survive"
    return verdict, results
