"""Exact linear programming over the rationals.

A dense two-phase tableau simplex with Bland's pivot rule (smallest eligible
index, ties by smallest basic variable), which terminates on degenerate
problems.  The tableau is kept fraction-free: entries are integers over one
positive denominator, and every pivot divides exactly by the previous pivot
element, so no rounding of any kind occurs.

Every solve re-checks its own answer from scratch: primal feasibility, dual
feasibility, dual sign conditions and equality of the primal and dual
objective values are verified with Fraction arithmetic against the original
input before the solution is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = [
    "EQ",
    "GE",
    "LE",
    "Infeasible",
    "LPError",
    "LPSolution",
    "Unbounded",
    "solve_lp_exact",
]

LE = "<="
GE = ">="
EQ = "=="

_RELATIONS = (LE, GE, EQ)

# Running tally of solves and of solves whose primal/dual pair passed the
# independent optimality audit.  The two counts must always agree.
SOLVE_STATS = {"solves": 0, "certified": 0}


class LPError(Exception):
    """Base class for solver failures."""


class Infeasible(LPError):
    """The constraint system admits no nonnegative solution."""


class Unbounded(LPError):
    """The objective is unbounded over the feasible region."""


@dataclass(frozen=True)
class LPSolution:
    """An optimal vertex together with matching dual multipliers.

    ``value == objective . primal == sum(dual[i] * rhs[i])`` holds exactly.
    For a maximisation problem the duals satisfy y >= 0 on <= rows and
    y <= 0 on >= rows; for minimisation the signs are reversed.
    """

    value: Fraction
    primal: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]


Constraint = tuple[Sequence, str, object]


def solve_lp_exact(
    objective: Sequence, constraints: Sequence[Constraint], maximize: bool = True
) -> LPSolution:
    """Optimise a linear objective over {x >= 0 : constraints} exactly.

    Each constraint is a triple (coefficients, relation, rhs) with relation
    one of "<=", ">=", "==".  Raises Infeasible or Unbounded as appropriate.
    """
    c = [Fraction(x) for x in objective]
    if not maximize:
        sol = solve_lp_exact([-x for x in c], constraints, maximize=True)
        return LPSolution(-sol.value, sol.primal, tuple(-y for y in sol.dual))

    nvars = len(c)
    rows: list[list[Fraction]] = []
    rels: list[str] = []
    rhs: list[Fraction] = []
    for coeffs, rel, b in constraints:
        coeffs = [Fraction(x) for x in coeffs]
        if len(coeffs) != nvars:
            raise ValueError(
                f"constraint has {len(coeffs)} coefficients, expected {nvars}"
            )
        if rel not in _RELATIONS:
            raise ValueError(f"unknown relation {rel!r}")
        rows.append(coeffs)
        rels.append(rel)
        rhs.append(Fraction(b))

    x, y = _simplex(c, rows, rels, rhs)
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    # An infeasible or unbounded run raises above and is not a solve; any
    # completed solve must certify, so the two counters stay equal.
    SOLVE_STATS["solves"] += 1
    _certify_optimal(c, rows, rels, rhs, x, y, value)
    SOLVE_STATS["certified"] += 1
    return LPSolution(value, tuple(x), tuple(y))


def _simplex(
    c: list[Fraction],
    rows: list[list[Fraction]],
    rels: list[str],
    rhs: list[Fraction],
) -> tuple[list[Fraction], list[Fraction]]:
    nvars = len(c)
    m = len(rows)

    # Integerise: scale each row to integers, flip rows with negative rhs so
    # the all-slack start is feasible.  Both transforms are undone on the
    # duals at extraction time.
    int_rows: list[list[int]] = []
    int_rhs: list[int] = []
    row_rel: list[str] = []
    scale: list[Fraction] = []
    for i in range(m):
        den = lcm(*(f.denominator for f in rows[i]), rhs[i].denominator)
        coeffs = [int(f * den) for f in rows[i]]
        b = int(rhs[i] * den)
        factor = Fraction(den)
        rel = rels[i]
        if b < 0:
            coeffs = [-a for a in coeffs]
            b = -b
            factor = -factor
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        int_rows.append(coeffs)
        int_rhs.append(b)
        row_rel.append(rel)
        scale.append(factor)

    obj_den = lcm(*(f.denominator for f in c)) if c else 1
    int_c = [int(f * obj_den) for f in c]

    # Column layout: structural, slack/surplus, artificial, rhs.
    slack_col = [-1] * m
    art_col = [-1] * m
    next_col = nvars
    for i in range(m):
        if row_rel[i] in (LE, GE):
            slack_col[i] = next_col
            next_col += 1
    for i in range(m):
        if row_rel[i] in (GE, EQ):
            art_col[i] = next_col
            next_col += 1
    rhs_col = next_col
    ncols = next_col + 1

    tab: list[list[int]] = []
    basis: list[int] = []
    for i in range(m):
        row = [0] * ncols
        row[:nvars] = int_rows[i]
        row[rhs_col] = int_rhs[i]
        if slack_col[i] >= 0:
            row[slack_col[i]] = 1 if row_rel[i] == LE else -1
        if art_col[i] >= 0:
            row[art_col[i]] = 1
            basis.append(art_col[i])
        else:
            basis.append(slack_col[i])
        tab.append(row)

    state = _Tableau(tab, basis, rhs_col, denom=1)
    artificials = frozenset(col for col in art_col if col >= 0)

    if artificials:
        _phase_one(state, art_col, artificials)

    # Live rows may have shrunk (redundant rows get dropped in phase one).
    zrow = [0] * ncols
    for j in range(ncols):
        acc = 0
        for i, row in enumerate(state.tab):
            cb = state.basis[i]
            if cb < nvars and int_c[cb]:
                acc += int_c[cb] * row[j]
        if j < nvars:
            acc -= state.denom * int_c[j]
        zrow[j] = acc
    state.zrow = zrow

    _bland_loop(state, banned=artificials)

    # Primal values of the structural variables.
    x = [Fraction(0)] * nvars
    for i, row in enumerate(state.tab):
        if state.basis[i] < nvars:
            x[state.basis[i]] = Fraction(row[state.rhs_col], state.denom)

    # Dual of row i is the reduced cost at its identity column, mapped back
    # through the row scaling and the objective scaling.
    y = [Fraction(0)] * m
    for i in range(m):
        if i in state.dropped:
            continue
        col = art_col[i] if art_col[i] >= 0 else slack_col[i]
        y[i] = Fraction(state.zrow[col], state.denom) * scale[i] / obj_den
    return x, y


class _Tableau:
    """Mutable integer tableau with a shared positive denominator."""

    def __init__(self, tab: list[list[int]], basis: list[int], rhs_col: int, denom: int):
        self.tab = tab
        self.basis = basis
        self.rhs_col = rhs_col
        self.denom = denom
        self.zrow: list[int] = []
        self.dropped: set[int] = set()
        self.row_ids = list(range(len(tab)))

    def pivot(self, r: int, col: int) -> None:
        tab = self.tab
        d = self.denom
        prow = tab[r]
        p = prow[col]
        if p == 0:
            raise LPError("zero pivot element")
        if p < 0:
            prow = [-a for a in prow]
            tab[r] = prow
            p = -p
        for i, row in enumerate(tab):
            if i == r:
                continue
            f = row[col]
            if f == 0:
                if p != d:
                    tab[i] = [a * p // d for a in row]
            else:
                tab[i] = [(a * p - f * b) // d for a, b in zip(row, prow)]
        z = self.zrow
        if z:
            f = z[col]
            if f == 0:
                if p != d:
                    self.zrow = [a * p // d for a in z]
            else:
                self.zrow = [(a * p - f * b) // d for a, b in zip(z, prow)]
        self.denom = p
        self.basis[r] = col


def _choose_row(state: _Tableau, col: int) -> int | None:
    """Bland ratio test: smallest rhs/entry over positive entries, ties by
    smallest basic variable index."""
    best = None
    rc = state.rhs_col
    for i, row in enumerate(state.tab):
        a = row[col]
        if a <= 0:
            continue
        b = row[rc]
        if best is None:
            best = (i, b, a)
            continue
        _, bb, ba = best
        diff = b * ba - bb * a
        if diff < 0 or (diff == 0 and state.basis[i] < state.basis[best[0]]):
            best = (i, b, a)
    return None if best is None else best[0]


def _bland_loop(state: _Tableau, banned: frozenset[int]) -> None:
    limit = 20000 + 200 * (len(state.tab) + state.rhs_col)
    z = state.zrow
    for _ in range(limit):
        enter = -1
        for j in range(state.rhs_col):
            if z[j] < 0 and j not in banned:
                enter = j
                break
        if enter < 0:
            return
        leave = _choose_row(state, enter)
        if leave is None:
            raise Unbounded(f"objective unbounded along column {enter}")
        state.pivot(leave, enter)
        z = state.zrow
    raise LPError("pivot limit exceeded")


def _phase_one(state: _Tableau, art_col: list[int], artificials: frozenset[int]) -> None:
    """Drive the artificial variables to zero, or report infeasibility."""
    ncols = state.rhs_col + 1
    z = [0] * ncols
    art_rows = [i for i, b in enumerate(state.basis) if b in artificials]
    for j in range(ncols):
        z[j] = -sum(state.tab[i][j] for i in art_rows)
        if j in artificials:
            z[j] += state.denom
    state.zrow = z

    # Artificial columns never re-enter: whenever the system is feasible it
    # has an optimum with every artificial at zero, so restricting the
    # entering choice to real columns still drives the phase-one objective
    # to zero exactly when feasibility holds.
    limit = 20000 + 200 * (len(state.tab) + ncols)
    for _ in range(limit):
        z = state.zrow
        enter = -1
        for j in range(state.rhs_col):
            if z[j] < 0 and j not in artificials:
                enter = j
                break
        if enter < 0:
            break
        leave = _choose_row(state, enter)
        if leave is None:
            raise LPError("phase one unbounded; this cannot happen")
        state.pivot(leave, enter)
    else:
        raise LPError("pivot limit exceeded in phase one")

    rc = state.rhs_col
    for i, b in enumerate(state.basis):
        if b in artificials and state.tab[i][rc] > 0:
            raise Infeasible("artificial variable stuck at a positive value")

    # Degenerate artificials still in the basis: pivot them out on any live
    # column, or drop the row as redundant.
    for i in range(len(state.tab) - 1, -1, -1):
        if state.basis[i] not in artificials:
            continue
        row = state.tab[i]
        col = next(
            (
                j
                for j in range(state.rhs_col)
                if j not in artificials and row[j] != 0
            ),
            -1,
        )
        if col >= 0:
            state.pivot(i, col)
        else:
            state.dropped.add(state.row_ids[i])
            del state.tab[i]
            del state.basis[i]
            del state.row_ids[i]


def _certify_optimal(
    c: list[Fraction],
    rows: list[list[Fraction]],
    rels: list[str],
    rhs: list[Fraction],
    x: list[Fraction],
    y: list[Fraction],
    value: Fraction,
) -> None:
    """Independent optimality proof for a maximisation problem.

    Primal feasibility, dual feasibility with the right signs, and equal
    objectives together certify optimality of both solutions; any failure is
    a solver bug, reported as AssertionError.
    """
    for xi in x:
        assert xi >= 0, "primal variable went negative"
    for row, rel, b in zip(rows, rels, rhs):
        lhs = sum((a * xi for a, xi in zip(row, x)), Fraction(0))
        if rel == LE:
            assert lhs <= b, "primal constraint violated"
        elif rel == GE:
            assert lhs >= b, "primal constraint violated"
        else:
            assert lhs == b, "primal constraint violated"
    for yi, rel in zip(y, rels):
        if rel == LE:
            assert yi >= 0, "dual sign violated on a <= row"
        elif rel == GE:
            assert yi <= 0, "dual sign violated on a >= row"
    for j in range(len(c)):
        reduced = sum((y[i] * rows[i][j] for i in range(len(rows))), Fraction(0))
        assert reduced >= c[j], "dual constraint violated"
    dual_value = sum((yi * b for yi, b in zip(y, rhs)), Fraction(0))
    assert value == dual_value, "strong duality failed"
