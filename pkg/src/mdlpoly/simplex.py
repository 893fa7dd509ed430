"""Exact linear programming over the rationals.

Two-phase primal simplex on a dense Fraction tableau with Bland's smallest
index rule, which guarantees termination on degenerate problems.  Problems
are stated as

    max / min  c . x
    s.t.       A_ub x <= b_ub
               A_eq x == b_eq
               x >= 0           (only when nonneg=True; variables are free
                                 by default and get split internally)

Certificates:

* status "optimal":    `x` is an optimizer, `value` the optimum.
* status "infeasible": `certificate` is a Farkas vector w over the rows
  (ub rows first, then eq rows) with w >= 0 on the ub rows,
  w . [b_ub; b_eq] < 0, and w^T [A_ub; A_eq] == 0 for free variables
  (>= 0 componentwise when nonneg=True).  Such a w proves infeasibility.
* status "unbounded":  `certificate` is a feasible ray d in x-space with
  c . d > 0 (for max), i.e. an improving direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import Vector, frac

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None
    x: Vector | None
    certificate: Vector | None

    @property
    def witness(self) -> Vector | None:
        return self.x if self.status == OPTIMAL else self.certificate


class _Tableau:
    """Dense simplex tableau: rows[i] = B^-1 [A | b], plus a reduced-cost row."""

    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis
        self.ncols = len(rows[0]) - 1 if rows else 0
        self.rc: list[Fraction] = []
        self.objective = _ZERO

    def set_costs(self, costs: list[Fraction]) -> None:
        """Recompute the reduced-cost row for the current basis."""
        rc = list(costs)
        obj = _ZERO
        for i, bi in enumerate(self.basis):
            cb = costs[bi]
            if cb == 0:
                continue
            row = self.rows[i]
            obj += cb * row[-1]
            for j in range(self.ncols):
                if row[j]:
                    rc[j] -= cb * row[j]
        self.rc = rc
        self.objective = obj

    def pivot(self, r: int, e: int) -> None:
        row = self.rows[r]
        piv = row[e]
        if piv != 1:
            inv = 1 / piv
            self.rows[r] = row = [v * inv for v in row]
        for i, other in enumerate(self.rows):
            if i == r or not other[e]:
                continue
            f = other[e]
            self.rows[i] = [v - f * w for v, w in zip(other, row)]
        f = self.rc[e]
        if f:
            for j in range(self.ncols):
                self.rc[j] -= f * row[j]
            self.objective += f * row[-1]
        self.basis[r] = e

    def run(self, allowed: int) -> int | None:
        """Maximize. Returns None at optimum, or the entering column index
        of an unbounded direction.  `allowed` bounds the usable columns."""
        while True:
            enter = -1
            for j in range(allowed):
                if self.rc[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return None
            leave = -1
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return enter
            self.pivot(leave, enter)


def solve_lp(
    objective,
    *,
    a_ub=(),
    b_ub=(),
    a_eq=(),
    b_eq=(),
    sense: str = "max",
    nonneg: bool = False,
) -> LPResult:
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', got {sense!r}")
    c = [frac(v) for v in objective]
    n = len(c)
    if sense == "min":
        c = [-v for v in c]

    a_ub = [list(map(frac, row)) for row in a_ub]
    b_ub = [frac(v) for v in b_ub]
    a_eq = [list(map(frac, row)) for row in a_eq]
    b_eq = [frac(v) for v in b_eq]
    for row in (*a_ub, *a_eq):
        if len(row) != n:
            raise ValueError("constraint row length does not match objective")
    if len(a_ub) != len(b_ub) or len(a_eq) != len(b_eq):
        raise ValueError("constraint matrix / rhs length mismatch")

    m_ub, m_eq = len(a_ub), len(a_eq)
    m = m_ub + m_eq
    if m == 0:
        improving = [j for j, v in enumerate(c) if (v > 0 if nonneg else v != 0)]
        if improving:
            j = improving[0]
            ray = [_ZERO] * n
            ray[j] = _ONE if (nonneg or c[j] > 0) else -_ONE
            return LPResult(UNBOUNDED, None, None, tuple(ray))
        return LPResult(OPTIMAL, _ZERO, (_ZERO,) * n, None)
    width = n if nonneg else 2 * n  # free variables split as x = u - v
    nstruct = width + m_ub  # structural columns include ub slacks

    def x_cols(row: list[Fraction]) -> list[Fraction]:
        if nonneg:
            return list(row)
        out = []
        for v in row:
            out.append(v)
        for v in row:
            out.append(-v)
        return out

    rows: list[list[Fraction]] = []
    flips: list[Fraction] = []
    for i in range(m_ub):
        body = x_cols(a_ub[i])
        slack = [_ZERO] * m_ub
        slack[i] = _ONE
        rows.append(body + slack + [b_ub[i]])
        flips.append(_ONE)
    for i in range(m_eq):
        body = x_cols(a_eq[i])
        rows.append(body + [_ZERO] * m_ub + [b_eq[i]])
        flips.append(_ONE)
    for i, row in enumerate(rows):
        if row[-1] < 0:
            rows[i] = [-v for v in row]
            flips[i] = -_ONE

    # Phase 1: artificial basis, maximize -(sum of artificials).
    for i, row in enumerate(rows):
        art = [_ZERO] * m
        art[i] = _ONE
        rows[i] = row[:-1] + art + [row[-1]]
    tab = _Tableau(rows, [nstruct + i for i in range(m)])
    costs1 = [_ZERO] * nstruct + [-_ONE] * m
    tab.set_costs(costs1)
    assert tab.run(nstruct + m) is None  # bounded below by -(sum b) automatically
    if tab.objective < 0:
        # Farkas: pi_i = -1 - rc[artificial column i]; map back through row flips.
        w = tuple(flips[i] * (-_ONE - tab.rc[nstruct + i]) for i in range(m))
        return LPResult(INFEASIBLE, None, None, w)

    # Drive artificials out of the basis where possible; drop 0 = 0 rows.
    keep: list[int] = []
    for i in range(len(tab.basis)):
        if tab.basis[i] < nstruct:
            keep.append(i)
            continue
        piv = next((j for j in range(nstruct) if tab.rows[i][j] != 0), None)
        if piv is None:
            continue  # redundant constraint, row is all zeros
        tab.pivot(i, piv)
        keep.append(i)
    tab.rows = [tab.rows[i][: nstruct] + [tab.rows[i][-1]] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]
    tab.ncols = nstruct

    # Phase 2.
    if nonneg:
        costs2 = list(c) + [_ZERO] * m_ub
    else:
        costs2 = list(c) + [-v for v in c] + [_ZERO] * m_ub
    tab.set_costs(costs2)
    enter = tab.run(nstruct)

    def to_x(col_values: dict[int, Fraction]) -> Vector:
        if nonneg:
            return tuple(col_values.get(j, _ZERO) for j in range(n))
        return tuple(
            col_values.get(j, _ZERO) - col_values.get(n + j, _ZERO) for j in range(n)
        )

    if enter is not None:
        # Unbounded: ray has 1 in the entering column, -column elsewhere basic.
        ray_cols = {enter: _ONE}
        for i, bi in enumerate(tab.basis):
            if tab.rows[i][enter]:
                ray_cols[bi] = -tab.rows[i][enter]
        return LPResult(UNBOUNDED, None, None, to_x(ray_cols))

    solution = {bi: tab.rows[i][-1] for i, bi in enumerate(tab.basis)}
    x = to_x(solution)
    value = tab.objective if sense == "max" else -tab.objective
    return LPResult(OPTIMAL, value, x, None)
