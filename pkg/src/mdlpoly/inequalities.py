"""Named inequality catalog for bounded-input-source models.

Three groups live here: the golden inequality (the parametrized witness with
coefficients built from the source bounds themselves), the CHSH expression
together with its exact bound under bounded sources, and the seven conjectured
facet families of the restricted polytope as polynomials in the upper bound h.
Everything evaluates exactly at rational parameters; quantum points evaluate
through the same code paths with their float entries lifted to exact binary
fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .constraints import slice_equalities, table_coordinate_functionals, vector_to_table_point
from .mdl import SourceBounds, mdl_vertices
from .polytope import LinearInequality, PolytopeOptimum, optimize_over_vertices
from .rationals import Vector, dot, frac
from .scenario import CHSH_SCENARIO, ConditionalDistribution, FullDistribution, Scenario

_ZERO = Fraction(0)
_ONE = Fraction(1)

FULL_BASIS = "full"
TABLE_BASIS = "table"


@dataclass(frozen=True)
class MdlInequality:
    """An expression that every bounded-source local point keeps <= bound.

    `coefficients` are either weights on the 16 full probabilities P(a,b,x,y)
    (basis "full") or the 9 table-basis weights (constant, marginal and joint
    terms; basis "table").  Table-basis inequalities are only meaningful on
    the nonsignaling, uniform-input slice.  Coefficients keep their natural
    scale so reported violations match the catalog's closed forms.
    """

    coefficients: Vector
    bound: Fraction = _ZERO
    basis: str = FULL_BASIS
    parameters: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.basis not in (FULL_BASIS, TABLE_BASIS):
            raise ValueError(f"unknown basis {self.basis!r}")
        coeffs = tuple(frac(v) for v in self.coefficients)
        if self.basis == TABLE_BASIS and len(coeffs) != 9:
            raise ValueError("table-basis inequalities have 9 coefficients")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "bound", frac(self.bound))
        object.__setattr__(self, "parameters", tuple(frac(v) for v in self.parameters))

    def evaluate(self, point) -> Fraction:
        """Exact value on a full-probability vector (or FullDistribution).

        Table-basis inequalities first project the point onto the table
        coordinates, which is only faithful for points on the slice.
        """
        vec = tuple(frac(v) for v in getattr(point, "p", point))
        if self.basis == TABLE_BASIS:
            t = vector_to_table_point(vec)
            return self.coefficients[0] + dot(self.coefficients[1:], t)
        return dot(self.coefficients, vec)

    def violation(self, point) -> Fraction:
        return self.evaluate(point) - self.bound

    def satisfied_by(self, point) -> bool:
        return self.violation(point) <= 0

    def as_linear(self) -> LinearInequality:
        """Canonical integer-scaled form on full coordinates."""
        if self.basis == TABLE_BASIS:
            from .constraints import from_table_basis

            return from_table_basis(self.coefficients)
        return LinearInequality.make(self.coefficients, self.bound)


def golden_inequality(lower, upper, scenario: Scenario = CHSH_SCENARIO) -> MdlInequality:
    """l P(0000) - h (P(0101) + P(1010) + P(0011)) <= 0.

    Valid for every local model whose input source obeys l <= P(xy|s) <= h:
    the positive term is capped by its coefficient's partner bound and the
    negative terms soak up every strategy that could realize it.
    """
    bounds = SourceBounds(frac(lower), frac(upper), scenario)
    coeffs = [_ZERO] * scenario.full_size
    coeffs[scenario.full_index(0, 0, 0, 0)] = bounds.lower
    for cell in ((0, 1, 0, 1), (1, 0, 1, 0), (0, 0, 1, 1)):
        coeffs[scenario.full_index(*cell)] = -bounds.upper
    return MdlInequality(tuple(coeffs), _ZERO, FULL_BASIS, (bounds.lower, bounds.upper))


def chsh_value(conditional):
    """CHSH expression sum (-1)^(a+b+xy) P(ab|xy).

    Exact Fraction for a ConditionalDistribution; float for an array of
    conditional probabilities indexed [a, b, x, y] (or flat in that order).
    """
    if isinstance(conditional, ConditionalDistribution):
        sc = conditional.scenario
        if (sc.n_x, sc.n_y, sc.n_a, sc.n_b) != (2, 2, 2, 2):
            raise ValueError("the CHSH expression needs binary inputs and outputs")
        return sum(
            (-1) ** (a + b + x * y) * conditional.prob(a, b, x, y)
            for a in range(2)
            for b in range(2)
            for x in range(2)
            for y in range(2)
        )
    arr = np.asarray(conditional, dtype=float).reshape(2, 2, 2, 2)
    total = 0.0
    for a in range(2):
        for b in range(2):
            for x in range(2):
                for y in range(2):
                    total += (-1) ** (a + b + x * y) * arr[a, b, x, y]
    return total


def chsh_full_functional(scenario: Scenario = CHSH_SCENARIO) -> Vector:
    """Weights (-1)^(a+b+xy) on full probabilities.

    On the uniform-input slice the conditional CHSH value is 4 times this
    functional's value.
    """
    coeffs = [_ZERO] * scenario.full_size
    for a in range(2):
        for b in range(2):
            for x in range(2):
                for y in range(2):
                    coeffs[scenario.full_index(a, b, x, y)] = Fraction((-1) ** (a + b + x * y))
    return tuple(coeffs)


@dataclass(frozen=True)
class MdlChshBound:
    """Exact CHSH maximum over the restricted bounded-source polytope.

    `witness` is the uniform mixture of every vertex maximizing the full-
    probability CHSH functional; construction checks it sits on the
    nonsignaling, uniform-input slice exactly.
    """

    value: Fraction
    effective_lower: Fraction
    witness: FullDistribution
    maximizer_count: int


def mdl_chsh_bound(lower, upper, scenario: Scenario = CHSH_SCENARIO) -> MdlChshBound:
    """CHSH bound 4(1 - 2 l') with l' = max(l, 1 - 3h), with witness mixture."""
    bounds = SourceBounds(frac(lower), frac(upper), scenario)
    if (scenario.n_x, scenario.n_y, scenario.n_a, scenario.n_b) != (2, 2, 2, 2):
        raise ValueError("the CHSH bound closed form needs the binary scenario")
    l_prime = max(bounds.lower, 1 - 3 * bounds.upper)
    functional = chsh_full_functional(scenario)
    verts = mdl_vertices(bounds).vertices
    values = [dot(functional, v) for v in verts]
    best = max(values)
    if best != 1 - 2 * l_prime:
        raise RuntimeError(
            f"vertex maximum {best} disagrees with closed form {1 - 2 * l_prime}"
        )
    maximizers = [v for v, val in zip(verts, values) if val == best]
    n = len(maximizers)
    mixture = tuple(
        sum((v[i] for v in maximizers), _ZERO) / n for i in range(scenario.full_size)
    )
    residuals = slice_equalities(scenario).residuals(mixture)
    if any(residuals):
        raise RuntimeError("witness mixture left the nonsignaling uniform slice")
    return MdlChshBound(
        value=4 * best,
        effective_lower=l_prime,
        witness=FullDistribution(scenario, mixture),
        maximizer_count=n,
    )


def chsh_lp_maximum(lower, upper, scenario: Scenario = CHSH_SCENARIO) -> PolytopeOptimum:
    """Exact LP maximum of conditional CHSH over the restricted polytope.

    Runs the mixture LP over all vertices with the slice equalities as extra
    rows; the objective carries the factor 4 that converts slice values of
    the full-probability functional to conditional units.
    """
    bounds = SourceBounds(frac(lower), frac(upper), scenario)
    objective = tuple(4 * c for c in chsh_full_functional(scenario))
    return optimize_over_vertices(
        mdl_vertices(bounds),
        objective,
        extra_equalities=slice_equalities(scenario).as_rows(),
        sense="max",
    )


# Conjectured facet families of the restricted polytope, one row per family.
# Each entry is the polynomial c0 + c1 h + c2 h^2 giving that table-basis
# coordinate's weight; the expression is <= 0.  Column order matches
# constraints.TABLE_BASIS_LABELS.
_TABLE1_POLYNOMIALS: tuple[tuple[tuple[int, int, int], ...], ...] = (
    ((2, -11, 12), (-1, 2, 0), (-1, 4, 0), (-1, 2, 0), (0, 2, 0), (2, -6, 0), (-1, 4, 0), (2, -6, 0), (0, -2, 0)),
    ((2, -11, 12), (-1, 4, 0), (-1, 3, 0), (-1, 4, 0), (0, -1, 0), (1, -3, 0), (-1, 3, 0), (1, -3, 0), (1, -3, 0)),
    ((1, -8, 11), (-1, 5, -4), (1, -4, 5), (-1, 5, -4), (1, -2, -3), (0, -2, 3), (1, -4, 5), (0, -2, 3), (-2, 9, -9)),
    ((1, -7, 8), (0, 0, 4), (0, 0, 0), (-1, 5, -4), (0, -1, 0), (1, -3, 0), (0, 2, -4), (0, -1, 0), (-1, 3, 0)),
    ((1, -8, 13), (-1, 6, -8), (0, 2, -5), (0, 1, -1), (0, -2, 5), (0, -1, 1), (0, 0, 0), (1, -4, 3), (-1, 4, -3)),
    ((2, -13, 20), (-1, 6, -8), (-1, 5, -7), (-1, 6, -8), (0, -2, 5), (1, -4, 3), (-1, 5, -7), (1, -4, 3), (0, 1, -1)),
    ((1, -4, 0), (-1, 3, 0), (0, 0, 0), (-1, 3, 0), (1, -3, 0), (0, 1, 0), (0, 0, 0), (0, 1, 0), (0, -1, 0)),
)

TABLE_FAMILY_COUNT = len(_TABLE1_POLYNOMIALS)


def table1_family(index: int, h) -> MdlInequality:
    """Catalog family `index` (1-based) evaluated at upper bound h.

    The families are conjectured to cut out the restricted polytope exactly
    for every h strictly between 1/4 and 1/3, together with positivity.
    """
    if not 1 <= index <= TABLE_FAMILY_COUNT:
        raise ValueError(f"family index must be 1..{TABLE_FAMILY_COUNT}, got {index}")
    hq = frac(h)
    row = tuple(c0 + c1 * hq + c2 * hq * hq for c0, c1, c2 in _TABLE1_POLYNOMIALS[index - 1])
    return MdlInequality(row, _ZERO, TABLE_BASIS, (hq,))


def table_objective(ineq: MdlInequality, scenario: Scenario = CHSH_SCENARIO) -> Vector:
    """Full-coordinate objective whose slice values equal the table expression.

    The constant rides on the normalization functional (all-ones), keeping
    the catalog's natural scale, unlike the integer-canonical as_linear().
    """
    if ineq.basis != TABLE_BASIS:
        raise ValueError("expected a table-basis inequality")
    obj = [ineq.coefficients[0]] * scenario.full_size
    for gamma, g in zip(ineq.coefficients[1:], table_coordinate_functionals(scenario)):
        if gamma == 0:
            continue
        obj = [o + gamma * gc for o, gc in zip(obj, g)]
    return tuple(obj)


def family_lp_maximum(lower, upper, index: int) -> PolytopeOptimum:
    """Exact LP maximum of a catalog family over the restricted polytope.

    Validity means the value is <= 0; saturation means it is exactly 0.
    """
    bounds = SourceBounds(frac(lower), frac(upper), CHSH_SCENARIO)
    ineq = table1_family(index, bounds.upper)
    return optimize_over_vertices(
        mdl_vertices(bounds),
        table_objective(ineq),
        extra_equalities=slice_equalities(CHSH_SCENARIO).as_rows(),
        sense="max",
    )


def critical_h(violation_at, tolerance: float = 1e-6, lower: float = 0.25, upper: float = 1 / 3):
    """Largest h in [lower, upper] with violation_at(h) > 0, by bisection.

    Assumes at most one sign change on the interval (violations in this
    catalog shrink as h grows).  Returns None when there is no violation at
    the lower end, and `upper` when the violation survives the whole range.
    """
    if violation_at(lower) <= 0:
        return None
    if violation_at(upper) > 0:
        return float(upper)
    lo, hi = float(lower), float(upper)
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        if violation_at(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def chsh_critical_h(quantum_value: float = 2 * math.sqrt(2), lower=0, tolerance: float = 1e-6):
    """h beyond which a given quantum CHSH value stops beating the bound.

    With the best quantum value 2 sqrt(2) and a min-entropy source (l = 0)
    this lands at (2 + sqrt(2))/12, about 0.2845.
    """
    l0 = float(frac(lower))

    def gap(h: float) -> float:
        l_prime = max(l0, 1 - 3 * h)
        return quantum_value - 4 * (1 - 2 * l_prime)

    return critical_h(gap, tolerance=tolerance)
