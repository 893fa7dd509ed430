"""Physical constraint systems over full-probability coordinates.

Two equality families over P(a,b,x,y):

* uniform inputs: sum_ab P(a,b,x,y) = 1/(n_x n_y) for every input pair;
* nonsignaling: marginals of one party do not depend on the other party's
  input.  Stated over full probabilities these read
  sum_b P(a,b,x,y) = sum_b P(a,b,x,y'), which encodes nonsignaling exactly
  when combined with the uniform-input equalities (the intended use).

For the 2222 scenario the module also provides the 8-coordinate chart of
the joint slice (nonsignaling + uniform inputs): the coordinates are the
marginal/joint conditional probabilities

    t = (P_A(0|0), P_A(0|1), P_B(0|0), P(00|00), P(00|10),
         P_B(0|1), P(00|01), P(00|11))

in the fixed order used throughout the inequality catalog, where row
vectors of length 9 mean  row[0] + row[1:] . t <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polytope import AffineSubspace, LinearEquality, LinearInequality
from .rationals import Vector, dot, frac, integerize
from .scenario import CHSH_SCENARIO, FullDistribution, Scenario

_ZERO = Fraction(0)
_ONE = Fraction(1)

TABLE_BASIS_LABELS = (
    "1",
    "P_A(0|0)",
    "P_A(0|1)",
    "P_B(0|0)",
    "P(00|00)",
    "P(00|10)",
    "P_B(0|1)",
    "P(00|01)",
    "P(00|11)",
)


@dataclass(frozen=True)
class ConstraintSet:
    scenario: Scenario
    equalities: tuple[LinearEquality, ...]

    def satisfied_by(self, dist: FullDistribution) -> bool:
        return all(eq.satisfied_by(dist.p) for eq in self.equalities)

    def residuals(self, vector) -> tuple[Fraction, ...]:
        vec = tuple(frac(v) for v in vector)
        return tuple(eq.evaluate(vec) - eq.bound for eq in self.equalities)

    def as_rows(self) -> tuple[tuple[Vector, Fraction], ...]:
        return tuple(
            (tuple(frac(c) for c in eq.coefficients), frac(eq.bound))
            for eq in self.equalities
        )


def uniform_input_equalities(scenario: Scenario) -> ConstraintSet:
    """sum_ab P(a,b,x,y) = 1/(n_x n_y) for each (x,y); implies normalization."""
    eqs = []
    target = Fraction(1, scenario.input_size)
    for x, y in scenario.input_tuples():
        coeffs = [_ZERO] * scenario.full_size
        for a in range(scenario.n_a):
            for b in range(scenario.n_b):
                coeffs[scenario.full_index(a, b, x, y)] = _ONE
        eqs.append(LinearEquality.make(coeffs, target))
    return ConstraintSet(scenario, tuple(eqs))


def nonsignaling_equalities(scenario: Scenario) -> ConstraintSet:
    """Marginal-independence equalities (2 n_a n_x + 2 n_b n_y rows for 2222: 8).

    The rows compare unnormalized marginals across input pairs, which equals
    the conditional nonsignaling condition whenever inputs are uniform.
    Jointly the 8 rows of the 2222 scenario have rank 4 given uniform inputs;
    rank handling is left to the consumers.
    """
    eqs = []
    sc = scenario
    for a in range(sc.n_a):
        for x in range(sc.n_x):
            for y1 in range(sc.n_y):
                for y2 in range(y1 + 1, sc.n_y):
                    coeffs = [_ZERO] * sc.full_size
                    for b in range(sc.n_b):
                        coeffs[sc.full_index(a, b, x, y1)] += _ONE
                        coeffs[sc.full_index(a, b, x, y2)] -= _ONE
                    eqs.append(LinearEquality.make(coeffs, 0))
    for b in range(sc.n_b):
        for y in range(sc.n_y):
            for x1 in range(sc.n_x):
                for x2 in range(x1 + 1, sc.n_x):
                    coeffs = [_ZERO] * sc.full_size
                    for a in range(sc.n_a):
                        coeffs[sc.full_index(a, b, x1, y)] += _ONE
                        coeffs[sc.full_index(a, b, x2, y)] -= _ONE
                    eqs.append(LinearEquality.make(coeffs, 0))
    return ConstraintSet(scenario, tuple(eqs))


def slice_equalities(scenario: Scenario) -> ConstraintSet:
    """Nonsignaling and uniform-input equalities combined."""
    ns = nonsignaling_equalities(scenario)
    ui = uniform_input_equalities(scenario)
    return ConstraintSet(scenario, ns.equalities + ui.equalities)


def _require_chsh_scenario(scenario: Scenario) -> None:
    if scenario != CHSH_SCENARIO:
        raise ValueError("the table chart is defined for the 2222 scenario only")


def table_point_to_vector(t, scenario: Scenario = CHSH_SCENARIO) -> Vector:
    """Embed chart coordinates into full-probability coordinates.

    Per input pair (x,y) with joint J = P(00|xy) and marginals pa = P_A(0|x),
    pb = P_B(0|y):  P(01|xy) = pa - J, P(10|xy) = pb - J,
    P(11|xy) = 1 - pa - pb + J; full probabilities carry the uniform 1/4.
    """
    _require_chsh_scenario(scenario)
    t = tuple(frac(v) for v in t)
    if len(t) != 8:
        raise ValueError("chart points have 8 coordinates")
    pa = {0: t[0], 1: t[1]}
    pb = {0: t[2], 1: t[5]}
    joint = {(0, 0): t[3], (1, 0): t[4], (0, 1): t[6], (1, 1): t[7]}
    quarter = Fraction(1, 4)
    p = [_ZERO] * scenario.full_size
    for (x, y), j in joint.items():
        block = {
            (0, 0): j,
            (0, 1): pa[x] - j,
            (1, 0): pb[y] - j,
            (1, 1): 1 - pa[x] - pb[y] + j,
        }
        for (a, b), value in block.items():
            p[scenario.full_index(a, b, x, y)] = quarter * value
    return tuple(p)


@lru_cache(maxsize=None)
def table_subspace(scenario: Scenario = CHSH_SCENARIO) -> AffineSubspace:
    """Affine chart of the nonsignaling + uniform-input slice."""
    _require_chsh_scenario(scenario)
    origin = table_point_to_vector((_ZERO,) * 8)
    directions = []
    for i in range(8):
        unit = [_ZERO] * 8
        unit[i] = _ONE
        directions.append(
            tuple(a - b for a, b in zip(table_point_to_vector(unit), origin))
        )
    return AffineSubspace(origin, tuple(directions))


@lru_cache(maxsize=None)
def table_coordinate_functionals(scenario: Scenario = CHSH_SCENARIO) -> tuple[Vector, ...]:
    """Linear functionals recovering t from a full distribution on the slice.

    Each t_i equals g_i . P for any slice point; the marginal functionals fix
    the other party's input to 0 (any choice agrees on the slice).
    """
    _require_chsh_scenario(scenario)
    sc = scenario

    def cells(entries) -> Vector:
        coeffs = [_ZERO] * sc.full_size
        for (a, b, x, y), w in entries:
            coeffs[sc.full_index(a, b, x, y)] += frac(w)
        return tuple(coeffs)

    four = Fraction(4)
    return (
        cells([((0, b, 0, 0), four) for b in range(2)]),          # P_A(0|0)
        cells([((0, b, 1, 0), four) for b in range(2)]),          # P_A(0|1)
        cells([((a, 0, 0, 0), four) for a in range(2)]),          # P_B(0|0)
        cells([((0, 0, 0, 0), four)]),                            # P(00|00)
        cells([((0, 0, 1, 0), four)]),                            # P(00|10)
        cells([((a, 0, 0, 1), four) for a in range(2)]),          # P_B(0|1)
        cells([((0, 0, 0, 1), four)]),                            # P(00|01)
        cells([((0, 0, 1, 1), four)]),                            # P(00|11)
    )


def vector_to_table_point(vector, scenario: Scenario = CHSH_SCENARIO) -> Vector:
    """Chart coordinates of a full-probability vector on the slice."""
    vec = tuple(frac(v) for v in vector)
    return tuple(dot(g, vec) for g in table_coordinate_functionals(scenario))


def to_table_basis(ineq: LinearInequality, scenario: Scenario = CHSH_SCENARIO) -> tuple[Fraction, ...]:
    """Rewrite c . p <= b as a 9-vector (const, gamma) with const + gamma . t <= 0."""
    _require_chsh_scenario(scenario)
    sub = table_subspace(scenario)
    coeffs = tuple(frac(c) for c in ineq.coefficients)
    const = dot(coeffs, sub.origin) - frac(ineq.bound)
    gamma = tuple(dot(coeffs, d) for d in sub.directions)
    return (const,) + gamma


def from_table_basis(row, scenario: Scenario = CHSH_SCENARIO) -> LinearInequality:
    """Lift a 9-vector table inequality back to full coordinates.

    The constant rides on the normalization functional sum_abxy P = 1, the
    chart coefficients on the coordinate functionals; on the slice the lift
    evaluates exactly to the table expression.
    """
    _require_chsh_scenario(scenario)
    row = tuple(frac(v) for v in row)
    if len(row) != 9:
        raise ValueError("table rows have 9 entries")
    coeffs = [row[0]] * scenario.full_size
    for gamma_i, g in zip(row[1:], table_coordinate_functionals(scenario)):
        if gamma_i == 0:
            continue
        coeffs = [c + gamma_i * gc for c, gc in zip(coeffs, g)]
    return LinearInequality.make(coeffs, 0)


def canonical_table_row(row) -> tuple[int, ...]:
    """Scale a table 9-vector to coprime integers by a positive factor."""
    return integerize(tuple(frac(v) for v in row))
