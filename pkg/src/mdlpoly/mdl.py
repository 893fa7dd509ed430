"""Measurement-dependent local models with bounded input distributions.

The model constrains the hidden-variable-conditioned input distribution
P(x,y|lambda) to the box  l <= P(x,y|lambda) <= h  (so l <= 1/(n_x n_y) <= h
is required for the box to contain a distribution).  The set of correlations
P(a,b,x,y) the model can produce is a polytope: the convex hull of products
of an input-box vertex with a deterministic local strategy.

`input_polytope_vertices` enumerates the vertices of the input box
analytically: apart from the degenerate case l = 1/(n_x n_y) or
h = 1/(n_x n_y) (a single uniform vertex), they are the distinct
permutations of the profile

    (h, ..., h, l, ..., l, f)   with n entries h, n_x n_y - n - 1 entries l,
                                 f = 1 - n h - (n_x n_y - n - 1) l,

where n = floor((1 - n_x n_y l) / (h - l)).  When that ratio is an integer
the profile with n and the one with n - 1 coincide as multisets, so the
enumeration stays duplicate-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .polytope import VRepresentation
from .rationals import frac
from .scenario import (
    ConditionalDistribution,
    InputDistribution,
    Scenario,
    compose,
)

_ONE = Fraction(1)


class InvalidBoundsError(ValueError):
    """Source bounds outside 0 <= l <= 1/(n_x n_y) <= h <= 1."""


@dataclass(frozen=True)
class SourceBounds:
    """Bounds l <= P(x,y|lambda) <= h on the hidden-variable input law."""

    lower: Fraction
    upper: Fraction
    scenario: Scenario

    def __post_init__(self):
        object.__setattr__(self, "lower", frac(self.lower))
        object.__setattr__(self, "upper", frac(self.upper))
        uniform = Fraction(1, self.scenario.input_size)
        if not (0 <= self.lower <= uniform <= self.upper <= 1):
            raise InvalidBoundsError(
                f"need 0 <= l <= {uniform} <= h <= 1, got l={self.lower}, h={self.upper}"
            )


@dataclass(frozen=True)
class DeterministicStrategy:
    """Local deterministic responses: outputs_a[x] = a, outputs_b[y] = b."""

    outputs_a: tuple[int, ...]
    outputs_b: tuple[int, ...]

    def conditional(self, scenario: Scenario) -> ConditionalDistribution:
        p = tuple(
            _ONE if (a == self.outputs_a[x] and b == self.outputs_b[y]) else Fraction(0)
            for a, b, x, y in scenario.outcome_tuples()
        )
        return ConditionalDistribution(scenario, p)


def input_polytope_vertices(bounds: SourceBounds) -> VRepresentation:
    """Vertices of {q : sum q = 1, l <= q_i <= h} as a V-representation."""
    size = bounds.scenario.input_size
    uniform = Fraction(1, size)
    if bounds.lower == uniform or bounds.upper == uniform:
        return VRepresentation(size, ((uniform,) * size,))
    l, h = bounds.lower, bounds.upper
    n = math.floor((1 - size * l) / (h - l))
    f = 1 - n * h - (size - n - 1) * l
    profile = (h,) * n + (l,) * (size - n - 1) + (f,)
    verts = sorted(set(permutations(profile)))
    return VRepresentation(size, tuple(verts))


def input_vertex_distributions(bounds: SourceBounds) -> tuple[InputDistribution, ...]:
    vrep = input_polytope_vertices(bounds)
    return tuple(InputDistribution(bounds.scenario, v) for v in vrep.vertices)


def local_vertices(
    scenario: Scenario,
) -> tuple[tuple[DeterministicStrategy, ConditionalDistribution], ...]:
    """All deterministic strategies with their conditional distributions."""
    out = []
    for fa in product(range(scenario.n_a), repeat=scenario.n_x):
        for fb in product(range(scenario.n_b), repeat=scenario.n_y):
            strat = DeterministicStrategy(fa, fb)
            out.append((strat, strat.conditional(scenario)))
    return tuple(out)


def mdl_vertices(bounds: SourceBounds) -> VRepresentation:
    """Products of input-box vertices with deterministic strategies.

    Their convex hull is the full correlation polytope of the model; the
    VRepresentation constructor deduplicates products exactly (coincidences
    happen when an input vertex has a zero entry).
    """
    scenario = bounds.scenario
    points = []
    for q in input_vertex_distributions(bounds):
        for _, cond in local_vertices(scenario):
            points.append(compose(q, cond).p)
    return VRepresentation(scenario.full_size, tuple(points))


def min_entropy_bounds(max_probability, scenario: Scenario) -> SourceBounds:
    """Bounds for a min-entropy source: l = 0, h = 2^(-H).

    The caller supplies h = 2^(-H) as an exact rational (H itself is
    typically irrational in bits).  h = 1/(n_x n_y) is the uniform seed;
    in the 2222 scenario h = 1/4 collapses the model to Bell-locality and
    any h >= 1/3 makes it reproduce every nonsignaling distribution.
    """
    h = frac(max_probability)
    return SourceBounds(Fraction(0), h, scenario)
