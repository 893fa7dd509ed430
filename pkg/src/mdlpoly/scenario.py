"""Bipartite Bell scenarios and exact probability distributions.

A scenario fixes the number of inputs (n_x, n_y) and outputs (n_a, n_b) for
the two parties.  Three distribution types live over it:

* ``FullDistribution``   -- P(a,b,x,y), the joint distribution over outputs
  and inputs; this is the coordinate system in which correlation polytopes
  are built.
* ``ConditionalDistribution`` -- P(a,b|x,y), normalized per input pair.
* ``InputDistribution``  -- P(x,y) over input pairs alone.

All probabilities are `fractions.Fraction`; validation is exact.  Flat
vectors are ordered lexicographically in (a, b, x, y) with `a` slowest,
and input vectors lexicographically in (x, y).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .rationals import Vector, frac, parse_rational, rational_str

ZERO = Fraction(0)
ONE = Fraction(1)


class ScenarioMismatchError(ValueError):
    """Raised when two objects built over different scenarios are combined."""


class InvalidDistributionError(ValueError):
    """Raised when a probability vector fails exact validation."""


class ZeroInputProbabilityError(ValueError):
    """Conditioning on an input pair that has probability zero."""

    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(f"input pair (x={x}, y={y}) has probability zero")


@dataclass(frozen=True)
class Scenario:
    """Numbers of inputs and outputs per party: (n_x, n_y, n_a, n_b)."""

    n_x: int
    n_y: int
    n_a: int
    n_b: int

    def __post_init__(self):
        for name in ("n_x", "n_y", "n_a", "n_b"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")

    @property
    def input_size(self) -> int:
        return self.n_x * self.n_y

    @property
    def full_size(self) -> int:
        return self.n_a * self.n_b * self.n_x * self.n_y

    def full_index(self, a: int, b: int, x: int, y: int) -> int:
        return ((a * self.n_b + b) * self.n_x + x) * self.n_y + y

    def input_index(self, x: int, y: int) -> int:
        return x * self.n_y + y

    def outcome_tuples(self) -> Iterator[tuple[int, int, int, int]]:
        """All (a, b, x, y) in flat order."""
        return product(range(self.n_a), range(self.n_b), range(self.n_x), range(self.n_y))

    def input_tuples(self) -> Iterator[tuple[int, int]]:
        return product(range(self.n_x), range(self.n_y))


CHSH_SCENARIO = Scenario(2, 2, 2, 2)


def _validated_vector(values, size: int, what: str) -> Vector:
    vec = tuple(frac(v) for v in values)
    if len(vec) != size:
        raise InvalidDistributionError(f"{what} needs {size} entries, got {len(vec)}")
    for v in vec:
        if v < 0:
            raise InvalidDistributionError(f"{what} has negative entry {v}")
    return vec


@dataclass(frozen=True)
class FullDistribution:
    """Joint distribution P(a,b,x,y); entries sum to one exactly."""

    scenario: Scenario
    p: Vector

    def __post_init__(self):
        vec = _validated_vector(self.p, self.scenario.full_size, "full distribution")
        if sum(vec) != ONE:
            raise InvalidDistributionError(f"full distribution sums to {sum(vec)}, not 1")
        object.__setattr__(self, "p", vec)

    def prob(self, a: int, b: int, x: int, y: int) -> Fraction:
        return self.p[self.scenario.full_index(a, b, x, y)]


@dataclass(frozen=True)
class ConditionalDistribution:
    """Conditional distribution P(a,b|x,y); each input block sums to one."""

    scenario: Scenario
    p: Vector

    def __post_init__(self):
        vec = _validated_vector(self.p, self.scenario.full_size, "conditional distribution")
        sc = self.scenario
        for x, y in sc.input_tuples():
            block = sum(
                vec[sc.full_index(a, b, x, y)]
                for a in range(sc.n_a)
                for b in range(sc.n_b)
            )
            if block != ONE:
                raise InvalidDistributionError(
                    f"conditional block (x={x}, y={y}) sums to {block}, not 1"
                )
        object.__setattr__(self, "p", vec)

    def prob(self, a: int, b: int, x: int, y: int) -> Fraction:
        return self.p[self.scenario.full_index(a, b, x, y)]


@dataclass(frozen=True)
class InputDistribution:
    """Distribution P(x,y) over input pairs."""

    scenario: Scenario
    q: Vector

    def __post_init__(self):
        vec = _validated_vector(self.q, self.scenario.input_size, "input distribution")
        if sum(vec) != ONE:
            raise InvalidDistributionError(f"input distribution sums to {sum(vec)}, not 1")
        object.__setattr__(self, "q", vec)

    def prob(self, x: int, y: int) -> Fraction:
        return self.q[self.scenario.input_index(x, y)]


def uniform_inputs(scenario: Scenario) -> InputDistribution:
    w = Fraction(1, scenario.input_size)
    return InputDistribution(scenario, (w,) * scenario.input_size)


def _check_same_scenario(left, right) -> None:
    if left.scenario != right.scenario:
        raise ScenarioMismatchError(f"{left.scenario} != {right.scenario}")


def compose(inputs: InputDistribution, conditional: ConditionalDistribution) -> FullDistribution:
    """P(a,b,x,y) = P(x,y) * P(a,b|x,y)."""
    _check_same_scenario(inputs, conditional)
    sc = inputs.scenario
    p = tuple(
        inputs.q[sc.input_index(x, y)] * conditional.p[sc.full_index(a, b, x, y)]
        for a, b, x, y in sc.outcome_tuples()
    )
    return FullDistribution(sc, p)


def marginalize_inputs(full: FullDistribution) -> InputDistribution:
    """P(x,y) = sum_ab P(a,b,x,y)."""
    sc = full.scenario
    q = []
    for x, y in sc.input_tuples():
        q.append(
            sum(
                (full.p[sc.full_index(a, b, x, y)] for a in range(sc.n_a) for b in range(sc.n_b)),
                ZERO,
            )
        )
    return InputDistribution(sc, tuple(q))


def condition_on_inputs(full: FullDistribution) -> ConditionalDistribution:
    """P(a,b|x,y) = P(a,b,x,y) / P(x,y); every input pair must have mass."""
    sc = full.scenario
    q = marginalize_inputs(full)
    for x, y in sc.input_tuples():
        if q.q[sc.input_index(x, y)] == 0:
            raise ZeroInputProbabilityError(x, y)
    p = tuple(
        full.p[sc.full_index(a, b, x, y)] / q.q[sc.input_index(x, y)]
        for a, b, x, y in sc.outcome_tuples()
    )
    return ConditionalDistribution(sc, p)


_KINDS = {
    "full": (FullDistribution, "p"),
    "conditional": (ConditionalDistribution, "p"),
    "input": (InputDistribution, "q"),
}


def distribution_to_json(dist) -> str:
    """Serialize any of the three distribution types with a scenario header."""
    for kind, (cls, attr) in _KINDS.items():
        if isinstance(dist, cls):
            sc = dist.scenario
            payload = {
                "scenario": {"n_x": sc.n_x, "n_y": sc.n_y, "n_a": sc.n_a, "n_b": sc.n_b},
                "kind": kind,
                "values": [rational_str(v) for v in getattr(dist, attr)],
            }
            return json.dumps(payload, indent=2)
    raise TypeError(f"not a distribution: {type(dist)!r}")


def distribution_from_json(text: str):
    payload = json.loads(text)
    sc = Scenario(**payload["scenario"])
    kind = payload["kind"]
    if kind not in _KINDS:
        raise InvalidDistributionError(f"unknown distribution kind {kind!r}")
    cls, _ = _KINDS[kind]
    values = tuple(parse_rational(v) for v in payload["values"])
    return cls(sc, values)
