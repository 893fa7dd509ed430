"""Relabeling symmetries of bipartite Bell scenarios.

A relabeling optionally swaps the two parties (only meaningful when the
scenario is symmetric), permutes each party's inputs, and permutes each
party's outputs separately per input.  For the 2222 scenario this group has
order 2 * (2 * 2^2)^2 = 128 and acts faithfully by permuting the 16 cells
(a, b, x, y); distributions and inequality coefficient vectors transform by
the same cell permutation.

Orbits and family classification are computed with a pluggable transform,
so callers can classify inequalities that live in derived coordinate systems
(e.g. the table chart) by lifting, permuting and reducing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .polytope import LinearInequality
from .scenario import FullDistribution, Scenario


@dataclass(frozen=True)
class Relabeling:
    """party_swap applies first; output permutations are indexed by the
    input label seen before the input permutation renames it."""

    party_swap: bool
    input_perm_a: tuple[int, ...]
    input_perm_b: tuple[int, ...]
    output_perm_a: tuple[tuple[int, ...], ...]
    output_perm_b: tuple[tuple[int, ...], ...]

    def cell_permutation(self, scenario: Scenario) -> tuple[int, ...]:
        """perm[flat index of (a,b,x,y)] = flat index of the image cell."""
        if self.party_swap and (
            scenario.n_a != scenario.n_b or scenario.n_x != scenario.n_y
        ):
            raise ValueError("party swap requires a symmetric scenario")
        perm = [0] * scenario.full_size
        for a, b, x, y in scenario.outcome_tuples():
            src = scenario.full_index(a, b, x, y)
            aa, bb, xx, yy = (b, a, y, x) if self.party_swap else (a, b, x, y)
            perm[src] = scenario.full_index(
                self.output_perm_a[xx][aa],
                self.output_perm_b[yy][bb],
                self.input_perm_a[xx],
                self.input_perm_b[yy],
            )
        return tuple(perm)


@lru_cache(maxsize=None)
def relabeling_group(scenario: Scenario) -> tuple[Relabeling, ...]:
    """All relabelings; faithfulness is asserted via distinct cell permutations."""
    swaps = (False, True) if scenario.n_a == scenario.n_b and scenario.n_x == scenario.n_y else (False,)
    in_a = tuple(permutations(range(scenario.n_x)))
    in_b = tuple(permutations(range(scenario.n_y)))
    out_a = tuple(product(tuple(permutations(range(scenario.n_a))), repeat=scenario.n_x))
    out_b = tuple(product(tuple(permutations(range(scenario.n_b))), repeat=scenario.n_y))
    elements = tuple(
        Relabeling(swap, ia, ib, oa, ob)
        for swap in swaps
        for ia in in_a
        for ib in in_b
        for oa in out_a
        for ob in out_b
    )
    perms = {e.cell_permutation(scenario) for e in elements}
    if len(perms) != len(elements):
        raise RuntimeError("relabeling group does not act faithfully")
    return elements


@lru_cache(maxsize=None)
def _perm_lookup(scenario: Scenario) -> dict[tuple[int, ...], Relabeling]:
    return {e.cell_permutation(scenario): e for e in relabeling_group(scenario)}


def compose(first: Relabeling, second: Relabeling, scenario: Scenario) -> Relabeling:
    """The relabeling acting as `first` followed by `second`."""
    p1 = first.cell_permutation(scenario)
    p2 = second.cell_permutation(scenario)
    combined = tuple(p2[p1[i]] for i in range(len(p1)))
    return _perm_lookup(scenario)[combined]


def inverse(element: Relabeling, scenario: Scenario) -> Relabeling:
    p = element.cell_permutation(scenario)
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return _perm_lookup(scenario)[tuple(inv)]


def apply_to_distribution(element: Relabeling, dist: FullDistribution) -> FullDistribution:
    perm = element.cell_permutation(dist.scenario)
    out = [None] * len(dist.p)
    for i, j in enumerate(perm):
        out[j] = dist.p[i]
    return FullDistribution(dist.scenario, tuple(out))


def apply_to_coefficients(element: Relabeling, coefficients, scenario: Scenario):
    """Coefficient vectors transform like points: c'[perm[i]] = c[i]."""
    perm = element.cell_permutation(scenario)
    out = [None] * len(perm)
    for i, j in enumerate(perm):
        out[j] = coefficients[i]
    return tuple(out)


def apply_to_inequality(
    element: Relabeling, ineq: LinearInequality, scenario: Scenario
) -> LinearInequality:
    return LinearInequality.make(
        apply_to_coefficients(element, ineq.coefficients, scenario), ineq.bound
    )


def orbit(ineq: LinearInequality, scenario: Scenario) -> tuple[LinearInequality, ...]:
    """Distinct images of an inequality under the full relabeling group."""
    images = {apply_to_inequality(e, ineq, scenario) for e in relabeling_group(scenario)}
    return tuple(sorted(images, key=lambda i: (i.coefficients, i.bound)))


@dataclass(frozen=True)
class Family:
    """An orbit of inequalities; the representative is the lexicographic
    minimum of the member keys, so classification output is stable."""

    representative: tuple
    members: tuple


def classify_families(items, scenario: Scenario, transform=None, key=None) -> tuple[Family, ...]:
    """Partition `items` into relabeling orbits.

    transform(element, item) -> item defaults to the full-coordinate
    inequality action; key(item) -> hashable defaults to the inequality's
    canonical (coefficients, bound) pair.  Items whose orbits coincide land
    in one family even if no single item generated them all.
    """
    if transform is None:
        transform = lambda e, i: apply_to_inequality(e, i, scenario)
    if key is None:
        key = lambda i: (i.coefficients, i.bound)
    group = relabeling_group(scenario)
    item_by_key = {key(item): item for item in items}
    remaining = dict(item_by_key)
    out = []
    while remaining:
        _, item = min(remaining.items())
        orbit_keys = {key(transform(e, item)) for e in group}
        members = tuple(sorted(k for k in orbit_keys if k in item_by_key))
        representative = min(orbit_keys)
        out.append(Family(representative, members))
        for k in members:
            remaining.pop(k, None)
    return tuple(sorted(out, key=lambda f: f.representative))
