"""Facet enumeration of the restricted bounded-source polytope.

The object of interest is the polytope of full distributions reachable by a
bounded input source, cut down to the nonsignaling, uniform-input slice and
written in the 8 table coordinates.  Enumerating facets in the full 16
dimensions first and substituting afterwards is exact but far too slow, so
this module works directly on the section with an oracle-guided incremental
hull: support LPs over vertex mixtures supply section points and certify
candidate facets, the double description method turns point sets into
candidate facets, and the loop stops when every facet is certified.  The
result is exact in both directions (hull of collected points is contained in
the section; certified facets contain it).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .constraints import (
    canonical_table_row,
    slice_equalities,
    table_coordinate_functionals,
    table_subspace,
    vector_to_table_point,
)
from .dd import matrix_rank
from .inequalities import TABLE_FAMILY_COUNT, family_lp_maximum, table1_family
from .mdl import SourceBounds, local_vertices, mdl_vertices
from .polytope import (
    HRepresentation,
    LinearEquality,
    LinearInequality,
    VRepresentation,
    vertices_to_facets,
)
from .polytope import optimize_over_vertices
from .rationals import Vector, dot, frac
from .scenario import CHSH_SCENARIO, Scenario, compose, uniform_inputs
from .symmetry import Family, classify_families, relabeling_group

_ZERO = Fraction(0)

# Canonical table rows of the two reference facet classes: positivity
# (written on the P(11|11) >= 0 member) and the CHSH facet of the
# uniform-input local polytope (CHSH <= 2).
POSITIVITY_TABLE_ROW = (-1, 0, 1, 0, 0, 0, 1, 0, -1)
CHSH_TABLE_ROW = (0, -1, 0, -1, 1, 1, 0, 1, -1)


@dataclass(frozen=True)
class RestrictedPolytope:
    """The section in table coordinates: exact vertices, facets, families.

    Facets live on the 8 table coordinates (g . t <= b in canonical integer
    scale); `facet_rows` are the same facets as canonical 9-vectors
    (const, gamma) with const + gamma . t <= 0, the form the catalog uses.
    """

    bounds: SourceBounds
    vertices: tuple[Vector, ...]
    facets: tuple[LinearInequality, ...]
    equalities: tuple[LinearEquality, ...]
    families: tuple[Family, ...]


def facet_to_table_row(ineq: LinearInequality) -> tuple[int, ...]:
    """(const, gamma) form of a table-coordinate facet g . t <= b."""
    return canonical_table_row((-frac(ineq.bound),) + tuple(frac(c) for c in ineq.coefficients))


def table_row_to_facet(row) -> LinearInequality:
    """Inverse of facet_to_table_row."""
    row = tuple(frac(v) for v in row)
    return LinearInequality.make(row[1:], -row[0])


@lru_cache(maxsize=None)
def _row_action(scenario: Scenario):
    """Matrix form of the relabeling action on table rows, one per element.

    Each entry is the tuple of images of the 9 basis rows: a row transforms
    as row' = sum_k row[k] * columns[k].  The lift of the constant basis row
    is the all-ones functional and the lift of each chart coefficient is the
    corresponding coordinate functional; a cell permutation then reduces back
    to the table basis by pairing with the chart origin and directions.
    Relabelings preserve the slice, so the reduction is exact and the action
    is honestly linear (no per-image rescaling happens here).
    """
    sub = table_subspace(scenario)
    one = Fraction(1)
    lifts = [(one,) * scenario.full_size]
    lifts += [g for g in table_coordinate_functionals(scenario)]
    matrices = []
    for element in relabeling_group(scenario):
        perm = element.cell_permutation(scenario)
        columns = []
        for coeffs in lifts:
            moved = [_ZERO] * len(perm)
            for i, j in enumerate(perm):
                moved[j] = coeffs[i]
            const = dot(tuple(moved), sub.origin)
            gamma = tuple(dot(tuple(moved), d) for d in sub.directions)
            columns.append((const,) + gamma)
        matrices.append(tuple(columns))
    return tuple(matrices)


@lru_cache(maxsize=None)
def _point_action(scenario: Scenario):
    """Affine maps (columns, offset) of the relabeling action on table points."""
    from .constraints import table_point_to_vector

    sub = table_subspace(scenario)
    functionals = table_coordinate_functionals(scenario)
    maps = []
    for element in relabeling_group(scenario):
        perm = element.cell_permutation(scenario)

        def image(full):
            moved = [_ZERO] * len(perm)
            for i, j in enumerate(perm):
                moved[j] = full[i]
            return tuple(dot(g, tuple(moved)) for g in functionals)

        offset = image(sub.origin)
        columns = tuple(
            tuple(a - b for a, b in zip(image(tuple(o + d for o, d in zip(sub.origin, dv))), offset))
            for dv in sub.directions
        )
        maps.append((columns, offset))
    return tuple(maps)


def _row_image(columns, row) -> tuple[Fraction, ...]:
    out = [_ZERO] * len(columns)
    for weight, column in zip(row, columns):
        if weight:
            w = frac(weight)
            out = [o + w * c for o, c in zip(out, column)]
    return tuple(out)


def _row_orbit(row, scenario: Scenario) -> set[tuple[int, ...]]:
    r = tuple(frac(v) for v in row)
    return {canonical_table_row(_row_image(m, r)) for m in _row_action(scenario)}


def table_row_orbit_representative(row, scenario: Scenario = CHSH_SCENARIO) -> tuple[int, ...]:
    """Smallest canonical table row in the relabeling orbit of `row`."""
    return min(_row_orbit(row, scenario))


def classify_table_rows(rows, scenario: Scenario = CHSH_SCENARIO) -> tuple[Family, ...]:
    """Partition canonical table rows into relabeling families."""
    matrices = dict(zip(relabeling_group(scenario), _row_action(scenario)))

    def transform(element, row):
        return canonical_table_row(_row_image(matrices[element], row))

    return classify_families(rows, scenario, transform=transform, key=lambda r: tuple(r))


def _table_point_orbit(t: Vector, scenario: Scenario) -> set[Vector]:
    """All relabeling images of a table point (slice maps onto itself)."""
    point = tuple(frac(v) for v in t)
    images = set()
    for columns, offset in _point_action(scenario):
        img = list(offset)
        for weight, column in zip(point, columns):
            if weight:
                img = [o + weight * c for o, c in zip(img, column)]
        images.add(tuple(img))
    return images


def restricted_mdl_polytope(bounds: SourceBounds, max_rounds: int = 64) -> RestrictedPolytope:
    """Exact facet description of the section, by oracle-guided hull growth.

    Every support LP answer is itself a section point, so the collected set
    only ever underestimates the section; a hull facet whose support value
    matches its bound is certified.  Both the section and its facet set are
    invariant under relabelings, so facets are grouped into relabeling
    families first and one LP settles a whole family: a certificate for one
    member covers every image, a violation contributes the witness's full
    point orbit.  The loop ends when all facets (and hull equalities, should
    the collected points be degenerate) are certified.
    """
    scenario = bounds.scenario
    verts = mdl_vertices(bounds)
    eq_rows = slice_equalities(scenario).as_rows()
    functionals = table_coordinate_functionals(scenario)

    def lift(c8) -> Vector:
        obj = [_ZERO] * scenario.full_size
        for gamma, g in zip(c8, functionals):
            if gamma:
                obj = [o + frac(gamma) * gc for o, gc in zip(obj, g)]
        return tuple(obj)

    def support(c8):
        opt = optimize_over_vertices(verts, lift(c8), extra_equalities=eq_rows, sense="max")
        return opt.value, vector_to_table_point(opt.point, scenario)

    points: set[Vector] = set()
    # Deterministic strategies under uniform inputs always lie on the section
    # (valid bounds keep the uniform input box inside the input polytope).
    q = uniform_inputs(scenario)
    for _, cond in local_vertices(scenario):
        points.add(vector_to_table_point(compose(q, cond).p, scenario))
    for i in range(8):
        for sign in (1, -1):
            direction = [0] * 8
            direction[i] = sign
            _, t = support(direction)
            points.update(_table_point_orbit(t, scenario))
    # Catalog rows are good probe directions whenever they make sense.
    if Fraction(1, 4) < frac(bounds.upper) < Fraction(1, 3):
        for index in range(1, TABLE_FAMILY_COUNT + 1):
            row = catalog_table_row(index, bounds.upper)
            _, t = support(row[1:])
            points.update(_table_point_orbit(t, scenario))

    family_of: dict[tuple, tuple[int, ...]] = {}
    certified: set[tuple[int, ...]] = set()
    for _ in range(max_rounds):
        hull = vertices_to_facets(VRepresentation(8, tuple(points)))
        pending: dict[tuple[int, ...], LinearInequality] = {}
        for ineq in hull.inequalities:
            key = (ineq.coefficients, ineq.bound)
            rep = family_of.get(key)
            if rep is None:
                images = _row_orbit(facet_to_table_row(ineq), scenario)
                rep = min(images)
                for image in images:
                    member = table_row_to_facet(image)
                    family_of[(member.coefficients, member.bound)] = rep
            if rep not in certified and rep not in pending:
                pending[rep] = ineq
        fresh: set[Vector] = set()
        for rep, ineq in pending.items():
            value, t = support(ineq.coefficients)
            if value > ineq.bound:
                fresh.update(_table_point_orbit(t, scenario))
            else:
                certified.add(rep)
        for eq in hull.equalities:
            # Degenerate point set: probe both sides of the hull's affine hull.
            for sign in (1, -1):
                direction = tuple(sign * c for c in eq.coefficients)
                value, t = support(direction)
                if value > sign * eq.bound:
                    fresh.update(_table_point_orbit(t, scenario))
        if not fresh:
            vertex_list = tuple(
                sorted(p for p in points if _is_section_vertex(p, hull))
            )
            rows = tuple(facet_to_table_row(f) for f in hull.inequalities)
            families = classify_table_rows(rows, scenario)
            return RestrictedPolytope(
                bounds, vertex_list, hull.inequalities, hull.equalities, families
            )
        points.update(fresh)
    raise RuntimeError("incremental hull did not converge; raise max_rounds")


def _is_section_vertex(point: Vector, hull: HRepresentation) -> bool:
    normals = [eq.coefficients for eq in hull.equalities]
    normals += [
        f.coefficients for f in hull.inequalities if f.evaluate(point) == f.bound
    ]
    return matrix_rank(normals) == hull.dimension


def catalog_table_row(index: int, h) -> tuple[int, ...]:
    """Canonical table row of catalog family `index` at upper bound h."""
    return canonical_table_row(table1_family(index, h).coefficients)


def family_for_row(families, row, scenario: Scenario = CHSH_SCENARIO):
    """The Family whose orbit contains `row`, or None."""
    rep = table_row_orbit_representative(row, scenario)
    for fam in families:
        if fam.representative == rep:
            return fam
    return None


def match_catalog(polytope: RestrictedPolytope) -> dict:
    """Map each enumerated family to its catalog identity at these bounds.

    Returns {family_representative: label} with labels "family 1".."family 7"
    and "positivity"; unmatched families map to None.  A complete match for
    h strictly between 1/4 and 1/3 has all 8 labels present.
    """
    h = polytope.bounds.upper
    targets = {table_row_orbit_representative(POSITIVITY_TABLE_ROW): "positivity"}
    for index in range(1, TABLE_FAMILY_COUNT + 1):
        targets[table_row_orbit_representative(catalog_table_row(index, h))] = f"family {index}"
    return {fam.representative: targets.get(fam.representative) for fam in polytope.families}


def nonsignaling_vertices(scenario: Scenario = CHSH_SCENARIO) -> tuple[Vector, ...]:
    """Full-coordinate vertices of the nonsignaling uniform-input polytope.

    The 16 deterministic points plus the 8 maximally nonlocal boxes (the
    relabeling orbit of the box with a XOR b = xy).
    """
    from .scenario import ConditionalDistribution
    from .symmetry import apply_to_distribution

    q = uniform_inputs(scenario)
    points = {compose(q, cond).p for _, cond in local_vertices(scenario)}
    half = Fraction(1, 2)
    pr = ConditionalDistribution(
        scenario,
        tuple(
            half if (a ^ b) == (x & y) else _ZERO
            for a in range(scenario.n_a)
            for b in range(scenario.n_b)
            for x in range(scenario.n_x)
            for y in range(scenario.n_y)
        ),
    )
    pr_full = compose(q, pr)
    for element in relabeling_group(scenario):
        points.add(apply_to_distribution(element, pr_full).p)
    return tuple(sorted(points))


def random_h_values(count: int, seed: int, max_denominator: int = 400) -> tuple[Fraction, ...]:
    """Deterministic rational samples strictly inside ]1/4, 1/3[."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        den = rng.randrange(13, max_denominator)
        numerators = [n for n in range(den // 4 + 1, den // 3 + 1) if 4 * n > den and 3 * n < den]
        if not numerators:
            continue
        out.append(Fraction(rng.choice(numerators), den))
    return tuple(out)


def scan_table_validity(h_values, lower=0) -> dict:
    """LP maximum of every catalog family at each h.

    A family is valid at h when its maximum over the section is <= 0 and
    saturated when the maximum is exactly 0; the conjectured facet status
    means both hold for all h strictly between 1/4 and 1/3.
    """
    report = {}
    for h in h_values:
        hq = frac(h)
        report[hq] = {
            index: family_lp_maximum(frac(lower), hq, index).value
            for index in range(1, TABLE_FAMILY_COUNT + 1)
        }
    return report
