"""Exact polytope representations and conversions.

V-representations are finite vertex lists, H-representations are systems of
inequalities c . x <= b plus equalities c . x == b.  Both are canonicalized
on construction: coefficient rows are scaled to coprime integers (by a
positive factor for inequalities, so the direction never flips; equalities
additionally get their first nonzero coefficient made positive), duplicates
are dropped, and rows/vertices are sorted, so equal polyhedra built along
different routes compare equal representation-wise.

Conversions run through the double description method on the homogenization
cone; LP queries run on the exact simplex.  Facets returned by
`vertices_to_facets` are genuine facets (each supported by an affinely
independent vertex set of full facet dimension), not just irredundant rows.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .dd import cone_generators, kernel_basis, matrix_inverse
from .rationals import Vector, dot, frac, integerize, parse_rational, rational_str, vec_add, vec_scale, vec_sub
from .simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, LPResult, solve_lp

_ZERO = Fraction(0)
_ONE = Fraction(1)


class UnboundedPolytopeError(ValueError):
    """H-representation describes an unbounded set where a polytope is required."""


class InconsistentEqualitiesError(ValueError):
    """Equality system is unsolvable or misses the polytope entirely."""


@dataclass(frozen=True)
class LinearInequality:
    """c . x <= b with coprime integer coefficients (direction preserved)."""

    coefficients: tuple[int, ...]
    bound: int

    @classmethod
    def make(cls, coefficients, bound) -> "LinearInequality":
        row = integerize(tuple(frac(v) for v in coefficients) + (frac(bound),))
        return cls(row[:-1], row[-1])

    def evaluate(self, point: Vector) -> Fraction:
        return dot(self.coefficients, point)

    def satisfied_by(self, point: Vector) -> bool:
        return self.evaluate(point) <= self.bound

    def slack(self, point: Vector) -> Fraction:
        return frac(self.bound) - self.evaluate(point)


@dataclass(frozen=True)
class LinearEquality:
    """c . x == b; canonical sign makes the first nonzero coefficient positive."""

    coefficients: tuple[int, ...]
    bound: int

    @classmethod
    def make(cls, coefficients, bound) -> "LinearEquality":
        row = integerize(tuple(frac(v) for v in coefficients) + (frac(bound),))
        lead = next((v for v in row if v != 0), 0)
        if lead < 0:
            row = tuple(-v for v in row)
        return cls(row[:-1], row[-1])

    def evaluate(self, point: Vector) -> Fraction:
        return dot(self.coefficients, point)

    def satisfied_by(self, point: Vector) -> bool:
        return self.evaluate(point) == self.bound


@dataclass(frozen=True)
class VRepresentation:
    dimension: int
    vertices: tuple[Vector, ...]

    def __post_init__(self):
        verts = sorted({tuple(frac(v) for v in vert) for vert in self.vertices})
        for vert in verts:
            if len(vert) != self.dimension:
                raise ValueError(f"vertex has length {len(vert)}, expected {self.dimension}")
        object.__setattr__(self, "vertices", tuple(verts))


@dataclass(frozen=True)
class HRepresentation:
    dimension: int
    inequalities: tuple[LinearInequality, ...]
    equalities: tuple[LinearEquality, ...] = ()

    def __post_init__(self):
        ineqs = sorted(
            {i if isinstance(i, LinearInequality) else LinearInequality.make(*i) for i in self.inequalities},
            key=lambda i: (i.coefficients, i.bound),
        )
        eqs = sorted(
            {e if isinstance(e, LinearEquality) else LinearEquality.make(*e) for e in self.equalities},
            key=lambda e: (e.coefficients, e.bound),
        )
        for row in (*ineqs, *eqs):
            if len(row.coefficients) != self.dimension:
                raise ValueError("constraint length does not match dimension")
        object.__setattr__(self, "inequalities", tuple(ineqs))
        object.__setattr__(self, "equalities", tuple(eqs))

    def contains(self, point: Vector) -> bool:
        return all(i.satisfied_by(point) for i in self.inequalities) and all(
            e.satisfied_by(point) for e in self.equalities
        )


@dataclass(frozen=True)
class AffineSubspace:
    """Affine chart x = origin + sum_i t_i direction_i of an equality system."""

    origin: Vector
    directions: tuple[Vector, ...]

    @property
    def ambient_dimension(self) -> int:
        return len(self.origin)

    @property
    def dimension(self) -> int:
        return len(self.directions)

    def embed(self, t) -> Vector:
        point = self.origin
        for value, direction in zip(tuple(t), self.directions):
            point = vec_add(point, vec_scale(direction, value))
        return point

    def dual_functionals(self) -> tuple[Vector, ...]:
        """Rows G_i with dot(G_i, direction_j) == (1 if i == j else 0).

        For any x on the chart, t_i = dot(G_i, x - origin) recovers the chart
        coordinates, and conversely any reduced functional g pulls back to the
        ambient functional sum_i g_i G_i.  The directions themselves do not
        work for this unless they happen to be orthonormal.
        """
        cached = getattr(self, "_duals", None)
        if cached is None:
            dirs = self.directions
            k = len(dirs)
            if k == 0:
                cached = ()
            else:
                gram = [[dot(di, dj) for dj in dirs] for di in dirs]
                inv = matrix_inverse(gram)
                n = self.ambient_dimension
                cached = tuple(
                    tuple(sum((inv[i][j] * dirs[j][c] for j in range(k)), _ZERO) for c in range(n))
                    for i in range(k)
                )
            object.__setattr__(self, "_duals", cached)
        return cached

    def reduce_point(self, point: Vector) -> Vector:
        """Coordinates t with embed(t) == point; raises if point is off-chart."""
        p = tuple(frac(v) for v in point)
        delta = vec_sub(p, self.origin)
        t = tuple(dot(g, delta) for g in self.dual_functionals())
        if self.embed(t) != p:
            raise ValueError("point does not lie on the subspace")
        return t


def _solve_exact(rows: list[list[Fraction]], nvars: int) -> Vector | None:
    """One solution of an overdetermined consistent linear system, else None."""
    work = [list(map(frac, r)) for r in rows]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(nvars):
        pr = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = 1 / work[r][col]
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [v - f * w for v, w in zip(work[i], work[r])]
        pivots.append((r, col))
        r += 1
    for i in range(r, len(work)):
        if work[i][-1] != 0:
            return None
    solution = [_ZERO] * nvars
    for row, col in pivots:
        solution[col] = work[row][-1]
    return tuple(solution)


def solve_equalities(equalities, dimension: int) -> AffineSubspace:
    """Affine chart of {x : equalities}, raising if the system is unsolvable."""
    eqs = [e if isinstance(e, LinearEquality) else LinearEquality.make(*e) for e in equalities]
    rows = [[frac(c) for c in e.coefficients] + [frac(e.bound)] for e in eqs]
    origin = _solve_exact(rows, dimension) if rows else (_ZERO,) * dimension
    if origin is None:
        raise InconsistentEqualitiesError("equality system has no solution")
    matrix = [[frac(c) for c in e.coefficients] for e in eqs]
    directions = tuple(
        tuple(frac(v) for v in vec) for vec in kernel_basis(matrix, dimension)
    ) if matrix else tuple(
        tuple(_ONE if i == j else _ZERO for j in range(dimension)) for i in range(dimension)
    )
    return AffineSubspace(origin, directions)


def affine_hull(vertices: tuple[Vector, ...], dimension: int) -> tuple[LinearEquality, ...]:
    """Equalities cutting out the affine hull of a point set."""
    if not vertices:
        return ()
    base = vertices[0]
    diffs = [list(vec_sub(v, base)) for v in vertices[1:]]
    normals = kernel_basis(diffs, dimension)  # kernel of no rows is the identity
    return tuple(
        LinearEquality.make(n, dot(tuple(frac(v) for v in n), base)) for n in normals
    )


def affine_rank(points: list[Vector]) -> int:
    """Number of affinely independent points (affine dimension + 1)."""
    if not points:
        return 0
    base = points[0]
    diffs = [list(vec_sub(p, base)) for p in points[1:]]
    if not diffs:
        return 1
    from .dd import _row_reduce

    rref, _ = _row_reduce([[frac(v) for v in d] for d in diffs])
    return len(rref) + 1


def vertices_to_facets(vrep: VRepresentation) -> HRepresentation:
    """Facet enumeration.  Degenerate inputs yield equality-heavy output."""
    verts = vrep.vertices
    dim = vrep.dimension
    if not verts:
        raise ValueError("cannot enumerate facets of an empty vertex set")
    equalities = affine_hull(verts, dim)
    if len(verts) == 1:
        return HRepresentation(dim, (), equalities)

    # Chart the affine hull so the reduced polytope is full-dimensional.
    chart = solve_equalities(equalities, dim)
    reduced = [chart.reduce_point(v) for v in verts]

    # Valid inequalities g . s <= b correspond to rays (b, -g) of the cone
    # dual to the homogenized vertices (1, s).
    rows = [integerize((_ONE,) + s) for s in reduced]
    gens = cone_generators(rows)
    if gens.lineality:
        raise RuntimeError("dual cone unexpectedly has lineality")
    duals = chart.dual_functionals()
    inequalities = []
    for ray in gens.rays:
        b, negg = ray[0], ray[1:]
        # g . t <= b on the chart pulls back through the dual functionals:
        # the ambient functional sum_i g_i G_i agrees with g . t up to the
        # constant it takes at the origin.
        coeffs = [_ZERO] * dim
        for wi, g in zip(negg, duals):
            if wi:
                for j, gj in enumerate(g):
                    coeffs[j] -= wi * gj
        bound = frac(b) + dot(tuple(coeffs), chart.origin)
        inequalities.append(LinearInequality.make(coeffs, bound))
    return HRepresentation(dim, tuple(inequalities), equalities)


def facets_to_vertices(hrep: HRepresentation) -> VRepresentation:
    """Vertex enumeration; raises UnboundedPolytopeError on recession rays."""
    dim = hrep.dimension
    rows = []
    for ineq in hrep.inequalities:
        rows.append((ineq.bound,) + tuple(-c for c in ineq.coefficients))
    for eq in hrep.equalities:
        rows.append((eq.bound,) + tuple(-c for c in eq.coefficients))
        rows.append((-eq.bound,) + tuple(c for c in eq.coefficients))
    rows.append((1,) + (0,) * dim)  # homogenization: x0 >= 0
    gens = cone_generators(rows)
    if gens.lineality:
        raise UnboundedPolytopeError("feasible set contains a line")
    vertices = []
    for ray in gens.rays:
        x0 = ray[0]
        if x0 == 0:
            if any(ray[1:]):
                raise UnboundedPolytopeError("feasible set has a recession ray")
            continue
        vertices.append(tuple(Fraction(v, x0) for v in ray[1:]))
    return VRepresentation(dim, tuple(vertices))


def lp_optimize(hrep: HRepresentation, objective, sense: str = "max") -> LPResult:
    """Exact LP over an H-representation with free variables."""
    return solve_lp(
        tuple(frac(v) for v in objective),
        a_ub=[i.coefficients for i in hrep.inequalities],
        b_ub=[i.bound for i in hrep.inequalities],
        a_eq=[e.coefficients for e in hrep.equalities],
        b_eq=[e.bound for e in hrep.equalities],
        sense=sense,
    )


@dataclass(frozen=True)
class MembershipResult:
    inside: bool
    weights: Vector | None
    separating: LinearInequality | None


def membership(vrep: VRepresentation, point) -> MembershipResult:
    """Exact convex-combination test with LP certificates both ways."""
    pt = tuple(frac(v) for v in point)
    if len(pt) != vrep.dimension:
        raise ValueError("point dimension mismatch")
    nverts = len(vrep.vertices)
    a_eq = [[_ONE] * nverts]
    b_eq = [_ONE]
    for d in range(vrep.dimension):
        a_eq.append([v[d] for v in vrep.vertices])
        b_eq.append(pt[d])
    result = solve_lp((_ZERO,) * nverts, a_eq=a_eq, b_eq=b_eq, nonneg=True)
    if result.status == OPTIMAL:
        return MembershipResult(True, result.x, None)
    w = result.certificate
    w0, wv = w[0], w[1:]
    # w0 + wv . v >= 0 on all vertices and w0 + wv . pt < 0, so
    # (-wv) . x <= w0 separates the point from the hull.
    return MembershipResult(
        False, None, LinearInequality.make(tuple(-v for v in wv), w0)
    )


@dataclass(frozen=True)
class PolytopeOptimum:
    value: Fraction
    point: Vector
    weights: Vector


def optimize_over_vertices(
    vrep: VRepresentation, objective, extra_equalities=(), sense: str = "max"
) -> PolytopeOptimum:
    """LP over the convex hull of a vertex list, via mixture weights.

    extra_equalities are (coefficients, rhs) pairs over ambient coordinates,
    restricting the hull (e.g. to a nonsignaling slice).  Infeasible
    restrictions raise InconsistentEqualitiesError.
    """
    obj = tuple(frac(v) for v in objective)
    nverts = len(vrep.vertices)
    costs = [dot(obj, v) for v in vrep.vertices]
    a_eq: list[list[Fraction]] = [[_ONE] * nverts]
    b_eq: list[Fraction] = [_ONE]
    for coeffs, rhs in extra_equalities:
        coeffs = tuple(frac(v) for v in coeffs)
        a_eq.append([dot(coeffs, v) for v in vrep.vertices])
        b_eq.append(frac(rhs))
    result = solve_lp(costs, a_eq=a_eq, b_eq=b_eq, nonneg=True, sense=sense)
    if result.status == INFEASIBLE:
        raise InconsistentEqualitiesError("constraints miss the polytope")
    assert result.status == OPTIMAL  # hull is bounded
    point = tuple(
        sum((w * v[d] for w, v in zip(result.x, vrep.vertices)), _ZERO)
        for d in range(vrep.dimension)
    )
    return PolytopeOptimum(result.value, point, result.x)


def remove_redundant(hrep: HRepresentation, certify_limit: int = 80) -> HRepresentation:
    """Minimal H-representation.

    Small systems: sequential LP filter; each surviving row is certified
    irredundant by an LP that violates it when dropped.  Large systems: exact
    vertex enumeration, keeping rows whose tight vertex set has full facet
    rank (an equivalent exactness certificate that avoids quadratic LP cost).
    """
    ineqs = list(hrep.inequalities)
    if len(ineqs) <= certify_limit:
        active = list(ineqs)
        idx = 0
        while idx < len(active):
            candidate = active[idx]
            rest = active[:idx] + active[idx + 1 :]
            trial = solve_lp(
                candidate.coefficients,
                a_ub=[i.coefficients for i in rest],
                b_ub=[i.bound for i in rest],
                a_eq=[e.coefficients for e in hrep.equalities],
                b_eq=[e.bound for e in hrep.equalities],
            )
            if trial.status == OPTIMAL and trial.value <= candidate.bound:
                active.pop(idx)  # redundant: cannot be violated without it
            else:
                idx += 1
        return HRepresentation(hrep.dimension, tuple(active), hrep.equalities)

    verts = facets_to_vertices(hrep)
    hull_eqs = affine_hull(verts.vertices, hrep.dimension)
    k = hrep.dimension - len(hull_eqs)
    survivors = []
    for ineq in ineqs:
        tight = [v for v in verts.vertices if ineq.evaluate(v) == ineq.bound]
        if tight and affine_rank(tight) == k and len(tight) != len(verts.vertices):
            survivors.append(ineq)
    return HRepresentation(hrep.dimension, tuple(survivors), hull_eqs)


def restrict_to_subspace(
    hrep: HRepresentation, equalities=(), subspace: AffineSubspace | None = None
) -> HRepresentation:
    """Rewrite an H-representation in the coordinates of an equality slice.

    The returned system lives in the chart coordinates of `subspace` (computed
    from the combined equalities when not supplied).  Substituting a complete
    H-representation is exact regardless of how the slice sits; when the slice
    misses the polytope's relative interior the facet-to-facet correspondence
    degrades, so that condition is checked and warned about.
    """
    combined = list(hrep.equalities) + [
        e if isinstance(e, LinearEquality) else LinearEquality.make(*e) for e in equalities
    ]
    if subspace is None:
        subspace = solve_equalities(combined, hrep.dimension)
    else:
        for eq in combined:
            if not eq.satisfied_by(subspace.origin):
                raise InconsistentEqualitiesError("chart origin violates an equality")
            for direction in subspace.directions:
                if dot(tuple(frac(c) for c in eq.coefficients), direction) != 0:
                    raise InconsistentEqualitiesError("chart direction violates an equality")

    reduced_rows: list[LinearInequality] = []
    for ineq in hrep.inequalities:
        coeffs = tuple(frac(c) for c in ineq.coefficients)
        gamma = tuple(dot(coeffs, d) for d in subspace.directions)
        beta = frac(ineq.bound) - dot(coeffs, subspace.origin)
        if not any(gamma):
            if beta < 0:
                raise InconsistentEqualitiesError("slice misses the polytope")
            continue
        reduced_rows.append(LinearInequality.make(gamma, beta))

    reduced = HRepresentation(subspace.dimension, tuple(reduced_rows))
    feasibility = solve_lp(
        (_ZERO,) * subspace.dimension,
        a_ub=[i.coefficients for i in reduced.inequalities],
        b_ub=[i.bound for i in reduced.inequalities],
    )
    if feasibility.status == INFEASIBLE:
        raise InconsistentEqualitiesError("slice misses the polytope")
    # Margin LP: max t with gamma . s + t <= beta rowwise (t capped at 1);
    # a positive optimum certifies an interior point of the reduced system.
    interior = solve_lp(
        (_ZERO,) * subspace.dimension + (_ONE,),
        a_ub=[tuple(i.coefficients) + (_ONE,) for i in reduced.inequalities]
        + [(_ZERO,) * subspace.dimension + (_ONE,)],
        b_ub=[i.bound for i in reduced.inequalities] + [_ONE],
    )
    if interior.status == OPTIMAL and interior.value <= 0:
        warnings.warn("slice does not meet the relative interior of the polytope")
    return remove_redundant(reduced)


def format_vrep(vrep: VRepresentation, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {line}" for line in header.splitlines())
    lines.append(f"dim {vrep.dimension}")
    for v in vrep.vertices:
        lines.append(" ".join(rational_str(c) for c in v))
    return "\n".join(lines) + "\n"


def format_hrep(hrep: HRepresentation, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {line}" for line in header.splitlines())
    lines.append(f"dim {hrep.dimension}")
    for e in hrep.equalities:
        lines.append(" ".join(str(c) for c in e.coefficients) + f" == {e.bound}")
    for i in hrep.inequalities:
        lines.append(" ".join(str(c) for c in i.coefficients) + f" <= {i.bound}")
    return "\n".join(lines) + "\n"


def parse_polytope_file(text: str) -> VRepresentation | HRepresentation:
    """Parse the text format written by format_vrep / format_hrep."""
    dim = None
    vertices: list[Vector] = []
    ineqs: list[LinearInequality] = []
    eqs: list[LinearEquality] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("dim "):
            dim = int(line.split()[1])
            continue
        if dim is None:
            raise ValueError("missing 'dim' header line")
        if "<=" in line:
            lhs, rhs = line.split("<=")
            coeffs = [parse_rational(t) for t in lhs.split()]
            ineqs.append(LinearInequality.make(coeffs, parse_rational(rhs)))
        elif "==" in line:
            lhs, rhs = line.split("==")
            coeffs = [parse_rational(t) for t in lhs.split()]
            eqs.append(LinearEquality.make(coeffs, parse_rational(rhs)))
        else:
            vertices.append(tuple(parse_rational(t) for t in line.split()))
    if ineqs or eqs:
        if vertices:
            raise ValueError("file mixes vertices with constraints")
        return HRepresentation(dim, tuple(ineqs), tuple(eqs))
    return VRepresentation(dim, tuple(vertices))
