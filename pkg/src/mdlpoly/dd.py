"""Double description method for polyhedral cones, exact over the rationals.

Given constraint rows R (meaning the cone {x : r . x >= 0 for every row r}),
`cone_generators` returns a lineality basis L and the extreme rays E, so that
the cone equals span(L) + cone(E).  Internally everything runs on coprime
integer vectors; adjacency during insertion uses the standard combinatorial
test on zero-set bitmasks, with the rank-based popcount prefilter.

Rows are deduplicated and processed in lexicographic order (after an initial
linearly independent subset that seeds the simplicial start cone), which
makes the computation deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import integerize, normalize_integers

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class ConeGenerators:
    lineality: tuple[tuple[int, ...], ...]
    rays: tuple[tuple[int, ...], ...]


def _row_reduce(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan; returns (rref rows without zero rows, pivot columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel_basis(matrix: list[list[Fraction]], ncols: int) -> list[tuple[int, ...]]:
    """Integer basis of {x : M x = 0}."""
    rref, pivots = _row_reduce(matrix)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [_ZERO] * ncols
        vec[f] = _ONE
        for row, pc in zip(rref, pivots):
            vec[pc] = -row[f]
        basis.append(integerize(vec))
    return basis


def matrix_rank(matrix) -> int:
    """Linear rank of a matrix of rationals."""
    rref, _ = _row_reduce([[Fraction(v) for v in row] for row in matrix])
    return len(rref)


def matrix_inverse(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(matrix)
    aug = [list(row) + [_ONE if i == j else _ZERO for j in range(k)] for i, row in enumerate(matrix)]
    rref, pivots = _row_reduce(aug)
    if pivots != list(range(k)):
        raise ValueError("matrix is singular")
    return [row[k:] for row in rref]


def _pointed_dd(rows: list[tuple[int, ...]], k: int) -> list[tuple[int, ...]]:
    """Extreme rays of {s : r . s >= 0} for full-row-rank constraint sets."""
    # Seed: first k linearly independent rows give a simplicial cone whose
    # edge j satisfies r_i . edge_j = 0 for i != j and > 0 for i == j.
    seed: list[int] = []
    probe: list[list[Fraction]] = []
    for idx, row in enumerate(rows):
        candidate = probe + [[Fraction(v) for v in row]]
        if len(_row_reduce(candidate)[0]) == len(candidate):
            probe = candidate
            seed.append(idx)
            if len(seed) == k:
                break
    if len(seed) < k:
        raise ValueError("constraint rows do not have full rank")

    inv = matrix_inverse([[Fraction(v) for v in rows[i]] for i in seed])
    rays = [integerize([inv[r][j] for r in range(k)]) for j in range(k)]
    full = (1 << k) - 1
    masks = [full & ~(1 << j) for j in range(k)]

    order = seed + [i for i in range(len(rows)) if i not in set(seed)]
    for insert_pos in range(k, len(order)):
        row = rows[order[insert_pos]]
        bit = 1 << insert_pos
        svals = [sum(r * x for r, x in zip(row, ray)) for ray in rays]
        neg = [i for i, s in enumerate(svals) if s < 0]
        if not neg:
            for i, s in enumerate(svals):
                if s == 0:
                    masks[i] |= bit
            continue
        pos = [i for i, s in enumerate(svals) if s > 0]
        zero = [i for i, s in enumerate(svals) if s == 0]
        new_rays: list[tuple[int, ...]] = []
        new_masks: list[int] = []
        seen: set[tuple[int, ...]] = set()
        for p in pos:
            for m in neg:
                common = masks[p] & masks[m]
                if common.bit_count() < k - 2:
                    continue
                adjacent = True
                for q in range(len(rays)):
                    if q != p and q != m and (masks[q] & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = normalize_integers(
                    tuple(
                        svals[p] * rn - svals[m] * rp
                        for rp, rn in zip(rays[p], rays[m])
                    )
                )
                if combo in seen:
                    continue
                seen.add(combo)
                new_rays.append(combo)
                new_masks.append(common | bit)
        kept_rays = [rays[i] for i in zero] + [rays[i] for i in pos]
        kept_masks = [masks[i] | bit for i in zero] + [masks[i] for i in pos]
        rays = kept_rays + new_rays
        masks = kept_masks + new_masks
        if not rays:
            break
    return rays


def cone_generators(rows) -> ConeGenerators:
    rows = [tuple(row) for row in rows]
    normalized = []
    seen: set[tuple[int, ...]] = set()
    for row in rows:
        vec = integerize(row)
        if any(vec) and vec not in seen:
            seen.add(vec)
            normalized.append(vec)
    if not normalized:
        # No constraints: the cone is all of space.
        dim = len(rows[0]) if rows else 0
        identity = tuple(
            tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)
        )
        return ConeGenerators(identity, ())
    normalized.sort()
    dim = len(normalized[0])

    frows = [[Fraction(v) for v in row] for row in normalized]
    lineality = kernel_basis(frows, dim)
    _, pivot_cols = _row_reduce(frows)
    k = len(pivot_cols)

    if k == 0:
        return ConeGenerators(tuple(sorted(lineality)), ())

    s_rows = [tuple(row[j] for j in pivot_cols) for row in normalized]
    # Deduplicate again in s-space; projections of distinct rows can collide.
    s_unique: list[tuple[int, ...]] = []
    s_seen: set[tuple[int, ...]] = set()
    for row in s_rows:
        nrow = normalize_integers(row)
        if nrow not in s_seen:
            s_seen.add(nrow)
            s_unique.append(nrow)
    rays_s = _pointed_dd(s_unique, k)

    rays = []
    for s in rays_s:
        vec = [0] * dim
        for value, j in zip(s, pivot_cols):
            vec[j] = value
        rays.append(tuple(vec))
    return ConeGenerators(tuple(sorted(lineality)), tuple(sorted(rays)))
