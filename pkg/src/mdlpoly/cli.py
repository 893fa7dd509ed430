"""Command-line front-end for the measurement-dependent locality toolkit.

Subcommands cover every pipeline stage: vertex enumeration, facet
classification on the nonsignaling uniform-input slice, membership checks,
validity scans of the inequality catalog, 2D slice boundary data for
plotting, quantum evaluation of the golden construction, and the CHSH
trade-off.  Flags accept rationals as "p/q" (or decimal strings, converted
exactly).  Every command is deterministic given its flags and seed; output
bytes are identical across runs.

Exit codes: 0 success, 2 usage error, 3 infeasible or inconsistent input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .constraints import TABLE_BASIS_LABELS, slice_equalities
from .inequalities import (
    TABLE_FAMILY_COUNT,
    chsh_critical_h,
    chsh_full_functional,
    golden_inequality,
    mdl_chsh_bound,
    table1_family,
)
from .mdl import InvalidBoundsError, SourceBounds, local_vertices, mdl_vertices
from .pipeline import (
    match_catalog,
    nonsignaling_vertices,
    random_h_values,
    restricted_mdl_polytope,
    scan_table_validity,
)
from .polytope import (
    InconsistentEqualitiesError,
    VRepresentation,
    format_vrep,
    membership,
    vertices_to_facets,
)
from .quantum import (
    born_rule,
    compose_full_array,
    evaluate_mdl_violation,
    golden_setup,
    nonsignaling_residuals,
    setup_from_json,
    setup_to_json,
    state_from_json,
    state_to_json,
)
from .rationals import dot, frac, parse_rational
from .scenario import (
    CHSH_SCENARIO,
    ConditionalDistribution,
    InputDistribution,
    compose,
    uniform_inputs,
)
from .simplex import INFEASIBLE, OPTIMAL, solve_lp
from .symmetry import classify_families

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DomainError(Exception):
    """Input that parses but cannot be computed with (exit code 3)."""


class UsageError(Exception):
    """Bad flag combination detected after argparse (exit code 2)."""


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _bounds(args) -> SourceBounds:
    try:
        return SourceBounds(args.l, args.h, CHSH_SCENARIO)
    except InvalidBoundsError as exc:
        raise DomainError(str(exc)) from exc


def _header(command: str, params: dict) -> str:
    lines = [f"mdlpoly {__version__}"]
    rendered = " ".join(f"--{k} {v}" for k, v in params.items() if v is not None)
    lines.append(f"command: {command} {rendered}".rstrip())
    return "\n".join(lines)


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit_json(report: dict, command: str, params: dict, out: str | None) -> None:
    payload = {
        "tool": {"name": "mdlpoly", "version": __version__, "command": command,
                 "parameters": _jsonable(params)},
    }
    payload.update(_jsonable(report))
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)


# ---------------------------------------------------------------------------
# vertices


def cmd_vertices(args) -> int:
    bounds = _bounds(args)
    vrep = mdl_vertices(bounds)
    params = {"l": args.l, "h": args.h}
    text = format_vrep(vrep, header=_header("vertices", params))
    if args.out and args.out != "-":
        _emit(text, args.out)
        print(f"{len(vrep.vertices)} vertices")
    else:
        _emit(text + f"# {len(vrep.vertices)} vertices\n", None)
    return 0


# ---------------------------------------------------------------------------
# facets


def cmd_facets(args) -> int:
    bounds = _bounds(args)
    params = {"l": args.l, "h": args.h, "restrict": args.restrict}
    if args.restrict == "ns-uniform":
        poly = restricted_mdl_polytope(bounds)
        labels = match_catalog(poly)
        families = []
        for fam in poly.families:
            families.append({
                "representative": list(fam.representative),
                "members": len(fam.members),
                "label": labels.get(fam.representative),
            })
        families.sort(key=lambda f: f["representative"])
        report = {
            "restriction": "ns-uniform",
            "coordinates": list(TABLE_BASIS_LABELS),
            "row_convention": "const + gamma . t <= 0",
            "vertex_count": len(poly.vertices),
            "facet_count": len(poly.facets),
            "family_count": len(poly.families),
            "families": families,
        }
    else:
        vrep = mdl_vertices(bounds)
        hull = vertices_to_facets(vrep)
        fams = classify_families(hull.inequalities, CHSH_SCENARIO)
        report = {
            "restriction": None,
            "dimension": hull.dimension,
            "vertex_count": len(vrep.vertices),
            "facet_count": len(hull.inequalities),
            "equality_count": len(hull.equalities),
            "family_count": len(fams),
            "families": [
                {"representative": {"coefficients": list(f.representative[0]),
                                    "bound": f.representative[1]},
                 "members": len(f.members)}
                for f in fams
            ],
        }
    _emit_json(report, "facets", params, args.out)
    return 0


# ---------------------------------------------------------------------------
# check


def _read_point_rows(path: str) -> tuple[list[tuple[Fraction, ...]], bool]:
    """Rows of a vertex-format file, plus whether any entry was float-typed."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    rows: list[tuple[Fraction, ...]] = []
    floaty = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("dim "):
            continue
        tokens = line.split()
        if any("." in t or "e" in t or "E" in t for t in tokens):
            floaty = True
        try:
            rows.append(tuple(parse_rational(t) for t in tokens))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad point row {line!r}: {exc}") from exc
    if not rows:
        raise DomainError(f"no point rows in {path}")
    return rows, floaty


def _hull_distance(vrep: VRepresentation, point) -> Fraction:
    """Exact L-infinity distance from a point to the hull of a vertex list."""
    n = len(vrep.vertices)
    objective = [_ZERO] * n + [_ONE]
    a_eq = [[_ONE] * n + [_ZERO]]
    b_eq = [_ONE]
    a_ub, b_ub = [], []
    for d in range(vrep.dimension):
        column = [v[d] for v in vrep.vertices]
        a_ub.append(column + [-_ONE])
        b_ub.append(frac(point[d]))
        a_ub.append([-c for c in column] + [-_ONE])
        b_ub.append(-frac(point[d]))
    result = solve_lp(objective, a_ub=a_ub, b_ub=b_ub, a_eq=a_eq, b_eq=b_eq,
                      sense="min", nonneg=True)
    assert result.status == OPTIMAL
    return result.value


def cmd_check(args) -> int:
    bounds = _bounds(args)
    rows, floaty = _read_point_rows(args.points)
    tolerance = frac(args.tolerance) if args.tolerance is not None else (
        frac(1e-9) if floaty else _ZERO
    )
    vrep = mdl_vertices(bounds)
    golden = golden_inequality(args.l, args.h)
    chsh = chsh_full_functional(CHSH_SCENARIO)
    slice_rows = slice_equalities(CHSH_SCENARIO)
    catalog = []
    if Fraction(1, 4) < args.h < Fraction(1, 3):
        catalog = [(i, table1_family(i, args.h)) for i in range(1, TABLE_FAMILY_COUNT + 1)]

    reports = []
    for index, row in enumerate(rows):
        if len(row) != CHSH_SCENARIO.full_size:
            raise DomainError(f"row {index}: expected {CHSH_SCENARIO.full_size} entries")
        total = sum(row)
        if abs(total - 1) > tolerance or any(v < -tolerance for v in row):
            raise DomainError(f"row {index}: not a probability distribution")
        entry = {
            "row": index,
            "golden_value": float(golden.evaluate(row)),
            "chsh_full_expression": float(dot(chsh, row)),
        }
        if tolerance:
            distance = _hull_distance(vrep, row)
            inside = distance <= tolerance
            entry["hull_distance"] = float(distance)
        else:
            result = membership(vrep, row)
            inside = result.inside
            entry["golden_value_exact"] = golden.evaluate(row)
            if result.separating is not None:
                entry["separating"] = {
                    "coefficients": list(result.separating.coefficients),
                    "bound": result.separating.bound,
                    "value_at_point": dot(result.separating.coefficients, row),
                }
        entry["inside"] = bool(inside)
        if args.restrict == "ns-uniform":
            residual = max((abs(r) for r in slice_rows.residuals(row)), default=_ZERO)
            entry["slice_residual"] = float(residual)
            entry["inside"] = bool(inside and residual <= tolerance)
        if catalog:
            entry["catalog_values"] = {
                f"family {i}": float(ineq.evaluate(row)) for i, ineq in catalog
            }
        reports.append(entry)

    params = {"l": args.l, "h": args.h, "restrict": args.restrict,
              "tolerance": str(tolerance), "points": args.points}
    verdicts = [("Inside" if r["inside"] else "Outside") for r in reports]
    _emit_json({"points": reports, "verdicts": verdicts}, "check", params, args.out)
    return 0


# ---------------------------------------------------------------------------
# scan


def cmd_scan(args) -> int:
    if args.h_grid is not None:
        tokens = [t for t in args.h_grid.split(",") if t.strip()]
        if not tokens:
            raise UsageError("empty --h-grid")
        try:
            values = tuple(parse_rational(t) for t in tokens)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --h-grid entry: {exc}") from exc
    else:
        values = random_h_values(args.random, args.seed)
    for h in values:
        if not Fraction(1, 4) < h < Fraction(1, 3):
            raise DomainError(f"h={h} outside ]1/4, 1/3[")
    report = scan_table_validity(values, lower=args.l)
    entries = []
    for h in values:
        per_family = {}
        for i in range(1, TABLE_FAMILY_COUNT + 1):
            value = report[h][i]
            per_family[f"family {i}"] = {
                "max": value,
                "valid": value <= 0,
                "saturated": value == 0,
            }
        entries.append({"h": h, "families": per_family})
    summary = {
        "count": len(values),
        "all_valid": all(f["valid"] for e in entries for f in e["families"].values()),
        "all_saturated": all(f["saturated"] for e in entries for f in e["families"].values()),
    }
    params = {"l": args.l, "h-grid": args.h_grid, "random": args.random,
              "seed": args.seed if args.random is not None else None}
    _emit_json({"scan": entries, "summary": summary}, "scan", params, args.out)
    return 0


# ---------------------------------------------------------------------------
# slice


def _box_distribution(rule) -> tuple[Fraction, ...]:
    """Uniform-input full distribution of the box a xor b = rule(x, y)."""
    half = Fraction(1, 2)
    cond = ConditionalDistribution(
        CHSH_SCENARIO,
        tuple(
            half if (a ^ b) == rule(x, y) else _ZERO
            for a in range(2) for b in range(2) for x in range(2) for y in range(2)
        ),
    )
    return compose(uniform_inputs(CHSH_SCENARIO), cond).p


def _preset_plane(name: str):
    if name != "chsh-plane":
        raise UsageError(f"unknown preset {name!r}")
    center = tuple(Fraction(1, 16) for _ in range(16))
    pr = _box_distribution(lambda x, y: x & y)
    pr_prime = _box_distribution(lambda x, y: x & (1 - y))
    d1 = tuple(a - b for a, b in zip(pr, center))
    d2 = tuple(a - b for a, b in zip(pr_prime, center))
    return center, d1, d2


def _parse_vector16(text: str, flag: str) -> tuple[Fraction, ...]:
    tokens = [t for t in text.split(",") if t.strip()]
    if len(tokens) != 16:
        raise UsageError(f"{flag} needs 16 comma-separated rationals")
    try:
        return tuple(parse_rational(t) for t in tokens)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad {flag} entry: {exc}") from exc


def _slice_sets(spec: str):
    """Parse --sets tokens: local, ns, quantum, mdl:L:H or mdl:L (h = 1-3l)."""
    out = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        if token in ("local", "ns", "quantum"):
            out.append((token, None))
        elif token.startswith("mdl:"):
            parts = token.split(":")[1:]
            try:
                l = parse_rational(parts[0])
                h = parse_rational(parts[1]) if len(parts) > 1 else 1 - 3 * l
            except (IndexError, ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"bad set token {token!r}") from exc
            out.append(("mdl", SourceBounds(l, h, CHSH_SCENARIO)))
        else:
            raise UsageError(f"unknown set token {token!r}")
    if not out:
        raise UsageError("--sets selected nothing")
    return out


def _ray_directions(resolution: int):
    """Rational unit-circle approximations of a uniform angle grid."""
    scale = 10 ** 6
    for k in range(resolution):
        phi = 2 * math.pi * k / resolution
        c = Fraction(round(math.cos(phi) * scale), scale)
        s = Fraction(round(math.sin(phi) * scale), scale)
        if c or s:
            yield k, c, s


def _shoot_ray(vertices, center, direction) -> Fraction:
    """Exact max t with center + t*direction in the hull of the vertex list."""
    n = len(vertices)
    objective = [_ZERO] * n + [_ONE]
    a_eq = [[_ONE] * n + [_ZERO]]
    b_eq = [_ONE]
    for d in range(len(center)):
        a_eq.append([v[d] for v in vertices] + [-frac(direction[d])])
        b_eq.append(frac(center[d]))
    result = solve_lp(objective, a_eq=a_eq, b_eq=b_eq, sense="max", nonneg=True)
    if result.status == INFEASIBLE:
        raise DomainError("slice ray misses the set; is the center inside?")
    assert result.status == OPTIMAL
    return result.value


def _quantum_ray(center, direction, restarts: int, seed: int):
    """Float ray maximization over two-qubit models, penalized off-ray."""
    import numpy as np
    from scipy.optimize import minimize

    from .quantum import plane_setup, state_from_schmidt

    c0 = np.array([float(v) for v in center])
    d = np.array([float(v) for v in direction])
    dd = float(d @ d)
    mu = 200.0

    def objective(params):
        alpha, a0, a1, b0, b1 = params
        cond = born_rule(state_from_schmidt(alpha), plane_setup(a0, a1, b0, b1))
        p = compose_full_array(cond, uniform_inputs(CHSH_SCENARIO))
        t = float((p - c0) @ d) / dd
        residual = p - c0 - t * d
        return -(t - mu * float(residual @ residual))

    rng = np.random.default_rng(seed)
    starts = [np.array([math.pi / 4, 0.0, math.pi / 4, math.pi / 8, -math.pi / 8])]
    starts += [rng.uniform(-math.pi / 2, math.pi / 2, 5) for _ in range(restarts)]
    best = None
    for x0 in starts:
        res = minimize(objective, x0, method="Powell",
                       options={"xtol": 1e-10, "ftol": 1e-12, "maxiter": 40000})
        if best is None or res.fun < best.fun:
            best = res
    alpha, a0, a1, b0, b1 = best.x
    cond = born_rule(state_from_schmidt(alpha), plane_setup(a0, a1, b0, b1))
    p = compose_full_array(cond, uniform_inputs(CHSH_SCENARIO))
    t = float((p - c0) @ d) / dd
    residual = p - c0 - t * d
    return t, float(np.sqrt(residual @ residual))


def cmd_slice(args) -> int:
    if args.center or args.dir1 or args.dir2:
        if not (args.center and args.dir1 and args.dir2):
            raise UsageError("--center, --dir1, --dir2 must be given together")
        center = _parse_vector16(args.center, "--center")
        d1 = _parse_vector16(args.dir1, "--dir1")
        d2 = _parse_vector16(args.dir2, "--dir2")
        plane_note = "user-supplied plane"
    else:
        center, d1, d2 = _preset_plane(args.preset)
        plane_note = f"preset {args.preset}: reconstruction, not paper-exact"
    sets = _slice_sets(args.sets)

    q = uniform_inputs(CHSH_SCENARIO)
    rows = []
    quantum_residual = 0.0
    for name, bounds in sets:
        if name == "local":
            vertices = tuple(compose(q, cond).p for _, cond in local_vertices(CHSH_SCENARIO))
        elif name == "ns":
            vertices = nonsignaling_vertices(CHSH_SCENARIO)
        elif name == "mdl":
            vertices = mdl_vertices(bounds).vertices
        else:
            vertices = None
        label = name if bounds is None else f"mdl:{bounds.lower}:{bounds.upper}"
        for k, c, s in _ray_directions(args.resolution):
            direction = tuple(c * a + s * b for a, b in zip(d1, d2))
            if vertices is not None:
                t = _shoot_ray(vertices, center, direction)
                rows.append((label, k, str(t * c), str(t * s)))
            else:
                t, residual = _quantum_ray(center, direction, args.restarts, args.seed + k)
                quantum_residual = max(quantum_residual, residual)
                rows.append((label, k, repr(t * float(c)), repr(t * float(s))))

    params = {"preset": None if args.center else args.preset, "sets": args.sets,
              "resolution": args.resolution, "seed": args.seed, "restarts": args.restarts}
    lines = [f"# {line}" for line in _header("slice", params).splitlines()]
    lines.append(f"# {plane_note}")
    lines.append("# columns: set, ray index, u, v  (u,v in plane coordinates)")
    if any(name == "quantum" for name, _ in sets):
        lines.append(f"# quantum boundary is a float reconstruction; "
                     f"max off-ray residual {quantum_residual:.3e}")
    lines.append("set,ray,u,v")
    lines.extend(",".join(str(c) for c in row) for row in rows)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# quantum-eval


def cmd_quantum_eval(args) -> int:
    if bool(args.state) != bool(args.setup):
        raise UsageError("--state and --setup must be given together")
    if args.state:
        try:
            with open(args.state) as fh:
                state = state_from_json(json.load(fh))
            with open(args.setup) as fh:
                setup = setup_from_json(json.load(fh))
        except (OSError, ValueError, KeyError) as exc:
            raise DomainError(f"cannot load state/setup: {exc}") from exc
        source = "user-supplied"
    else:
        state, setup = golden_setup()
        source = "golden construction"

    inputs = uniform_inputs(CHSH_SCENARIO)
    if args.inputs:
        tokens = [t for t in args.inputs.split(",") if t.strip()]
        if len(tokens) != 4:
            raise UsageError("--inputs needs 4 comma-separated rationals")
        inputs = InputDistribution(CHSH_SCENARIO, tuple(parse_rational(t) for t in tokens))

    cond = born_rule(state, setup)
    try:
        value = evaluate_mdl_violation(state, setup, float(args.l), float(args.h),
                                       input_dist=inputs)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    report = {
        "source": source,
        "p_00_given_00": float(cond[0, 0, 0, 0]),
        "hardy_cells": {
            "p_01_given_01": float(cond[0, 1, 0, 1]),
            "p_10_given_10": float(cond[1, 0, 1, 0]),
            "p_00_given_11": float(cond[0, 0, 1, 1]),
        },
        "golden_value": value,
        "uniform_input_prediction": float(args.l) / 48,
        "nonsignaling_residual": nonsignaling_residuals(cond),
        "state": state_to_json(state),
        "setup": setup_to_json(setup),
    }
    params = {"l": args.l, "h": args.h, "state": args.state, "setup": args.setup,
              "inputs": args.inputs}
    _emit_json(report, "quantum-eval", params, args.out)
    return 0


# ---------------------------------------------------------------------------
# chsh-bound


def cmd_chsh_bound(args) -> int:
    bounds = _bounds(args)
    result = mdl_chsh_bound(args.l, args.h)
    report = {
        "effective_lower": result.effective_lower,
        "max_conditional_chsh": result.value,
        "max_full_expression": result.value / 4,
        "maximizer_count": result.maximizer_count,
        "witness": list(result.witness.p),
    }
    if args.critical:
        report["critical_h"] = chsh_critical_h(lower=args.l)
        report["quantum_value"] = 2 * math.sqrt(2)
    params = {"l": args.l, "h": args.h, "critical": args.critical or None}
    _emit_json(report, "chsh-bound", params, args.out)
    return 0


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdlpoly",
        description="Exact polytope analysis of measurement-dependent local models.",
    )
    parser.add_argument("--version", action="version", version=f"mdlpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_bounds(p, l_default=None, h_default=None):
        p.add_argument("--l", type=_rational, required=l_default is None,
                       default=l_default, help="lower source bound, rational p/q")
        p.add_argument("--h", type=_rational, required=h_default is None,
                       default=h_default, help="upper source bound, rational p/q")

    def add_out(p):
        p.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("vertices", help="enumerate the reachable-distribution vertices")
    add_bounds(p)
    add_out(p)
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("facets", help="facet classification (optionally on the "
                       "nonsignaling uniform-input slice)")
    add_bounds(p)
    p.add_argument("--restrict", choices=["ns-uniform"], default=None,
                   help="classify on the nonsignaling uniform-input slice")
    add_out(p)
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("check", help="membership and inequality report for points")
    p.add_argument("points", help="vertex-format file of full distributions")
    add_bounds(p)
    p.add_argument("--restrict", choices=["ns-uniform"], default=None)
    p.add_argument("--tolerance", type=float, default=None,
                   help="override the float tolerance (default 1e-9 for float "
                        "points, exact otherwise)")
    add_out(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="validity scan of the inequality catalog over h")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--h-grid", help="comma-separated rationals in ]1/4, 1/3[")
    group.add_argument("--random", type=int, metavar="N",
                       help="number of seeded random h values")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--l", type=_rational, default=Fraction(0))
    add_out(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("slice", help="2D slice boundary polylines (CSV)")
    p.add_argument("--preset", default="chsh-plane", choices=["chsh-plane"],
                   help="shipped plane through the white-noise point "
                        "(reconstruction, not paper-exact)")
    p.add_argument("--center", help="16 comma-separated rationals")
    p.add_argument("--dir1", help="16 comma-separated rationals")
    p.add_argument("--dir2", help="16 comma-separated rationals")
    p.add_argument("--sets", default="local,ns",
                   help="comma list: local, ns, quantum, mdl:L:H, mdl:L (h=1-3l)")
    p.add_argument("--resolution", type=int, default=360, help="rays per set")
    p.add_argument("--seed", type=int, default=0, help="quantum optimizer seed")
    p.add_argument("--restarts", type=int, default=4, help="quantum optimizer restarts")
    add_out(p)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("quantum-eval", help="evaluate a two-qubit model against "
                       "the small-violation inequality")
    add_bounds(p, l_default=Fraction(1, 100), h_default=Fraction(1, 4))
    p.add_argument("--state", help="state JSON file (with --setup)")
    p.add_argument("--setup", help="measurement setup JSON file (with --state)")
    p.add_argument("--inputs", help="4 comma-separated rationals q(xy), default uniform")
    add_out(p)
    p.set_defaults(func=cmd_quantum_eval)

    p = sub.add_parser("chsh-bound", help="CHSH maximum over the bounded-source set")
    add_bounds(p)
    p.add_argument("--critical", action="store_true",
                   help="also bisect the h where the bound meets the quantum value")
    add_out(p)
    p.set_defaults(func=cmd_chsh_bound)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except (DomainError, InconsistentEqualitiesError, InvalidBoundsError) as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
