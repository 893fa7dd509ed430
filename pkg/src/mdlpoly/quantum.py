"""Two-qubit states, projective measurements, and Born-rule statistics.

This is the one floating-point corner of the package: states and measurement
bases are numpy complex vectors, conditional distributions come out as float
arrays indexed [a, b, x, y].  Crossing back into the exact modules happens by
lifting floats to their exact binary fractions, with tolerances declared at
the crossing points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .inequalities import golden_inequality, table1_family
from .scenario import CHSH_SCENARIO, InputDistribution, Scenario, uniform_inputs

_ATOL = 1e-12

Basis = tuple[tuple[complex, complex], tuple[complex, complex]]


@dataclass(frozen=True)
class TwoQubitState:
    """Pure state on two qubits, amplitudes in basis order 00, 01, 10, 11."""

    amplitudes: tuple[complex, complex, complex, complex]

    def __post_init__(self):
        amps = tuple(complex(a) for a in self.amplitudes)
        if len(amps) != 4:
            raise ValueError("two-qubit states have 4 amplitudes")
        norm = sum(abs(a) ** 2 for a in amps)
        if abs(norm - 1.0) > _ATOL:
            raise ValueError(f"state norm {norm} is not 1 within {_ATOL}")
        object.__setattr__(self, "amplitudes", amps)

    def vector(self) -> np.ndarray:
        return np.asarray(self.amplitudes, dtype=complex)


@dataclass(frozen=True)
class MeasurementSetup:
    """Per party and input, an orthonormal basis; outcome-0 vector first.

    `angles`, when present, records the plane angles the bases were built
    from (alice per input, then bob per input); it is carried for reporting
    and serialization only.
    """

    alice: tuple[Basis, Basis]
    bob: tuple[Basis, Basis]
    angles: tuple[float, ...] | None = None

    def __post_init__(self):
        for party in (self.alice, self.bob):
            for v0, v1 in party:
                a0 = np.asarray(v0, dtype=complex)
                a1 = np.asarray(v1, dtype=complex)
                if abs(np.vdot(a0, a0) - 1) > _ATOL or abs(np.vdot(a1, a1) - 1) > _ATOL:
                    raise ValueError("measurement vectors must be unit norm")
                if abs(np.vdot(a0, a1)) > _ATOL:
                    raise ValueError("measurement vectors must be orthogonal")

    def basis_vector(self, party: int, setting: int, outcome: int) -> np.ndarray:
        bases = self.alice if party == 0 else self.bob
        return np.asarray(bases[setting][outcome], dtype=complex)


def measurement_basis(angle: float) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    """Orthonormal basis in the real plane at the given angle."""
    c, s = math.cos(angle), math.sin(angle)
    return ((complex(c), complex(s)), (complex(-s), complex(c)))


def plane_setup(a0: float, a1: float, b0: float, b1: float) -> MeasurementSetup:
    """Real-plane projective measurements from one angle per party and input."""
    return MeasurementSetup(
        alice=(measurement_basis(a0), measurement_basis(a1)),
        bob=(measurement_basis(b0), measurement_basis(b1)),
        angles=(a0, a1, b0, b1),
    )


def state_from_schmidt(alpha: float) -> TwoQubitState:
    """cos(alpha)|00> + sin(alpha)|11>."""
    return TwoQubitState((complex(math.cos(alpha)), 0j, 0j, complex(math.sin(alpha))))


def born_rule(state: TwoQubitState, setup: MeasurementSetup) -> np.ndarray:
    """Conditional probabilities P(ab|xy) = |<A_x^a (x) B_y^b | psi>|^2.

    Returns a float array indexed [a, b, x, y]; every input block sums to 1
    within 1e-10 (orthonormal bases make this automatic, the check is a
    guardrail against malformed setups slipping through).
    """
    amp = state.vector()
    cond = np.empty((2, 2, 2, 2), dtype=float)
    for x in range(2):
        for y in range(2):
            for a in range(2):
                va = setup.basis_vector(0, x, a)
                for b in range(2):
                    vb = setup.basis_vector(1, y, b)
                    cond[a, b, x, y] = abs(np.vdot(np.kron(va, vb), amp)) ** 2
            block = cond[:, :, x, y].sum()
            if abs(block - 1.0) > 1e-10:
                raise RuntimeError(f"input block ({x},{y}) sums to {block}")
    return cond


def nonsignaling_residuals(cond: np.ndarray) -> float:
    """Largest marginal mismatch across remote inputs; 0 for quantum points."""
    worst = 0.0
    for a in range(2):
        for x in range(2):
            worst = max(worst, abs(cond[a, :, x, 0].sum() - cond[a, :, x, 1].sum()))
    for b in range(2):
        for y in range(2):
            worst = max(worst, abs(cond[:, b, 0, y].sum() - cond[:, b, 1, y].sum()))
    return worst


def golden_theta() -> float:
    """Measurement angle arccos(sqrt(1/2 + 1/sqrt(5))), about 0.2318 rad."""
    return math.acos(math.sqrt(0.5 + 1 / math.sqrt(5)))


def golden_setup() -> tuple[TwoQubitState, MeasurementSetup]:
    """The partially entangled state and angles behind the ell/48 violation.

    State amplitudes ((sqrt(5)-1)/2, 0, 0, (sqrt(5)+1)/2)/sqrt(3); Alice
    measures at theta and theta - pi/4, Bob mirrors at the negated angles.
    The resulting statistics have P(00|00) = 1/12 and vanishing P(01|01),
    P(10|10), P(00|11).
    """
    r5 = math.sqrt(5)
    r3 = math.sqrt(3)
    state = TwoQubitState((complex((r5 - 1) / (2 * r3)), 0j, 0j, complex((r5 + 1) / (2 * r3))))
    theta = golden_theta()
    setup = plane_setup(theta, theta - math.pi / 4, -theta, -(theta - math.pi / 4))
    return state, setup


def optimal_chsh_setup() -> tuple[TwoQubitState, MeasurementSetup]:
    """Maximally entangled state with the standard CHSH-optimal angles."""
    return state_from_schmidt(math.pi / 4), plane_setup(0.0, math.pi / 4, math.pi / 8, -math.pi / 8)


def compose_full_array(cond: np.ndarray, input_dist: InputDistribution) -> np.ndarray:
    """Full probabilities P(a,b,x,y) = P(xy) P(ab|xy) as a flat float vector.

    Flattening order matches Scenario.full_index, so the result feeds the
    exact inequality evaluators directly.
    """
    sc = input_dist.scenario
    q = np.asarray([float(v) for v in input_dist.q], dtype=float).reshape(sc.n_x, sc.n_y)
    return (cond * q[None, None, :, :]).reshape(-1)


def evaluate_mdl_violation(
    state: TwoQubitState,
    setup: MeasurementSetup,
    lower,
    upper,
    input_dist: InputDistribution | None = None,
) -> float:
    """Golden-inequality value of a quantum setup under a given input source.

    Positive values certify that no bounded-source local model reproduces the
    statistics.  The input distribution (uniform when omitted) must be
    strictly positive.
    """
    if input_dist is None:
        input_dist = uniform_inputs(CHSH_SCENARIO)
    if any(v == 0 for v in input_dist.q):
        raise ValueError("input distribution must be strictly positive")
    full = compose_full_array(born_rule(state, setup), input_dist)
    return float(golden_inequality(lower, upper, input_dist.scenario).evaluate(full))


def quantum_table_point(cond: np.ndarray) -> np.ndarray:
    """Table-basis coordinates of a nonsignaling conditional array.

    Marginals are read off the y=0 (resp. x=0) blocks; for quantum points the
    other blocks agree up to rounding.
    """
    return np.asarray(
        [
            cond[0, :, 0, 0].sum(),
            cond[0, :, 1, 0].sum(),
            cond[:, 0, 0, 0].sum(),
            cond[0, 0, 0, 0],
            cond[0, 0, 1, 0],
            cond[:, 0, 0, 1].sum(),
            cond[0, 0, 0, 1],
            cond[0, 0, 1, 1],
        ],
        dtype=float,
    )


def family_violation(index: int, h, state: TwoQubitState, setup: MeasurementSetup) -> float:
    """Float value of a catalog family on a quantum point (positive = violated)."""
    row = np.asarray([float(c) for c in table1_family(index, h).coefficients], dtype=float)
    t = quantum_table_point(born_rule(state, setup))
    return float(row[0] + row[1:] @ t)


def best_family_violation(index: int, h, restarts: int = 24, seed: int = 0):
    """Search plane setups and Schmidt states for the largest family violation.

    Coarse seeded multistart plus Powell refinement over the five angles
    (Schmidt angle, two per party).  Returns (violation, state, setup); the
    search is deterministic for a fixed seed.
    """
    from scipy.optimize import minimize

    row = np.asarray([float(c) for c in table1_family(index, h).coefficients], dtype=float)

    def value(params: np.ndarray) -> float:
        alpha, a0, a1, b0, b1 = params
        cond = born_rule(state_from_schmidt(alpha), plane_setup(a0, a1, b0, b1))
        t = quantum_table_point(cond)
        return float(row[0] + row[1:] @ t)

    rng = np.random.default_rng(seed)
    best_params = None
    best = -math.inf
    starts = [np.array([math.pi / 4, 0.0, math.pi / 4, math.pi / 8, -math.pi / 8])]
    starts += [rng.uniform(-math.pi / 2, math.pi / 2, size=5) for _ in range(restarts - 1)]
    for start in starts:
        res = minimize(lambda p: -value(p), start, method="Powell", options={"xtol": 1e-10, "ftol": 1e-12})
        if -res.fun > best:
            best = -res.fun
            best_params = res.x
    alpha, a0, a1, b0, b1 = best_params
    return best, state_from_schmidt(alpha), plane_setup(a0, a1, b0, b1)


def state_to_json(state: TwoQubitState) -> dict:
    """Amplitudes as [re, im] pairs, global phase fixed to make the first
    nonzero amplitude real and positive."""
    amps = np.asarray(state.amplitudes, dtype=complex)
    for a in amps:
        if abs(a) > _ATOL:
            amps = amps * (a.conjugate() / abs(a))
            break
    return {"amplitudes": [[float(a.real), float(a.imag)] for a in amps]}


def state_from_json(payload: dict) -> TwoQubitState:
    return TwoQubitState(tuple(complex(re, im) for re, im in payload["amplitudes"]))


def setup_to_json(setup: MeasurementSetup) -> dict:
    if setup.angles is not None:
        return {"angles": list(setup.angles)}
    def basis(b):
        return [[[float(v.real), float(v.imag)] for v in vec] for vec in b]
    return {"alice": [basis(b) for b in setup.alice], "bob": [basis(b) for b in setup.bob]}


def setup_from_json(payload: dict) -> MeasurementSetup:
    if "angles" in payload:
        return plane_setup(*payload["angles"])
    def basis(b):
        return tuple(tuple(complex(re, im) for re, im in vec) for vec in b)
    return MeasurementSetup(
        alice=tuple(basis(b) for b in payload["alice"]),
        bob=tuple(basis(b) for b in payload["bob"]),
    )
