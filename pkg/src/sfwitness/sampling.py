"""Finite-shot simulation of the witness measurement.

Each Pauli axis with a nonzero coefficient is one measurement setting: all
qubits are read out projectively in that basis, so a single shot yields
every two-point correlator of the axis at once. At most three settings are
needed regardless of N. Outcomes are drawn from the exact 2^N distribution
by inverse CDF; the standard error propagates the per-shot sample variance
of the full pair sum, which keeps the correlations between pairs intact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import InputError
from .states import StateVector
from .witness import WitnessSpec

_SQRT_HALF = 1.0 / math.sqrt(2.0)

# basis-change gates: measuring sigma^alpha equals measuring sigma^z after U
_ROTATIONS = {
    "x": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT_HALF,
    "y": np.array([[1, -1j], [1, 1j]], dtype=complex) * _SQRT_HALF,
    "z": np.eye(2, dtype=complex),
}


@dataclass(frozen=True)
class ShotPlan:
    """Number of projective shots per measurement setting, plus the seed."""

    shots_per_setting: int
    seed: int = 0

    def __post_init__(self):
        if self.shots_per_setting < 1:
            raise InputError("shots_per_setting must be >= 1")
        if self.seed < 0:
            raise InputError("seed must be non-negative")


class CurvePoint(NamedTuple):
    shots: int
    estimate: float
    std_error: float


def measurement_settings(spec: WitnessSpec) -> tuple:
    """Axes that actually need a measurement setting (nonzero coefficient)."""
    return tuple(a for a, c in zip(kernels.AXES, spec.coefficients) if c != 0.0)


def _basis_probabilities(state: StateVector, axis: str) -> np.ndarray:
    amps = state.amplitudes
    for site in range(1, state.n_qubits + 1):
        amps = kernels.apply_one_qubit_gate(amps, state.n_qubits, site, _ROTATIONS[axis])
    probs = np.abs(amps) ** 2
    return probs / probs.sum()


def _pair_weights(spec: WitnessSpec) -> np.ndarray:
    """Symmetric zero-diagonal matrix of cos(k m_ij) weights."""
    n = spec.n_qubits
    w = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w[i - 1, j - 1] = w[j - 1, i - 1] = spec.pair_weight(i, j)
    return w


def _shot_values(state: StateVector, spec: WitnessSpec, axis: str,
                 shots: int, rng: np.random.Generator) -> np.ndarray:
    """Per-shot pair sums sum_{i<j} w_ij e_i e_j for one setting."""
    probs = _basis_probabilities(state, axis)
    cdf = np.cumsum(probs)
    cdf[-1] = 1.0
    outcomes = np.searchsorted(cdf, rng.random(shots), side="right")
    shifts = np.arange(state.n_qubits - 1, -1, -1)
    eigen = 1.0 - 2.0 * ((outcomes[:, None] >> shifts[None, :]) & 1)
    weights = _pair_weights(spec)
    return 0.5 * np.einsum("si,ij,sj->s", eigen, weights, eigen)


def _estimate(state: StateVector, spec: WitnessSpec, shots: int,
              seed_words: tuple) -> tuple[float, float]:
    norm = math.comb(spec.n_qubits, 2)
    sigma_est = 0.0
    variance = 0.0
    for axis_pos, axis in enumerate(kernels.AXES):
        c = spec.coefficients[axis_pos]
        if c == 0.0:
            continue
        rng = np.random.default_rng([*seed_words, axis_pos])
        values = _shot_values(state, spec, axis, shots, rng)
        sigma_est += c * float(values.mean()) / norm
        if shots >= 2:
            var = float(values.var(ddof=1))
        else:
            # single shot: fall back on the worst case for a bounded variable
            var = float(np.abs(_pair_weights(spec)).sum() / 2.0) ** 2
        variance += (c / norm) ** 2 * var / shots
    return 1.0 - sigma_est, math.sqrt(variance)


def estimate_witness(state: StateVector, spec: WitnessSpec,
                     plan: ShotPlan) -> tuple[float, float]:
    """Shot-limited estimate of <W(k)> with its standard error.

    Deterministic for a fixed plan: the RNG substream of each setting is
    derived from (seed, axis index).
    """
    if state.n_qubits != spec.n_qubits:
        raise InputError(
            f"state has {state.n_qubits} qubits, spec expects {spec.n_qubits}")
    return _estimate(state, spec, plan.shots_per_setting, (plan.seed,))


def convergence_curve(state: StateVector, spec: WitnessSpec, shot_grid,
                      seed: int = 0) -> list[CurvePoint]:
    """Independent witness estimates over a grid of shot counts.

    Grid points use disjoint substreams (seed, point index, axis index), so
    the curve samples independent experiments of growing size.
    """
    shot_grid = [int(s) for s in shot_grid]
    if not shot_grid:
        raise InputError("shot grid must be nonempty")
    if min(shot_grid) < 1:
        raise InputError("shot counts must be >= 1")
    if seed < 0:
        raise InputError("seed must be non-negative")
    points = []
    for pos, shots in enumerate(shot_grid):
        estimate, err = _estimate(state, spec, shots, (seed, pos))
        points.append(CurvePoint(shots, estimate, err))
    return points
