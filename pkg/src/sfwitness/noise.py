"""Depolarizing-noise models and analytic robustness thresholds.

Two channels are covered. The collective channel admixes global white
noise, rho -> p 1/2^N + (1-p) rho; since Sigma(k) is a sum of traceless
Pauli strings the identity part contributes nothing and the expectation
shrinks by (1-p). The individual channel acts on each qubit independently,
rho_s -> (1-q) rho_s + q 1/2, which shrinks every single-qubit Pauli by
(1-q) and hence every two-point term by (1-q)^2.

Both laws are exactly linear/quadratic in the strength, so the detection
thresholds have closed forms: p* = 1 - 1/<Sigma> and q* = 1 - <Sigma>^(-1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import InputError, ResourceError
from .states import DensityMatrix, StateVector
from .witness import WitnessSpec, sigma_value

NOISE_KINDS = ("collective", "individual")


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing channel: kind 'collective' (strength p) or 'individual' (q)."""

    kind: str
    strength: float

    def __post_init__(self):
        if self.kind not in NOISE_KINDS:
            raise InputError(f"noise kind must be one of {NOISE_KINDS}, got {self.kind!r}")
        if not 0.0 <= self.strength <= 1.0:
            raise InputError(f"noise strength must be in [0, 1], got {self.strength}")


def noisy_sigma(state: StateVector, spec: WitnessSpec, noise: NoiseModel) -> float:
    """<Sigma(k)> of the state after the channel, via the exact factor laws."""
    clean = sigma_value(state, spec)
    if noise.kind == "collective":
        return (1.0 - noise.strength) * clean
    return (1.0 - noise.strength) ** 2 * clean


def collective_threshold(state: StateVector, spec: WitnessSpec) -> float:
    """Largest white-noise fraction below which the state stays detected.

    Returns 0 when the noiseless state is not detected to begin with.
    """
    clean = sigma_value(state, spec)
    if clean <= 1.0:
        return 0.0
    return 1.0 - 1.0 / clean


def individual_threshold(state: StateVector, spec: WitnessSpec) -> float:
    """Per-qubit depolarizing threshold q* = 1 - <Sigma>^(-1/2) (0 if undetected)."""
    clean = sigma_value(state, spec)
    if clean <= 1.0:
        return 0.0
    return 1.0 - 1.0 / math.sqrt(clean)


def collective_threshold_exact(sigma: Fraction) -> Fraction:
    """Exact-rational p* = 1 - 1/sigma for a closed-form sigma."""
    if sigma <= 1:
        return Fraction(0)
    return 1 - 1 / Fraction(sigma)


def _depolarize_qubit(rho: np.ndarray, n_qubits: int, site: int, q: float) -> np.ndarray:
    """Kraus form of rho_s -> (1-q) rho_s + q 1/2 on one qubit."""
    out = (1.0 - 0.75 * q) * rho
    for axis in kernels.AXES:
        srho = kernels.apply_pauli(rho, n_qubits, site, axis)
        out = out + (0.25 * q) * kernels.apply_pauli_right(srho, n_qubits, site, axis)
    return out


def kraus_crosscheck(state: StateVector, spec: WitnessSpec, q: float,
                     site_cap: int = 8) -> tuple[float, float]:
    """Evaluate the individually-depolarized <Sigma> along both routes.

    Returns (observable_side, state_side): the (1-q)^2 factor law versus an
    explicit per-qubit Kraus application to the density matrix. The two are
    equal up to rounding; tests assert it.
    """
    if not 0.0 <= q <= 1.0:
        raise InputError(f"q must be in [0, 1], got {q}")
    n = state.n_qubits
    if n > site_cap:
        raise ResourceError(f"{n} qubits exceeds the density-path cap {site_cap}")
    observable_side = (1.0 - q) ** 2 * sigma_value(state, spec)
    rho = np.outer(state.amplitudes, state.amplitudes.conj())
    for site in range(1, n + 1):
        rho = _depolarize_qubit(rho, n, site, q)
    state_side = sigma_value(DensityMatrix(n, rho), spec)
    return observable_side, state_side
