"""Two-point Pauli correlators, collective-spin moments, and the static
structure factor.

Pure states go through O(2**n) bit-flip/phase kernels; density matrices use
an O(2**n) trace gather. Spin operators are bare Pauli matrices (no 1/2),
so a Dicke state |N,l> gives sum_{i<j} <x_i x_j> = l(N-l) at k = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InputError
from .kernels import AXES
from .states import DensityMatrix, StateVector

IMAG_ATOL = 1e-10


@dataclass(frozen=True)
class SiteLayout:
    """Spin positions along a chain, in units of the lattice spacing."""

    positions: tuple

    def __post_init__(self):
        pos = tuple(float(r) for r in self.positions)
        if len(pos) < 1:
            raise InputError("layout needs at least one site")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise InputError("site positions must be strictly increasing")
        object.__setattr__(self, "positions", pos)

    @classmethod
    def unit_spacing(cls, n_sites: int) -> "SiteLayout":
        return cls(tuple(float(i) for i in range(n_sites)))

    def separation(self, i: int, j: int) -> float:
        """r_j - r_i for 1-based site labels."""
        return self.positions[j - 1] - self.positions[i - 1]

    def __len__(self) -> int:
        return len(self.positions)


def _check_pair(n_qubits: int, i: int, j: int) -> None:
    if not (1 <= i < j <= n_qubits):
        raise InputError(f"need 1 <= i < j <= {n_qubits}, got i={i}, j={j}")


def _real(value: complex) -> float:
    if abs(value.imag) > IMAG_ATOL:
        raise ArithmeticError(f"expectation has imaginary residue {value.imag!r}")
    return float(value.real)


def two_point(state, i: int, j: int, a: str, b: str) -> float:
    """<sigma_i^a sigma_j^b> for a pure state or density matrix."""
    _check_pair(state.n_qubits, i, j)
    if isinstance(state, StateVector):
        val = kernels.pair_expectation_pure(state.amplitudes, state.n_qubits, i, j, a, b)
    elif isinstance(state, DensityMatrix):
        val = kernels.pair_expectation_density(state.entries, state.n_qubits, i, j, a, b)
    else:
        raise InputError(f"unsupported state type {type(state).__name__}")
    return _real(val)


def _apply_collective_spin(arr: np.ndarray, n_qubits: int, a: str) -> np.ndarray:
    """J_a = (1/2) sum_i sigma_i^a applied to axis 0."""
    out = np.zeros_like(arr, dtype=complex)
    for site in range(1, n_qubits + 1):
        out += kernels.apply_pauli(arr, n_qubits, site, a)
    return 0.5 * out


def collective_spin_sq(state, a: str) -> float:
    """<J_a^2>, computed through the collective operator (not pair sums)."""
    kernels.check_axis(a)
    n = state.n_qubits
    if isinstance(state, StateVector):
        phi = _apply_collective_spin(state.amplitudes, n, a)
        return float(np.real(np.vdot(phi, phi)))
    if isinstance(state, DensityMatrix):
        jjrho = _apply_collective_spin(_apply_collective_spin(state.entries, n, a), n, a)
        return _real(complex(np.trace(jjrho)))
    raise InputError(f"unsupported state type {type(state).__name__}")


def structure_factor(state, k: float, a: str, b: str, layout: SiteLayout | None = None) -> complex:
    """sum_{i<j} exp(i k (r_j - r_i)) <sigma_i^a sigma_j^b>."""
    n = state.n_qubits
    layout = layout or SiteLayout.unit_spacing(n)
    if len(layout) != n:
        raise InputError(f"layout has {len(layout)} sites for a {n}-qubit state")
    total = 0.0 + 0.0j
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total += np.exp(1j * k * layout.separation(i, j)) * two_point(state, i, j, a, b)
    return complex(total)


def verify_collective_identity(state, a: str) -> tuple[float, float]:
    """Evaluate sum_{i<j} <s_i^a s_j^a> both ways: pair sum vs (4 J_a^2 - N)/2.

    Returns (pair_route, collective_route); the two agree for every state.
    """
    lhs = structure_factor(state, 0.0, a, a).real
    rhs = (4.0 * collective_spin_sq(state, a) - state.n_qubits) / 2.0
    return lhs, rhs


def pair_correlation_table(state, axes=AXES) -> dict:
    """All <sigma_i^a sigma_j^a> for i < j, keyed by (i, j, axis).

    The table is k-independent; callers weight it with lattice phases.
    """
    n = state.n_qubits
    return {
        (i, j, a): two_point(state, i, j, a, a)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        for a in axes
    }
