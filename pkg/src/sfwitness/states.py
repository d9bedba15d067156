"""State families for multi-qubit entanglement detection.

Provides computational basis states, Dicke states ``|N,l>``, phased Dicke
states (alternating signs by transposition parity), two four-qubit
superposition families, Bloch-parameterized product density matrices and
global white-noise admixtures, plus a JSON serialization for sparse state
exchange.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, ResourceError

#: Default cap on dense state-vector size (2**MAX_QUBITS amplitudes).
#: Reassign the module attribute to work above it.
MAX_QUBITS = 16

#: Cap for dense density matrices (2**n x 2**n entries).
DENSITY_MAX_QUBITS = 12

NORM_ATOL = 1e-12
HERMITIAN_ATOL = 1e-12
PSD_ATOL = 1e-10

#: Norm slack below which the JSON reader renormalizes instead of rejecting.
SERIALIZATION_NORM_ATOL = 1e-9


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state of `n_qubits` qubits.

    ``amplitudes[b]`` belongs to the basis ket whose binary expansion of
    ``b`` (`n_qubits` digits) reads qubit 1 .. qubit N left to right.
    """

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise InputError("n_qubits must be positive")
        if self.n_qubits > MAX_QUBITS:
            raise ResourceError(
                f"{self.n_qubits} qubits exceeds the cap of {MAX_QUBITS} "
                "(raise states.MAX_QUBITS to override)")
        amps = np.asarray(self.amplitudes, dtype=complex).copy()
        if amps.shape != (2 ** self.n_qubits,):
            raise InputError(
                f"expected {2 ** self.n_qubits} amplitudes, got shape {amps.shape}")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_ATOL:
            raise InputError(f"state not normalized: sum |amp|^2 = {norm_sq!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 2 ** self.n_qubits


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator on `n_qubits`."""

    n_qubits: int
    entries: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise InputError("n_qubits must be positive")
        if self.n_qubits > DENSITY_MAX_QUBITS:
            raise ResourceError(
                f"{self.n_qubits} qubits exceeds the density-matrix cap of "
                f"{DENSITY_MAX_QUBITS}")
        dim = 2 ** self.n_qubits
        mat = np.asarray(self.entries, dtype=complex).copy()
        if mat.shape != (dim, dim):
            raise InputError(f"expected shape {(dim, dim)}, got {mat.shape}")
        if np.max(np.abs(mat - mat.conj().T)) > HERMITIAN_ATOL:
            raise InputError("matrix is not Hermitian")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > NORM_ATOL:
            raise InputError(f"trace must be 1, got {tr!r}")
        if float(np.linalg.eigvalsh(mat)[0]) < -PSD_ATOL:
            raise InputError("matrix has a significantly negative eigenvalue")
        mat.flags.writeable = False
        object.__setattr__(self, "entries", mat)

    @property
    def dim(self) -> int:
        return 2 ** self.n_qubits


@dataclass(frozen=True)
class BlochVector:
    """Single-qubit state as a real 3-vector of Pauli expectations."""

    n_x: float
    n_y: float
    n_z: float

    def __post_init__(self):
        if self.norm_sq() > 1.0 + 1e-12:
            raise InputError(f"Bloch vector length exceeds 1: {self}")

    def norm_sq(self) -> float:
        return self.n_x ** 2 + self.n_y ** 2 + self.n_z ** 2

    def as_array(self) -> np.ndarray:
        return np.array([self.n_x, self.n_y, self.n_z])


def _sign_factor(sign) -> float:
    if sign in (+1, "+", 1.0):
        return 1.0
    if sign in (-1, "-", -1.0):
        return -1.0
    raise InputError(f"sign must be +1/-1 or '+'/'-', got {sign!r}")


def basis_index(n_qubits: int, bits: str) -> int:
    """Basis index of the ket |bits>, qubit 1 leftmost."""
    if len(bits) != n_qubits or set(bits) - {"0", "1"}:
        raise InputError(f"bits must be a binary string of length {n_qubits}, got {bits!r}")
    return int(bits, 2)


def make_basis_state(n_qubits: int, bits: str) -> StateVector:
    """Computational basis state |bits>."""
    amps = np.zeros(2 ** n_qubits, dtype=complex)
    amps[basis_index(n_qubits, bits)] = 1.0
    return StateVector(n_qubits, amps)


def _check_excitations(n_qubits: int, l: int) -> None:
    if n_qubits < 1:
        raise InputError("n_qubits must be positive")
    if not 0 <= l <= n_qubits:
        raise InputError(f"need 0 <= l <= {n_qubits}, got l={l}")


def make_dicke(n_qubits: int, l: int) -> StateVector:
    """Dicke state |N,l>: equal superposition of all weight-l basis states."""
    _check_excitations(n_qubits, l)
    amps = np.zeros(2 ** n_qubits, dtype=complex)
    amp = 1.0 / math.sqrt(math.comb(n_qubits, l))
    for positions in itertools.combinations(range(n_qubits), l):
        amps[sum(1 << (n_qubits - 1 - p) for p in positions)] = amp
    return StateVector(n_qubits, amps)


def make_phased_dicke(n_qubits: int, l: int) -> StateVector:
    """Dicke state with signs alternating by transposition parity.

    The sign of a weight-l basis state is +1 iff it is reachable from the
    reference ``1^l 0^(N-l)`` by an even number of adjacent transpositions.
    Each transposition of unequal neighbors moves one excitation by one
    position, so the parity equals the parity of the total displacement:
    the sum of the (0-indexed, left-to-right) positions of the 1-bits,
    relative to the reference value l(l-1)/2.
    """
    _check_excitations(n_qubits, l)
    amps = np.zeros(2 ** n_qubits, dtype=complex)
    amp = 1.0 / math.sqrt(math.comb(n_qubits, l))
    ref_parity = (l * (l - 1) // 2) % 2
    for positions in itertools.combinations(range(n_qubits), l):
        sign = 1.0 if sum(positions) % 2 == ref_parity else -1.0
        amps[sum(1 << (n_qubits - 1 - p) for p in positions)] = sign * amp
    return StateVector(n_qubits, amps)


def make_ghz_superposition(theta: float, sign=+1) -> StateVector:
    """Four-qubit superposition of two GHZ-type branches.

    cos(theta) (|0011> + |1100>)/sqrt(2) +/- sin(theta) (|0000> + |1111>)/sqrt(2).
    The two branches are orthogonal, so the state is normalized for every
    theta.
    """
    s = _sign_factor(sign)
    amps = np.zeros(16, dtype=complex)
    c = math.cos(theta) / math.sqrt(2.0)
    g = s * math.sin(theta) / math.sqrt(2.0)
    amps[basis_index(4, "0011")] = c
    amps[basis_index(4, "1100")] = c
    amps[basis_index(4, "0000")] = g
    amps[basis_index(4, "1111")] = g
    return StateVector(4, amps)


def make_dicke_ghz_superposition(theta: float, sign=+1) -> StateVector:
    """cos(theta)|4,2> +/- sin(theta)(|0000> + |1111>)/sqrt(2)."""
    s = _sign_factor(sign)
    amps = math.cos(theta) * make_dicke(4, 2).amplitudes.copy()
    g = s * math.sin(theta) / math.sqrt(2.0)
    amps[basis_index(4, "0000")] += g
    amps[basis_index(4, "1111")] += g
    return StateVector(4, amps)


_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def make_product_density(blochs) -> DensityMatrix:
    """Tensor product of single-qubit states (1 + n.sigma)/2."""
    blochs = [b if isinstance(b, BlochVector) else BlochVector(*b) for b in blochs]
    if not blochs:
        raise InputError("need at least one Bloch vector")
    rho = np.array([[1.0]], dtype=complex)
    for b in blochs:
        one = 0.5 * (np.eye(2, dtype=complex)
                     + b.n_x * _PAULI["x"] + b.n_y * _PAULI["y"] + b.n_z * _PAULI["z"])
        rho = np.kron(rho, one)
    return DensityMatrix(len(blochs), rho)


def mix_with_white_noise(state: StateVector, p: float) -> DensityMatrix:
    """p * identity/2^N + (1-p) |psi><psi|."""
    if not 0.0 <= p <= 1.0:
        raise InputError(f"noise fraction must be in [0, 1], got {p}")
    if state.n_qubits > DENSITY_MAX_QUBITS:
        raise ResourceError(
            f"density matrix for {state.n_qubits} qubits exceeds cap "
            f"{DENSITY_MAX_QUBITS}")
    dim = state.dim
    rho = (p / dim) * np.eye(dim, dtype=complex)
    rho += (1.0 - p) * np.outer(state.amplitudes, state.amplitudes.conj())
    return DensityMatrix(state.n_qubits, rho)


def random_state_vector(n_qubits: int, rng: np.random.Generator) -> StateVector:
    """Haar-like random pure state: normalized complex-normal amplitudes."""
    amps = rng.standard_normal(2 ** n_qubits) + 1j * rng.standard_normal(2 ** n_qubits)
    return StateVector(n_qubits, amps / np.linalg.norm(amps))


def to_json(state: StateVector) -> str:
    """Serialize the nonzero amplitudes of a state."""
    terms = [
        {"basis": format(b, f"0{state.n_qubits}b"),
         "re": float(a.real), "im": float(a.imag)}
        for b, a in enumerate(state.amplitudes) if a != 0
    ]
    return json.dumps({"n_qubits": state.n_qubits, "terms": terms})


def from_json(text: str) -> StateVector:
    """Parse a serialized state; renormalizes tiny drift, rejects large."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid state JSON: {exc}") from exc
    if not isinstance(data, dict) or "n_qubits" not in data or "terms" not in data:
        raise InputError("state JSON must be an object with n_qubits and terms")
    n = int(data["n_qubits"])
    if n < 1:
        raise InputError("n_qubits must be positive")
    amps = np.zeros(2 ** n, dtype=complex)
    seen = set()
    for term in data["terms"]:
        idx = basis_index(n, term["basis"])
        if idx in seen:
            raise InputError(f"duplicate basis state {term['basis']!r}")
        seen.add(idx)
        amps[idx] = float(term["re"]) + 1j * float(term["im"])
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) >= SERIALIZATION_NORM_ATOL:
        raise InputError(f"serialized state norm {norm!r} deviates too far from 1")
    return StateVector(n, amps / norm)
