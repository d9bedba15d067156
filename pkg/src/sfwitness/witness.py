"""Structure-factor entanglement witness W(k) = 1 - Sigma(k).

Sigma(k) averages the cosine-weighted diagonal two-point correlators:

    <Sigma(k)> = (1/C(N,2)) sum_{i<j} cos(k m_ij)
                 [c_x <x_i x_j> + c_y <y_i y_j> + c_z <z_i z_j>],

with m_ij = r_j - r_i. Every product state satisfies |<Sigma(k)>| <= 1, so
a negative witness value certifies entanglement. Closed forms for the
Dicke families are provided as exact rationals.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import kernels
from .correlators import SiteLayout, pair_correlation_table, two_point
from .errors import InputError, ResourceError, UnsupportedCaseError
from .kernels import AXES
from .states import DensityMatrix, StateVector

DETECTION_TOL = 1e-9

#: Dense-operator size cap (sigma_operator allocates 4**n complex entries).
OPERATOR_MAX_QUBITS = 12


@dataclass(frozen=True)
class WitnessSpec:
    """Parameters (N, k, c_x, c_y, c_z, site layout) defining Sigma(k)."""

    n_qubits: int
    k: float
    c_x: float
    c_y: float
    c_z: float
    layout: SiteLayout | None = None

    def __post_init__(self):
        if self.n_qubits < 2:
            raise InputError("a witness needs at least 2 qubits")
        for name, c in (("c_x", self.c_x), ("c_y", self.c_y), ("c_z", self.c_z)):
            if abs(c) > 1.0:
                raise InputError(f"|{name}| must be <= 1, got {c}")
        layout = self.layout or SiteLayout.unit_spacing(self.n_qubits)
        if len(layout) != self.n_qubits:
            raise InputError(
                f"layout has {len(layout)} sites for n_qubits={self.n_qubits}")
        object.__setattr__(self, "layout", layout)

    @property
    def coefficients(self) -> tuple:
        return (self.c_x, self.c_y, self.c_z)

    def pair_weight(self, i: int, j: int) -> float:
        # |k| keeps the k -> -k symmetry bit-exact
        return math.cos(abs(self.k) * self.layout.separation(i, j))

    def to_json(self) -> str:
        return json.dumps({
            "n_qubits": self.n_qubits,
            "k": self.k,
            "c": [self.c_x, self.c_y, self.c_z],
            "positions": list(self.layout.positions),
        })

    @classmethod
    def from_json(cls, text: str) -> "WitnessSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid witness JSON: {exc}") from exc
        try:
            cx, cy, cz = data["c"]
            return cls(int(data["n_qubits"]), float(data["k"]),
                       float(cx), float(cy), float(cz),
                       SiteLayout(tuple(data["positions"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed witness JSON: {exc}") from exc


def _check_state(state, spec: WitnessSpec) -> None:
    if not isinstance(state, (StateVector, DensityMatrix)):
        raise InputError(f"unsupported state type {type(state).__name__}")
    if state.n_qubits != spec.n_qubits:
        raise InputError(
            f"state has {state.n_qubits} qubits, spec expects {spec.n_qubits}")


def axis_components(state, spec: WitnessSpec) -> tuple[float, float, float]:
    """Per-axis sums (1/C(N,2)) sum_{i<j} cos(k m_ij) <a_i a_j>.

    <Sigma(k)> is their inner product with (c_x, c_y, c_z), which makes
    coefficient sweeps cheap: the components do not depend on c.
    """
    _check_state(state, spec)
    n = spec.n_qubits
    norm = math.comb(n, 2)
    comps = []
    for axis in AXES:
        total = 0.0
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                total += spec.pair_weight(i, j) * two_point(state, i, j, axis, axis)
        comps.append(total / norm)
    return tuple(comps)


def sigma_value(state, spec: WitnessSpec) -> float:
    """<Sigma(k)> for the given state."""
    _check_state(state, spec)
    n = spec.n_qubits
    total = 0.0
    for c, axis in zip(spec.coefficients, AXES):
        if c == 0.0:
            continue
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                total += c * spec.pair_weight(i, j) * two_point(state, i, j, axis, axis)
    return total / math.comb(n, 2)


def witness_value(state, spec: WitnessSpec) -> float:
    """<W(k)> = 1 - <Sigma(k)>; negative certifies entanglement."""
    return 1.0 - sigma_value(state, spec)


def detects(state, spec: WitnessSpec, tol: float = DETECTION_TOL) -> bool:
    """True iff the witness expectation is strictly below -tol."""
    return witness_value(state, spec) < -tol


def dicke_sigma_closed_form(n_qubits: int, l: int) -> Fraction:
    """<Sigma(0)> on |N,l> with c = (1, 1, -1), as an exact rational.

    Equals (4 l (N-l) - (N-2l)^2 + N) / (N (N-1)).
    """
    if n_qubits < 2:
        raise InputError("closed form needs at least 2 qubits")
    if not 0 <= l <= n_qubits:
        raise InputError(f"need 0 <= l <= {n_qubits}, got l={l}")
    n = n_qubits
    return Fraction(4 * l * (n - l) - (n - 2 * l) ** 2 + n, n * (n - 1))


def phased_dicke_sigma_closed_form(n_qubits: int, l: int, with_z: bool) -> Fraction:
    """<Sigma(pi)> on the phased Dicke state |N,l^ph>, as an exact rational.

    Without the z term (c = (1, 1, 0)) the value 2 l (N-l) / C(N,2) holds for
    the half-filled cases l = N/2 (even N) and l = (N+-1)/2 (odd N); with
    c = (1, 1, 1) only the four- and six-qubit half-filled cases are known.
    """
    n = n_qubits
    if n < 2:
        raise InputError("closed form needs at least 2 qubits")
    if not 0 <= l <= n:
        raise InputError(f"need 0 <= l <= {n}, got l={l}")
    if with_z:
        known = {(4, 2): Fraction(13, 9), (6, 3): Fraction(31, 25)}
        try:
            return known[(n, l)]
        except KeyError:
            raise UnsupportedCaseError(
                f"no closed form with the z term for (N={n}, l={l})") from None
    half_filled = (l == n / 2) if n % 2 == 0 else (2 * l in (n - 1, n + 1))
    if not half_filled:
        raise UnsupportedCaseError(
            f"closed form established only for half-filled l, got (N={n}, l={l})")
    return Fraction(2 * l * (n - l), math.comb(n, 2))


def sigma_operator(spec: WitnessSpec) -> np.ndarray:
    """Dense Hermitian matrix of Sigma(k); <psi|.|psi> matches sigma_value."""
    n = spec.n_qubits
    if n > OPERATOR_MAX_QUBITS:
        raise ResourceError(
            f"dense operator for {n} qubits exceeds cap {OPERATOR_MAX_QUBITS}")
    dim = 2 ** n
    idx = np.arange(dim)
    mat = np.zeros((dim, dim), dtype=complex)
    for c, axis in zip(spec.coefficients, AXES):
        if c == 0.0:
            continue
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                scale = c * spec.pair_weight(i, j) / math.comb(n, 2)
                flip = 0
                coef = np.full(dim, scale, dtype=complex)
                for site in (i, j):
                    if axis == "z":
                        coef = coef * kernels.z_signs(n, site)
                    else:
                        flip ^= kernels.bit_mask(n, site)
                        if axis == "y":
                            coef = coef * (1j * (2.0 * kernels.bit_values(n, site) - 1.0))
                mat[idx, idx ^ flip] += coef
    return mat


class ScanPoint(NamedTuple):
    k: float
    sigma: float
    witness: float


def scan_k(state, c_x: float, c_y: float, c_z: float, k_grid,
           layout: SiteLayout | None = None) -> list[ScanPoint]:
    """Evaluate sigma/witness over a k grid (correlators computed once)."""
    k_grid = list(k_grid)
    if not k_grid:
        raise InputError("k grid must be nonempty")
    n = state.n_qubits
    layout = layout or SiteLayout.unit_spacing(n)
    if len(layout) != n:
        raise InputError(f"layout has {len(layout)} sites for a {n}-qubit state")
    table = pair_correlation_table(state)
    coeffs = dict(zip(AXES, (c_x, c_y, c_z)))
    norm = math.comb(n, 2)
    points = []
    for k in k_grid:
        total = 0.0
        for (i, j, axis), value in table.items():
            c = coeffs[axis]
            if c != 0.0:
                total += c * math.cos(abs(k) * layout.separation(i, j)) * value
        sigma = total / norm
        points.append(ScanPoint(float(k), sigma, 1.0 - sigma))
    return points


def find_detection_boundary(state_factory, spec: WitnessSpec,
                            theta_inside: float, theta_outside: float,
                            tol: float = 1e-9, max_iter: int = 200) -> float:
    """Bisect the parameter where detects(state_factory(theta)) flips.

    `theta_inside` must be detected and `theta_outside` not; the returned
    midpoint brackets the boundary to within `tol`.
    """
    if not detects(state_factory(theta_inside), spec):
        raise InputError("theta_inside is not detected")
    if detects(state_factory(theta_outside), spec):
        raise InputError("theta_outside is detected")
    lo, hi = theta_outside, theta_inside
    for _ in range(max_iter):
        if abs(hi - lo) <= tol:
            break
        mid = 0.5 * (lo + hi)
        if detects(state_factory(mid), spec):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
