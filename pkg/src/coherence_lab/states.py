"""Pure states and density matrices over the fixed incoherent basis.

The basis is the computational basis of C^d; "incoherent" always means
diagonal in it.  State objects are immutable wrappers around complex
ndarrays, validated on construction.
"""

from __future__ import annotations

import dataclasses
from dataclasses import InitVar
from functools import cached_property

import numpy as np

from . import numerics
from .errors import BadDimError, BadRankError, NotNormalizedError, NotPSDError
from .numerics import dagger, frobenius

# Two pure states are "the same" when |<psi|phi>| >= 1 - PHASE_EQ_TOL.
PHASE_EQ_TOL = 1e-10

# Default entrywise-l1 threshold deciding incoherence.
INCOHERENCE_TOL = 1e-9


@dataclasses.dataclass(frozen=True, eq=False)
class PureState:
    """Normalized state vector; amplitudes[i] is the coefficient of basis ket i."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(amp.view(np.float64))):
            raise NotNormalizedError("amplitudes contain non-finite entries")
        norm = float(np.linalg.norm(amp))
        if abs(norm - 1.0) > PHASE_EQ_TOL:
            raise NotNormalizedError(f"norm {norm} is not 1 within {PHASE_EQ_TOL}")
        object.__setattr__(self, "amplitudes", amp)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def overlap(self, other: "PureState") -> complex:
        """Inner product <self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def __eq__(self, other) -> bool:
        # Global phases are unphysical: states compare equal up to a phase.
        if not isinstance(other, PureState):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return abs(self.overlap(other)) >= 1.0 - PHASE_EQ_TOL

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "kind": "pure",
            "re": self.amplitudes.real.tolist(),
            "im": self.amplitudes.imag.tolist(),
        }


def basis_state(dim: int, i: int) -> PureState:
    """Basis ket |i> in dimension dim."""
    amp = np.zeros(dim, dtype=np.complex128)
    amp[i] = 1.0
    return PureState(amp)


@dataclasses.dataclass(frozen=True, eq=False)
class DensityMatrix:
    """d x d density matrix: Hermitian, unit trace, spectrum >= -1e-9.

    ``check_psd=False`` skips the spectral floor check at construction; it is
    used internally where positivity holds by construction (channel outputs,
    convex mixtures, Gram-matrix samples).  The floor is still enforced the
    first time the spectrum is actually computed.
    """

    matrix: np.ndarray
    check_psd: InitVar[bool] = True

    def __post_init__(self, check_psd: bool):
        m = numerics.as_square_matrix(self.matrix, "density matrix")
        scale = max(1.0, frobenius(m))
        if frobenius(m - dagger(m)) > 1e-10 * scale:
            raise ValueError("density matrix is not Hermitian within 1e-10")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > 1e-10:
            raise ValueError(f"trace {tr} is not 1 within 1e-10")
        object.__setattr__(self, "matrix", m)
        if check_psd:
            self.eigen  # noqa: B018 -- forces the spectral floor check

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def eigen(self) -> numerics.HermitianEigen:
        eig = numerics.hermitian_eigen(self.matrix)
        if eig.eigenvalues[0] < -numerics.PSD_FLOOR:
            raise NotPSDError(
                f"density matrix eigenvalue {eig.eigenvalues[0]:.3e} below -1e-9"
            )
        return eig

    @cached_property
    def purity(self) -> float:
        """tr(rho^2), real part."""
        return float(np.vdot(self.matrix, self.matrix).real)

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.matrix).real

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "kind": "density",
            "re": self.matrix.real.reshape(-1).tolist(),
            "im": self.matrix.imag.reshape(-1).tolist(),
        }


def from_pure(psi: PureState) -> DensityMatrix:
    """Rank-1 projector |psi><psi|."""
    amp = psi.amplitudes
    return DensityMatrix(np.outer(amp, amp.conj()), check_psd=False)


def dephase(rho: DensityMatrix) -> DensityMatrix:
    """Project onto the diagonal (the incoherent set); idempotent and trace preserving."""
    return DensityMatrix(np.diag(np.diag(rho.matrix)), check_psd=False)


def off_diagonal_mass(rho: DensityMatrix) -> float:
    """Entrywise l1 mass of the off-diagonal part."""
    m = np.abs(rho.matrix)
    return float(m.sum() - np.trace(m))


def is_incoherent(rho: DensityMatrix, tol: float = INCOHERENCE_TOL) -> bool:
    """True iff the summed off-diagonal moduli do not exceed tol."""
    return bool(off_diagonal_mass(rho) <= tol)


def random_pure(dim: int, seed) -> PureState:
    """Haar-random pure state: normalized standard complex Gaussian vector."""
    if dim < 2:
        raise BadDimError("dim must be >= 2")
    rng = np.random.default_rng(seed)
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState(vec / np.linalg.norm(vec))


def random_density(dim: int, rank: int, seed) -> DensityMatrix:
    """Random density matrix G G†/tr(G G†) with G a dim x rank complex Gaussian."""
    if not 1 <= rank <= dim:
        raise BadRankError(f"rank must be in [1, {dim}], got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    m = g @ dagger(g)
    return DensityMatrix(m / np.trace(m).real, check_psd=False)


def fidelity_pure(rho: DensityMatrix, target: PureState) -> float:
    """<target|rho|target>: closeness of rho to a pure target."""
    amp = target.amplitudes
    return float(np.vdot(amp, rho.matrix @ amp).real)


def mix(states_and_weights) -> DensityMatrix:
    """Convex combination sum_k w_k rho_k of density matrices."""
    acc = None
    for weight, rho in states_and_weights:
        term = weight * rho.matrix
        acc = term if acc is None else acc + term
    return DensityMatrix(acc, check_psd=False)


def state_from_dict(payload: dict):
    """Parse the JSON state format back into PureState or DensityMatrix.

    ``{"dim": d, "kind": "pure"|"density", "re": [...], "im": [...]}``,
    density matrices flattened row-major.  Parsing re-runs full validation.
    """
    try:
        dim = int(payload["dim"])
        kind = payload["kind"]
        re = np.asarray(payload["re"], dtype=np.float64).reshape(-1)
        im = np.asarray(payload["im"], dtype=np.float64).reshape(-1)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state payload: {exc}") from exc
    if re.size != im.size:
        raise ValueError(f"re/im length mismatch: {re.size} vs {im.size}")
    data = re + 1j * im
    if kind == "pure":
        if data.size != dim:
            raise ValueError(f"pure state needs {dim} amplitudes, got {data.size}")
        return PureState(data)
    if kind == "density":
        if data.size != dim * dim:
            raise ValueError(f"density matrix needs {dim * dim} entries, got {data.size}")
        return DensityMatrix(data.reshape(dim, dim))
    raise ValueError(f"unknown state kind {kind!r}")
