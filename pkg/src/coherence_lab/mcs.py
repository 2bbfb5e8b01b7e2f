"""Maximally coherent states and the channels that spend them.

The maximally coherent states are exactly the pure states with uniform
amplitude moduli 1/sqrt(d); from any of them, every same-dimension state
can be prepared deterministically with incoherent operations alone.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .channels import KrausChannel
from .errors import BadDimError
from .states import DensityMatrix, PureState

_TWO_PI = 2.0 * np.pi


def uniform_superposition(dim: int) -> PureState:
    """The all-phases-zero maximally coherent state (1/sqrt(d)) sum_j |j>."""
    if dim < 2:
        raise BadDimError("dim must be >= 2")
    return PureState(np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128))


@dataclasses.dataclass(frozen=True)
class McsDescriptor:
    """Phase vector of a maximally coherent state, gauge-fixed to phases[0] = 0."""

    dim: int
    phases: tuple

    def __post_init__(self):
        if self.dim < 2:
            raise BadDimError("dim must be >= 2")
        phases = np.asarray(self.phases, dtype=np.float64).reshape(-1)
        if phases.size != self.dim:
            raise BadDimError(f"need {self.dim} phases, got {phases.size}")
        phases = np.mod(phases - phases[0], _TWO_PI)
        object.__setattr__(self, "phases", tuple(float(t) for t in phases))

    def realize(self) -> PureState:
        amp = np.exp(1j * np.array(self.phases)) / np.sqrt(self.dim)
        return PureState(amp)

    @classmethod
    def from_state(cls, psi: PureState, tol: float = 1e-10) -> "McsDescriptor":
        """Extract phases from a uniform-modulus state; BadDimError if moduli aren't 1/sqrt(d)."""
        mags = np.abs(psi.amplitudes)
        if np.max(np.abs(mags - 1.0 / np.sqrt(psi.dim))) > tol:
            raise BadDimError("state does not have uniform amplitude moduli")
        return cls(dim=psi.dim, phases=tuple(np.angle(psi.amplitudes)))


def mcs_deviation(rho: DensityMatrix) -> float:
    """How far rho is from the maximally coherent set: max of the purity
    defect 1 - tr(rho^2) and the largest diagonal deviation from 1/d."""
    diag_dev = float(np.max(np.abs(rho.diagonal - 1.0 / rho.dim)))
    return max(1.0 - rho.purity, diag_dev)


def is_mcs(rho: DensityMatrix, tol: float = 1e-8) -> bool:
    """True iff rho is pure within tol and has uniform diagonal within tol."""
    if 1.0 - rho.purity > tol:  # cheap reject before touching the diagonal
        return False
    return bool(float(np.max(np.abs(rho.diagonal - 1.0 / rho.dim))) <= tol)


def mcs_sample(dim: int, seed) -> PureState:
    """Random maximally coherent state: uniform phases, first fixed to zero."""
    if dim < 2:
        raise BadDimError("dim must be >= 2")
    rng = np.random.default_rng(seed)
    phases = np.concatenate(([0.0], rng.uniform(0.0, _TWO_PI, dim - 1)))
    return McsDescriptor(dim=dim, phases=tuple(phases)).realize()


def transform_mcs_to(target: PureState) -> KrausChannel:
    """Incoherent channel mapping the uniform superposition to ``target``.

    Kraus operator n routes column (j + n) mod d to row j with the target's
    j-th amplitude.  Every measurement branch on the uniform superposition
    lands on the target with probability 1/d, so the conversion is
    deterministic; the cyclic column maps make the completeness relation hold
    exactly.
    """
    d = target.dim
    amp = target.amplitudes
    rows = np.arange(d)
    ops = []
    for n in range(d):
        k = np.zeros((d, d), dtype=np.complex128)
        k[rows, (rows + n) % d] = amp
        ops.append(k)
    return KrausChannel(tuple(ops))


def transform_mcs_to_mixed(target: DensityMatrix) -> KrausChannel:
    """Incoherent channel mapping the uniform superposition to a mixed target.

    Convex combination of the pure-target channels over the target's
    eigendecomposition: Kraus set {sqrt(q_k) K_n^(k)}.  Eigenvalues below
    1e-12 are dropped and the remainder renormalized, keeping completeness
    exact.
    """
    eig = target.eigen
    keep = eig.eigenvalues > 1e-12
    q = eig.eigenvalues[keep]
    q = q / q.sum()
    ops = []
    for weight, col in zip(q, np.nonzero(keep)[0]):
        vec = eig.eigenvectors[:, col]
        sub = transform_mcs_to(PureState(vec / np.linalg.norm(vec)))
        ops.extend(np.sqrt(weight) * k for k in sub.kraus)
    return KrausChannel(tuple(ops))
