"""Coherence measures behind a uniform name/evaluate interface.

Implemented measures:

* ``l1`` -- summed moduli of the off-diagonal entries.
* ``rel_ent`` -- entropy of the dephased state minus entropy of the state,
  in bits.
* ``int_rand`` -- intrinsic randomness: equals ``rel_ent`` on pure states,
  and the convex roof (minimum ensemble average of the pure-state value)
  on mixed states, estimated by a restart + local-refinement optimizer.
  The optimizer yields an upper bound on the true roof.
* ``skew`` -- the skew information -1/2 tr([sqrt(rho), K]^2) for a
  nondegenerate diagonal observable K.  A valid quantifier in dimension 2
  only; for d >= 3 it fails monotonicity, which the harness exploits.
* ``trivial`` -- the pathological 0/1 indicator of coherence.  Satisfies
  the four standard criteria yet assigns the maximal value to every
  coherent state, which is exactly what the maximal-value criterion
  is designed to exclude.

Entropies use base-2 logarithms throughout, with 0 log 0 = 0 and a 1e-15
floor inside logs.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Callable, Optional

import numpy as np

from . import numerics, states
from .errors import BadParamsError, DimMismatchError, OptimizerFailedError
from .states import DensityMatrix, PureState, from_pure, is_incoherent, off_diagonal_mass

_LOG_FLOOR = 1e-15

# Eigenvalues below this are treated as absent when building ensembles.
_RANK_TOL = 1e-12


def shannon_entropy(probs: np.ndarray) -> float:
    """Base-2 entropy with the 0 log 0 = 0 convention."""
    p = np.asarray(probs, dtype=np.float64)
    p = p[p > 0.0]
    return float(-(p * np.log2(np.maximum(p, _LOG_FLOOR))).sum())


@dataclasses.dataclass(frozen=True)
class DiagonalObservable:
    """Diagonal observable with pairwise-distinct entries (minimum gap 1e-6)."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64).reshape(-1)
        gaps = np.abs(v[:, None] - v[None, :])[~np.eye(v.size, dtype=bool)]
        if v.size > 1 and gaps.min() < 1e-6:
            raise BadParamsError("observable values must be pairwise distinct (gap >= 1e-6)")
        object.__setattr__(self, "values", v)

    @property
    def dim(self) -> int:
        return self.values.size


def default_observable(dim: int) -> DiagonalObservable:
    """K = diag(0, 1, ..., d-1), the test default."""
    return DiagonalObservable(np.arange(dim, dtype=np.float64))


@dataclasses.dataclass(frozen=True)
class OptimizerConfig:
    """Knobs for the convex-roof estimator."""

    restarts: int = 32
    max_iterations: int = 500
    step_tol: float = 1e-8
    seed: int = 0


@dataclasses.dataclass(frozen=True, eq=False)
class Ensemble:
    """Pure-state decomposition sum_k weights[k] |states[k]><states[k]|."""

    weights: np.ndarray
    states: tuple

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        if abs(w.sum() - 1.0) > 1e-10:
            raise BadParamsError(f"ensemble weights sum to {w.sum()}, not 1")
        if w.size != len(self.states):
            raise BadParamsError("one weight per state required")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "states", tuple(self.states))

    def reconstruction(self) -> np.ndarray:
        acc = np.zeros((self.states[0].dim, self.states[0].dim), dtype=np.complex128)
        for w, psi in zip(self.weights, self.states):
            acc += w * np.outer(psi.amplitudes, psi.amplitudes.conj())
        return acc

    def average_rel_ent(self) -> float:
        return float(
            sum(w * rel_ent_pure(psi) for w, psi in zip(self.weights, self.states))
        )


# ---------------------------------------------------------------------------
# the measures
# ---------------------------------------------------------------------------


def c_l1(rho: DensityMatrix) -> float:
    """Off-diagonal l1 mass; ranges from 0 (incoherent) to d-1."""
    return off_diagonal_mass(rho)


def l1_pure(psi: PureState) -> float:
    a = np.abs(psi.amplitudes)
    return float(a.sum() ** 2 - (a**2).sum())


def c_rel_ent(rho: DensityMatrix) -> float:
    """Entropy gained by dephasing: H(diag) - H(spectrum), in bits."""
    return shannon_entropy(rho.diagonal) - shannon_entropy(rho.eigen.eigenvalues)


def rel_ent_pure(psi: PureState) -> float:
    return shannon_entropy(np.abs(psi.amplitudes) ** 2)


def c_trivial(rho: DensityMatrix) -> float:
    """0 on incoherent states, 1 on everything else."""
    return 0.0 if is_incoherent(rho, states.INCOHERENCE_TOL) else 1.0


def trivial_pure(psi: PureState) -> float:
    return 0.0 if l1_pure(psi) <= states.INCOHERENCE_TOL else 1.0


def c_skew(rho: DensityMatrix, k: DiagonalObservable) -> float:
    """Skew information -1/2 tr([sqrt(rho), K]^2) for diagonal K."""
    if k.dim != rho.dim:
        raise DimMismatchError(f"observable dim {k.dim} != state dim {rho.dim}")
    s = numerics.psd_sqrt(rho.matrix)
    kv = k.values
    direct = float(rho.diagonal @ (kv**2))
    crossed = float(kv @ (np.abs(s) ** 2) @ kv)
    return direct - crossed


def c_skew_pure(psi: PureState, k: DiagonalObservable) -> float:
    """Closed form on pure states: 1/2 sum_{i != j} w_i w_j (k_i - k_j)^2 with w = |<i|psi>|^2."""
    if k.dim != psi.dim:
        raise DimMismatchError(f"observable dim {k.dim} != state dim {psi.dim}")
    w = np.abs(psi.amplitudes) ** 2
    diff = k.values[:, None] - k.values[None, :]
    return float(0.5 * (w @ (diff**2) @ w))


# ---------------------------------------------------------------------------
# intrinsic randomness: convex roof of the pure-state relative entropy
# ---------------------------------------------------------------------------


def _pure_branch(rho: DensityMatrix) -> bool:
    return rho.purity >= 1.0 - 1e-10


_LN2 = np.log(2.0)


def _member_contrib(col: np.ndarray) -> float:
    """Probability-weighted pure-state value of one unnormalized member."""
    # scalar loop: members are tiny (d <= ~8) and this sits in the hot path
    p = 0.0
    acc = 0.0
    for z in col:
        a = z.real * z.real + z.imag * z.imag
        if a > _LOG_FLOOR:
            p += a
            acc += a * math.log(a)
        else:
            p += a
    if p <= _LOG_FLOOR:
        return 0.0
    return (p * math.log(p) - acc) / _LN2


def _ensemble_objective(members: np.ndarray) -> float:
    """Ensemble-averaged pure-state value for unnormalized member columns."""
    return float(sum(_member_contrib(members[:, i]) for i in range(members.shape[1])))


def _pair_rotation(t: float, phi: float):
    """Cayley image of the antisymmetric generator t e^{i phi} on a row pair."""
    a = t * complex(math.cos(phi), math.sin(phi))
    denom = 1.0 + t * t
    c = (1.0 - t * t) / denom
    s = 2.0 * a / denom
    return c, -s, s.conjugate(), c  # row-major 2x2


def _refine_mixer(w: np.ndarray, b: np.ndarray, cfg: OptimizerConfig, floor: float):
    """Coordinate descent over row-pair rotations of the mixing isometry.

    A rotation touches only two rows of the isometry, hence two ensemble
    members, so acceptance tests are incremental: the full objective is never
    recomputed inside the loop.  ``floor`` is the smallest step tried; the
    restart phase uses a coarse floor and only the best candidate is polished
    down to cfg.step_tol.
    """
    m = w.shape[0]
    w = w.copy()
    members = b @ w.T  # d x m; column i is the unnormalized member i
    contribs = [_member_contrib(members[:, i]) for i in range(m)]
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    passes = 0
    step = 0.5
    while step >= floor and passes < cfg.max_iterations:
        for _ in range(3):  # passes per step; improvements shrink with step^2
            improving = False
            passes += 1
            for i, j in pairs:
                base = contribs[i] + contribs[j]
                if base <= 1e-14:  # both members already incoherent
                    continue
                col_i = members[:, i]
                col_j = members[:, j]
                for phi in (0.0, 0.5 * np.pi):
                    for t in (step, -step):
                        r00, r01, r10, r11 = _pair_rotation(t, phi)
                        new_i = r00 * col_i + r01 * col_j
                        new_j = r10 * col_i + r11 * col_j
                        gain = base - _member_contrib(new_i) - _member_contrib(new_j)
                        if gain > 1e-14:
                            members[:, i] = new_i
                            members[:, j] = new_j
                            col_i = new_i
                            col_j = new_j
                            row_i = w[i, :].copy()
                            w[i, :] = r00 * row_i + r01 * w[j, :]
                            w[j, :] = r10 * row_i + r11 * w[j, :]
                            contribs[i] = _member_contrib(new_i)
                            contribs[j] = _member_contrib(new_j)
                            base = contribs[i] + contribs[j]
                            improving = True
            if sum(contribs) <= _RANK_TOL:
                return w, float(sum(contribs))
            if not improving or passes >= cfg.max_iterations:
                break
        step *= 0.5
    return w, float(sum(contribs))


def convex_roof_ensemble(
    rho: DensityMatrix, opt: Optional[OptimizerConfig] = None
) -> tuple[float, Ensemble]:
    """Best ensemble found for the intrinsic-randomness minimization.

    Ensembles are generated from the eigendecomposition mixed through an
    m x r isometry with m = d^2 members; the eigenensemble itself is always
    among the candidates, so the result never exceeds the eigendecomposition
    average.  The value is an upper bound on the exact convex roof.
    """
    opt = opt or OptimizerConfig()
    eig = rho.eigen
    keep = eig.eigenvalues > _RANK_TOL
    q = eig.eigenvalues[keep]
    q = q / q.sum()
    phi = eig.eigenvectors[:, keep]
    r = q.size
    b = phi * np.sqrt(q)  # d x r, rho = b b†

    rng = np.random.default_rng(opt.seed)
    m = rho.dim * rho.dim
    coarse = max(1e-3, opt.step_tol)

    best_w, best_val = _refine_mixer(np.eye(r, dtype=np.complex128), b, opt, coarse)

    for _ in range(opt.restarts):
        if best_val <= _RANK_TOL:
            break
        g = rng.standard_normal((m, r)) + 1j * rng.standard_normal((m, r))
        w, _ = np.linalg.qr(g)
        w, val = _refine_mixer(w, b, opt, coarse)
        if val < best_val:
            best_val, best_w = val, w

    if best_val > _RANK_TOL:  # polish the winner down to the fine step floor
        best_w, best_val = _refine_mixer(best_w, b, opt, opt.step_tol)

    members = b @ best_w.T
    probs = (np.abs(members) ** 2).sum(axis=0)
    kept = probs > _RANK_TOL
    weights = probs[kept] / probs[kept].sum()
    pure_states = tuple(
        PureState(members[:, i] / np.sqrt(probs[i])) for i in np.nonzero(kept)[0]
    )
    ensemble = Ensemble(weights=weights, states=pure_states)
    defect = numerics.frobenius(ensemble.reconstruction() - rho.matrix)
    if defect > 1e-9:
        raise OptimizerFailedError(f"ensemble reconstructs rho to {defect:.3e} > 1e-9")
    return best_val, ensemble


def c_int_rand(rho: DensityMatrix, opt: Optional[OptimizerConfig] = None) -> float:
    """Intrinsic randomness: rel_ent on pure states, convex-roof estimate otherwise."""
    if _pure_branch(rho):
        return c_rel_ent(rho)
    value, _ = convex_roof_ensemble(rho, opt)
    return value


# ---------------------------------------------------------------------------
# named measure registry
# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Measure:
    """Named evaluator; evaluate_pure is the fast path used by optimizers."""

    name: str
    evaluate: Callable[[DensityMatrix], float]
    evaluate_pure: Callable[[PureState], float]


MEASURE_NAMES = ("l1", "rel_ent", "int_rand", "skew", "trivial")


def measure_by_name(
    name: str,
    dim: Optional[int] = None,
    observable: Optional[DiagonalObservable] = None,
    opt: Optional[OptimizerConfig] = None,
) -> Measure:
    """Look up a measure by its wire name.

    ``skew`` needs an observable (or a dim, to get the default diag(0..d-1));
    ``int_rand`` accepts an optimizer config for its mixed-state branch.
    """
    if name == "l1":
        return Measure("l1", c_l1, l1_pure)
    if name == "rel_ent":
        return Measure("rel_ent", c_rel_ent, rel_ent_pure)
    if name == "trivial":
        return Measure("trivial", c_trivial, trivial_pure)
    if name == "int_rand":
        return Measure(
            "int_rand",
            lambda rho: c_int_rand(rho, opt),
            rel_ent_pure,
        )
    if name == "skew":
        if observable is None:
            if dim is None:
                raise BadParamsError("skew needs an observable or a dimension")
            observable = default_observable(dim)
        return Measure(
            "skew",
            lambda rho: c_skew(rho, observable),
            lambda psi: c_skew_pure(psi, observable),
        )
    raise BadParamsError(f"unknown measure {name!r}; choose from {MEASURE_NAMES}")


def evaluate_pure_consistent(measure: Measure, psi: PureState) -> float:
    """Density-matrix path of a measure on a pure state (slow reference)."""
    return measure.evaluate(from_pure(psi))
