import numpy as np
import pytest

from coherence_lab.channels import random_incoherent_unitary
from coherence_lab.errors import BadParamsError, DimMismatchError
from coherence_lab.measures import (
    DiagonalObservable,
    OptimizerConfig,
    c_int_rand,
    c_l1,
    c_rel_ent,
    c_skew,
    c_skew_pure,
    c_trivial,
    convex_roof_ensemble,
    default_observable,
    l1_pure,
    measure_by_name,
    rel_ent_pure,
    shannon_entropy,
)
from coherence_lab.mcs import uniform_superposition
from coherence_lab.states import (
    DensityMatrix,
    PureState,
    basis_state,
    dephase,
    from_pure,
    off_diagonal_mass,
    random_density,
    random_pure,
)


def state_from_weights(weights):
    return PureState(np.sqrt(np.asarray(weights, dtype=float)))


# ---------------------------------------------------------------------------
# l1
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("dim", [2, 3, 4, 5])
def test_l1_maximal_on_uniform_superposition(dim):
    rho = from_pure(uniform_superposition(dim))
    assert c_l1(rho) == pytest.approx(dim - 1, abs=1e-12)


def test_l1_zero_on_diagonal():
    assert c_l1(DensityMatrix(np.diag([0.2, 0.3, 0.5]))) == 0.0


def test_l1_hand_value():
    rho = DensityMatrix(np.array([[0.5, 0.25], [0.25, 0.5]]))
    assert c_l1(rho) == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_l1_bounded_by_dim_minus_one(dim):
    for seed in range(50):
        rho = random_density(dim, 1 + seed % dim, [50, dim, seed])
        assert c_l1(rho) <= dim - 1 + 1e-9


# ---------------------------------------------------------------------------
# relative entropy
# ---------------------------------------------------------------------------


def test_rel_ent_zero_on_diagonal():
    assert c_rel_ent(DensityMatrix(np.diag([0.25, 0.75]))) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_rel_ent_log2d_on_uniform_superposition(dim):
    # dephased state is uniform (entropy log2 d); a pure state has zero entropy
    rho = from_pure(uniform_superposition(dim))
    assert c_rel_ent(rho) == pytest.approx(np.log2(dim), abs=1e-10)


def test_rel_ent_one_bit_on_plus():
    plus = PureState(np.array([1.0, 1.0]) / np.sqrt(2))
    assert c_rel_ent(from_pure(plus)) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_rel_ent_bounded_by_log2d(dim):
    for seed in range(50):
        rho = random_density(dim, 1 + seed % dim, [51, dim, seed])
        value = c_rel_ent(rho)
        assert -1e-10 <= value <= np.log2(dim) + 1e-9


def test_shannon_entropy_conventions():
    assert shannon_entropy([1.0, 0.0]) == 0.0
    assert shannon_entropy([0.5, 0.5]) == pytest.approx(1.0, abs=1e-15)


# ---------------------------------------------------------------------------
# trivial
# ---------------------------------------------------------------------------


def test_trivial_values():
    assert c_trivial(DensityMatrix(np.diag([1 / 3, 2 / 3]))) == 0.0
    plus = from_pure(PureState(np.array([1.0, 1.0]) / np.sqrt(2)))
    assert c_trivial(plus) == 1.0
    nudged = DensityMatrix(np.array([[0.5, 1e-3], [1e-3, 0.5]]))
    assert c_trivial(nudged) == 1.0


# ---------------------------------------------------------------------------
# skew information
# ---------------------------------------------------------------------------


def test_skew_zero_on_diagonal():
    rho = DensityMatrix(np.diag([0.2, 0.5, 0.3]))
    assert c_skew(rho, default_observable(3)) == pytest.approx(0.0, abs=1e-12)


def test_skew_plus_state_quarter_gap_squared():
    plus = PureState(np.array([1.0, 1.0]) / np.sqrt(2))
    k = DiagonalObservable([0.5, 3.5])
    # single pair: w0*w1*(k0-k1)^2 = (1/4)*9
    assert c_skew(from_pure(plus), k) == pytest.approx((0.5 - 3.5) ** 2 / 4, abs=1e-10)
    assert c_skew_pure(plus, k) == pytest.approx(2.25, abs=1e-12)


def test_skew_hand_value_5_9():
    psi = state_from_weights([1 / 2, 1 / 3, 1 / 6])
    k = default_observable(3)
    # pairs: (0,1) 1/2*1/3*1 + (0,2) 1/2*1/6*4 + (1,2) 1/3*1/6*1 = 5/9
    assert c_skew(from_pure(psi), k) == pytest.approx(5 / 9, abs=1e-10)
    assert c_skew_pure(psi, k) == pytest.approx(5 / 9, abs=1e-15)


def test_skew_pure_hand_value_17_36():
    psi = state_from_weights([1 / 6, 1 / 2, 1 / 3])
    # pairs: 1/6*1/2*1 + 1/6*1/3*4 + 1/2*1/3*1 = 17/36
    assert c_skew_pure(psi, default_observable(3)) == pytest.approx(17 / 36, abs=1e-15)


def test_skew_pure_basis_state_zero():
    assert c_skew_pure(basis_state(3, 0), default_observable(3)) == 0.0


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_skew_matches_pure_formula(dim):
    k = default_observable(dim)
    for i in range(1000):
        psi = random_pure(dim, [60, dim, i])
        assert abs(c_skew(from_pure(psi), k) - c_skew_pure(psi, k)) <= 1e-9


def test_skew_dim_mismatch():
    with pytest.raises(DimMismatchError):
        c_skew(random_density(3, 1, 0), default_observable(2))


def test_observable_requires_distinct_values():
    with pytest.raises(BadParamsError):
        DiagonalObservable([1.0, 1.0 + 1e-9])


# ---------------------------------------------------------------------------
# intrinsic randomness
# ---------------------------------------------------------------------------


def test_int_rand_equals_rel_ent_on_pure():
    for dim in (2, 3, 4):
        rho = from_pure(uniform_superposition(dim))
        assert c_int_rand(rho) == c_rel_ent(rho)
        assert c_int_rand(rho) == pytest.approx(np.log2(dim), abs=1e-10)
    for i in range(20):
        rho = from_pure(random_pure(3, [70, i]))
        assert c_int_rand(rho) == c_rel_ent(rho)


def test_int_rand_zero_on_maximally_mixed():
    assert c_int_rand(DensityMatrix(np.eye(2) / 2)) <= 1e-9
    assert c_int_rand(DensityMatrix(np.eye(3) / 3)) <= 1e-9


def test_int_rand_zero_on_diagonal_mixed():
    rho = DensityMatrix(np.diag([0.5, 0.3, 0.2]))
    assert c_int_rand(rho) <= 1e-9


def test_int_rand_never_exceeds_eigendecomposition_average():
    opt = OptimizerConfig(restarts=8, seed=3)
    for i in range(10):
        rho = random_density(3, 2, [71, i])
        eig = rho.eigen
        keep = eig.eigenvalues > 1e-12
        avg = sum(
            q * rel_ent_pure(PureState(eig.eigenvectors[:, k] / np.linalg.norm(eig.eigenvectors[:, k])))
            for q, k in zip(eig.eigenvalues[keep], np.nonzero(keep)[0])
        )
        assert c_int_rand(rho, opt) <= avg + 1e-9


def test_convex_roof_ensemble_reconstructs_state():
    opt = OptimizerConfig(restarts=4, seed=1)
    rho = random_density(3, 3, 8)
    value, ensemble = convex_roof_ensemble(rho, opt)
    assert value >= -1e-12
    assert abs(ensemble.weights.sum() - 1.0) <= 1e-10
    assert np.max(np.abs(ensemble.reconstruction() - rho.matrix)) <= 1e-9


def test_convex_roof_beats_eigenbasis_when_phases_help():
    # equal mixture of two coherent states whose coherences cancel:
    # 0.5|+><+| + 0.5|-><-| = I/2 has a decomposition into incoherent states.
    plus = PureState(np.array([1.0, 1.0]) / np.sqrt(2))
    minus = PureState(np.array([1.0, -1.0]) / np.sqrt(2))
    rho = DensityMatrix(
        0.5 * np.outer(plus.amplitudes, plus.amplitudes.conj())
        + 0.5 * np.outer(minus.amplitudes, minus.amplitudes.conj())
    )
    assert c_int_rand(rho, OptimizerConfig(restarts=4, seed=0)) <= 1e-9


# ---------------------------------------------------------------------------
# shared measure properties
# ---------------------------------------------------------------------------

VALID_MEASURES = ("l1", "rel_ent", "trivial")


@pytest.mark.parametrize("name", VALID_MEASURES)
def test_c1_vanishing_iff_incoherent(name, dim=3):
    m = measure_by_name(name, dim=dim)
    for i in range(60):
        rho = random_density(dim, 1 + i % dim, [80, i])
        assert m.evaluate(dephase(rho)) <= 1e-9
        if off_diagonal_mass(rho) > 1e-3:
            assert m.evaluate(rho) > 1e-6


@pytest.mark.parametrize("name", VALID_MEASURES + ("skew",))
def test_measures_nonnegative(name, dim=3):
    m = measure_by_name(name, dim=dim)
    for i in range(40):
        rho = random_density(dim, 1 + i % dim, [81, i])
        assert m.evaluate(rho) >= -1e-12


@pytest.mark.parametrize("name", VALID_MEASURES)
def test_invariance_under_relabeling_unitaries(name, dim=3):
    m = measure_by_name(name, dim=dim)
    for i in range(60):
        rho = random_density(dim, 1 + i % dim, [82, i])
        u = random_incoherent_unitary(dim, [83, i])
        assert abs(m.evaluate(u.conjugate(rho)) - m.evaluate(rho)) <= 1e-9


def test_int_rand_invariant_on_pure_inputs():
    m = measure_by_name("int_rand", dim=3)
    for i in range(40):
        rho = from_pure(random_pure(3, [84, i]))
        u = random_incoherent_unitary(3, [85, i])
        assert abs(m.evaluate(u.conjugate(rho)) - m.evaluate(rho)) <= 1e-9


@pytest.mark.parametrize("name", VALID_MEASURES + ("skew", "int_rand"))
def test_pure_fast_path_matches_density_path(name, dim=3):
    m = measure_by_name(name, dim=dim)
    for i in range(30):
        psi = random_pure(dim, [86, i])
        assert abs(m.evaluate_pure(psi) - m.evaluate(from_pure(psi))) <= 1e-9


def test_l1_pure_identity():
    psi = random_pure(4, 1)
    a = np.abs(psi.amplitudes)
    assert l1_pure(psi) == pytest.approx(a.sum() ** 2 - 1.0, abs=1e-12)


def test_measure_by_name_rejects_unknown():
    with pytest.raises(BadParamsError):
        measure_by_name("fidelity")
    with pytest.raises(BadParamsError):
        measure_by_name("skew")  # needs observable or dim
