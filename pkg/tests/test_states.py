import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coherence_lab import states
from coherence_lab.errors import BadDimError, BadRankError, NotNormalizedError
from coherence_lab.states import (
    DensityMatrix,
    PureState,
    basis_state,
    dephase,
    fidelity_pure,
    from_pure,
    is_incoherent,
    random_density,
    random_pure,
    state_from_dict,
)


def test_from_pure_basis_state():
    rho = from_pure(basis_state(2, 0))
    np.testing.assert_allclose(rho.matrix, np.diag([1.0, 0.0]), atol=0)


def test_from_pure_plus_state():
    plus = PureState(np.array([1.0, 1.0]) / np.sqrt(2))
    rho = from_pure(plus)
    np.testing.assert_allclose(rho.matrix, np.full((2, 2), 0.5), atol=1e-15)


def test_from_pure_circular_state():
    psi = PureState(np.array([1.0, 1j]) / np.sqrt(2))
    rho = from_pure(psi)
    np.testing.assert_allclose(np.diag(rho.matrix), [0.5, 0.5], atol=1e-15)
    np.testing.assert_allclose(rho.matrix[0, 1], -0.5j, atol=1e-15)
    np.testing.assert_allclose(rho.matrix[1, 0], 0.5j, atol=1e-15)


def test_pure_state_requires_normalization():
    with pytest.raises(NotNormalizedError):
        PureState(np.array([1.0, 1.0]))


def test_phase_quotient_equality():
    psi = random_pure(3, 5)
    rotated = PureState(np.exp(1j * 0.7) * psi.amplitudes)
    assert psi == rotated
    assert psi != random_pure(3, 6)


def test_dephase_kills_off_diagonals():
    rho = from_pure(PureState(np.array([1.0, 1.0]) / np.sqrt(2)))
    np.testing.assert_allclose(dephase(rho).matrix, np.diag([0.5, 0.5]), atol=1e-15)


def test_dephase_idempotent_exactly():
    rho = random_density(4, 3, 9)
    once = dephase(rho)
    twice = dephase(once)
    assert np.array_equal(once.matrix, twice.matrix)


def test_dephase_uniform_superposition():
    amp = np.ones(3, dtype=complex) / np.sqrt(3)
    rho = dephase(from_pure(PureState(amp)))
    np.testing.assert_allclose(rho.matrix, np.eye(3) / 3, atol=1e-15)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9), dim=st.integers(2, 6))
def test_dephase_output_is_incoherent(seed, dim):
    rho = random_density(dim, dim, seed)
    deph = dephase(rho)
    assert is_incoherent(deph, 1e-9)
    assert np.array_equal(deph.matrix, dephase(deph).matrix)
    np.testing.assert_allclose(deph.diagonal, rho.diagonal, atol=0)


def test_is_incoherent_examples():
    assert is_incoherent(DensityMatrix(np.diag([0.3, 0.7])), 1e-9)
    plus = from_pure(PureState(np.array([1.0, 1.0]) / np.sqrt(2)))
    assert not is_incoherent(plus, 1e-9)


def test_random_pure_deterministic_and_normalized():
    a = random_pure(3, 123)
    b = random_pure(3, 123)
    assert np.array_equal(a.amplitudes, b.amplitudes)
    assert abs(np.linalg.norm(a.amplitudes) - 1.0) <= 1e-12
    with pytest.raises(BadDimError):
        random_pure(1, 0)


def test_random_pure_haar_first_moment():
    # Monte Carlo oracle: Haar average of |<0|psi>|^2 in d=2 is 1/2.
    total = 0.0
    n = 10_000
    for i in range(n):
        total += abs(random_pure(2, [777, i]).amplitudes[0]) ** 2
    assert abs(total / n - 0.5) <= 0.02


def test_random_density_ranks_and_determinism():
    pure = random_density(4, 1, 6)
    assert abs(pure.purity - 1.0) <= 1e-10
    full = random_density(4, 4, 6)
    assert abs(np.trace(full.matrix).real - 1.0) <= 1e-12
    assert np.all(full.eigen.eigenvalues > 0)
    again = random_density(4, 4, 6)
    assert np.array_equal(full.matrix, again.matrix)
    with pytest.raises(BadRankError):
        random_density(3, 4, 0)


def test_density_matrix_validation():
    with pytest.raises(ValueError):
        DensityMatrix(np.diag([0.6, 0.6]))  # trace 1.2
    with pytest.raises(ValueError):
        DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))  # not Hermitian


def test_state_json_round_trip():
    psi = random_pure(3, 11)
    back = state_from_dict(psi.to_dict())
    assert isinstance(back, PureState)
    assert np.array_equal(psi.amplitudes, back.amplitudes)

    rho = random_density(3, 2, 11)
    back_rho = state_from_dict(rho.to_dict())
    assert isinstance(back_rho, DensityMatrix)
    assert np.array_equal(rho.matrix, back_rho.matrix)


def test_state_from_dict_rejects_garbage():
    with pytest.raises(ValueError):
        state_from_dict({"dim": 2, "kind": "pure", "re": [1.0], "im": [0.0, 0.0]})
    with pytest.raises(ValueError):
        state_from_dict({"dim": 2, "kind": "other", "re": [1, 0], "im": [0, 0]})


def test_fidelity_pure():
    psi = random_pure(4, 2)
    assert abs(fidelity_pure(from_pure(psi), psi) - 1.0) <= 1e-12
    other = basis_state(4, 0)
    assert fidelity_pure(from_pure(other), psi) == pytest.approx(abs(psi.amplitudes[0]) ** 2)


def test_off_diagonal_mass():
    rho = DensityMatrix(np.array([[0.5, 0.25], [0.25, 0.5]]))
    assert states.off_diagonal_mass(rho) == pytest.approx(0.5, abs=1e-15)
