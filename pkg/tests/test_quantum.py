import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from varbounds.qmath import HermitianMatrix, Seed
from varbounds.quantum import (
    Observable,
    PureState,
    composite_observable,
    expectation,
    signed_projection_vector,
    transition_probabilities,
    u_vector,
    variance,
)
from varbounds.spinhalf import pauli

from conftest import random_instance

angles = st.tuples(st.floats(0, np.pi), st.floats(0, 2 * np.pi, exclude_max=True))


class TestPureState:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            PureState([1.0, 1.0])
        with pytest.raises(ValueError):
            PureState([[1.0], [0.0]])

    def test_bloch_constructor(self):
        psi = PureState.bloch(np.pi / 4, 0.0)
        assert psi.dim == 2
        assert abs(psi.amplitudes[0] - 0.923879532511287) < 1e-12


class TestObservable:
    def test_wraps_raw_matrix(self):
        A = Observable(np.diag([2.0, -1.0]))
        assert A.dim == 2
        assert np.array_equal(A.spectrum.eigenvalues, [-1.0, 2.0])

    def test_spectrum_reconstructs(self):
        A = Observable(np.array([[1.0, 1j], [-1j, 0.0]]))
        V, w = A.spectrum.eigenvectors, A.spectrum.eigenvalues
        assert np.linalg.norm(A.matrix - (V * w) @ V.conj().T) < 1e-12


class TestMoments:
    def test_expectation_eigenstate(self, ket0):
        assert expectation(pauli(3), ket0) == pytest.approx(1.0, abs=1e-15)

    def test_expectation_bloch(self):
        psi = PureState.bloch(np.pi / 4, 0.0)
        assert expectation(pauli(1), psi) == pytest.approx(0.707106781186548, abs=1e-12)

    def test_expectation_pauli2_real_amplitudes(self):
        psi = PureState.bloch(1.1, 0.0)
        assert expectation(pauli(2), psi) == pytest.approx(0.0, abs=1e-15)

    def test_variance_examples(self, ket0):
        psi = PureState.bloch(np.pi / 4, 0.0)
        assert variance(pauli(3), ket0) == pytest.approx(0.0, abs=1e-15)
        assert variance(pauli(1), psi) == pytest.approx(0.5, abs=1e-12)
        assert variance(pauli(2), psi) == pytest.approx(1.0, abs=1e-12)

    def test_dimension_mismatch(self, ket0):
        wrong = Observable(np.eye(3))
        for op in (expectation, variance, transition_probabilities,
                   u_vector, signed_projection_vector):
            with pytest.raises(ValueError):
                op(wrong, ket0)


class TestTransitionProbabilities:
    def test_eigenstate(self, ket0):
        F = transition_probabilities(pauli(3), ket0)
        assert np.allclose(F, [0.0, 1.0], atol=1e-15)

    def test_unbiased_basis(self, ket0):
        F = transition_probabilities(pauli(1), ket0)
        assert np.allclose(F, [0.5, 0.5], atol=1e-12)

    def test_bloch_quarter(self):
        F = transition_probabilities(pauli(3), PureState.bloch(np.pi / 4, 0.0))
        assert F[0] == pytest.approx(0.146446609406726, abs=1e-12)
        assert F[1] == pytest.approx(0.853553390593274, abs=1e-12)

    @given(st.integers(0, 2**32))
    def test_sums_to_one(self, seed):
        obs, psi = random_instance(seed, dim=4, n=1)
        assert abs(transition_probabilities(obs[0], psi).sum() - 1.0) <= 1e-12


class TestProjectionVectors:
    def test_u_vector_examples(self, ket0):
        psi = PureState.bloch(np.pi / 4, 0.0)
        u = u_vector(pauli(3), psi)
        assert np.allclose(u, [0.270598050073099, 0.653281482438188], atol=1e-12)
        assert np.allclose(u_vector(pauli(3), ket0), [0.0, 0.0], atol=1e-15)
        assert np.allclose(
            u_vector(pauli(2), psi), [0.707106781186547] * 2, atol=1e-12
        )

    def test_signed_examples(self, ket0):
        psi = PureState.bloch(2 * np.pi / 3, 0.0)
        v = signed_projection_vector(pauli(1), psi)
        assert np.allclose(v, [-0.482962913144534, 0.12940952255126], atol=1e-12)
        w = signed_projection_vector(pauli(3), psi)
        assert np.allclose(w, [-0.433012701892219, 0.75], atol=1e-12)
        assert np.allclose(signed_projection_vector(pauli(3), ket0), [0.0, 0.0], atol=1e-15)

    @given(st.integers(0, 2**32), st.integers(2, 6))
    def test_sorted_and_square_sums(self, seed, dim):
        obs, psi = random_instance(seed, dim=dim, n=1)
        u = u_vector(obs[0], psi)
        v = signed_projection_vector(obs[0], psi)
        var = variance(obs[0], psi)
        assert np.all(np.diff(u) >= 0) and np.all(u >= 0)
        assert np.all(np.diff(v) >= 0)
        assert abs(np.sum(u * u) - var) <= 1e-12 * max(1.0, var)
        assert abs(np.sum(v * v) - var) <= 1e-12 * max(1.0, var)

    @given(st.integers(0, 2**32), st.integers(2, 5))
    def test_moment_consistency_spectral_vs_matrix(self, seed, dim):
        obs, psi = random_instance(seed, dim=dim, n=1)
        A = obs[0]
        F = transition_probabilities(A, psi)
        a = A.spectrum.eigenvalues
        mean = expectation(A, psi)
        assert abs(F @ a - mean) <= 1e-12 * max(1.0, abs(mean))
        var = variance(A, psi)
        assert abs(F @ (a - mean) ** 2 - var) <= 1e-12 * max(1.0, var)

    @given(st.integers(0, 2**32), st.floats(-3, 3))
    def test_shift_invariance(self, seed, c):
        obs, psi = random_instance(seed, dim=3, n=1)
        A = obs[0]
        shifted = Observable(HermitianMatrix(A.matrix + c * np.eye(3)))
        assert abs(variance(A, psi) - variance(shifted, psi)) <= 1e-12
        assert np.allclose(u_vector(A, psi), u_vector(shifted, psi), atol=1e-12)
        assert np.allclose(
            signed_projection_vector(A, psi),
            signed_projection_vector(shifted, psi),
            atol=1e-12,
        )

    @given(angles)
    def test_qubit_variance_identity(self, angs):
        psi = PureState.bloch(*angs)
        total = sum(variance(pauli(i), psi) for i in (1, 2, 3))
        assert abs(total - 2.0) <= 1e-12


class TestComposite:
    def test_pauli_sum_eigenvalues(self):
        comp = composite_observable([(1.0, pauli(i)) for i in (1, 2, 3)])
        assert np.allclose(
            comp.spectrum.eigenvalues, [-1.73205080756888, 1.73205080756888], atol=1e-12
        )

    def test_pauli_difference_eigenvalues(self):
        comp = composite_observable([(1.0, pauli(1)), (-1.0, pauli(2))])
        assert np.allclose(
            comp.spectrum.eigenvalues, [-1.4142135623731, 1.4142135623731], atol=1e-12
        )

    def test_zero_coefficient(self):
        comp = composite_observable([(0.0, pauli(1))])
        assert np.array_equal(comp.matrix, np.zeros((2, 2)))
        assert np.array_equal(comp.spectrum.eigenvalues, [0.0, 0.0])

    def test_errors(self):
        with pytest.raises(ValueError):
            composite_observable([])
        with pytest.raises(ValueError):
            composite_observable([(1.0, pauli(1)), (1.0, Observable(np.eye(3)))])
