"""States, observables, moments and the sorted projection vectors.

Every lower bound in this package is built from two ingredients computed
here: the transition probabilities F_k = |<psi|a_k>|^2 of a state against
an observable's eigenbasis, and the centered-eigenvalue projections
(a_k - <A>) * sqrt(F_k).  Sorting the latter (with or without absolute
value) gives the two kinds of rank-paired vectors the bounds consume.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .qmath import HermitianMatrix, SpectralData, bloch_state, hermitian_eigendecompose

__all__ = [
    "Observable",
    "PureState",
    "composite_observable",
    "expectation",
    "signed_projection_vector",
    "transition_probabilities",
    "u_vector",
    "variance",
]

NORM_ATOL = 1e-12
VARIANCE_CLAMP = 1e-12


class PureState:
    """Unit-norm complex amplitude vector."""

    __slots__ = ("amplitudes", "dim")

    def __init__(self, amplitudes):
        v = np.array(amplitudes, dtype=complex)
        if v.ndim != 1 or v.size == 0:
            raise ValueError(f"state must be a nonempty 1-d vector, got shape {v.shape}")
        norm = np.linalg.norm(v)
        if abs(norm - 1.0) > NORM_ATOL:
            raise ValueError(f"state norm {norm} is not 1 within {NORM_ATOL:g}")
        v.setflags(write=False)
        self.amplitudes = v
        self.dim = v.size

    @classmethod
    def bloch(cls, theta: float, phi: float) -> "PureState":
        """Pure qubit state at polar angle ``theta``, azimuth ``phi``."""
        return cls(bloch_state(theta, phi))

    def __repr__(self):
        return f"PureState(dim={self.dim})"


class Observable:
    """Hermitian observable carrying its eigendecomposition.

    The spectrum is computed once at construction; bounds read it many
    times per evaluation, so there is no lazy path.
    """

    __slots__ = ("hermitian", "spectrum")

    def __init__(self, matrix):
        if not isinstance(matrix, HermitianMatrix):
            matrix = HermitianMatrix(matrix)
        self.hermitian: HermitianMatrix = matrix
        self.spectrum: SpectralData = hermitian_eigendecompose(matrix)

    @property
    def matrix(self) -> np.ndarray:
        return self.hermitian.matrix

    @property
    def dim(self) -> int:
        return self.hermitian.dim

    def __repr__(self):
        return f"Observable(dim={self.dim})"


def _check_dims(A: Observable, psi: PureState) -> None:
    if A.dim != psi.dim:
        raise ValueError(f"dimension mismatch: observable dim {A.dim}, state dim {psi.dim}")


def expectation(A: Observable, psi: PureState) -> float:
    """<psi|A|psi>; the (roundoff-level) imaginary residue is discarded."""
    _check_dims(A, psi)
    return float(np.vdot(psi.amplitudes, A.matrix @ psi.amplitudes).real)


def variance(A: Observable, psi: PureState) -> float:
    """<A^2> - <A>^2 via matrix products.

    Raw values in (-1e-12, 0) are roundoff and clamp to 0; anything more
    negative indicates inconsistent inputs and raises.
    """
    _check_dims(A, psi)
    w = A.matrix @ psi.amplitudes
    second = float(np.vdot(w, w).real)
    mean = float(np.vdot(psi.amplitudes, w).real)
    raw = second - mean * mean
    if raw < 0.0:
        if raw <= -VARIANCE_CLAMP:
            raise ArithmeticError(f"variance {raw} below -{VARIANCE_CLAMP:g}; inputs inconsistent")
        return 0.0
    return raw


def transition_probabilities(A: Observable, psi: PureState) -> np.ndarray:
    """F_k = |<psi|a_k>|^2 in the observable's spectrum order (sums to 1)."""
    _check_dims(A, psi)
    return np.abs(psi.amplitudes.conj() @ A.spectrum.eigenvectors) ** 2


def u_vector(A: Observable, psi: PureState) -> np.ndarray:
    """Ascending |a_k - <A>| * sqrt(F_k); the squares sum to the variance."""
    _check_dims(A, psi)
    mean = expectation(A, psi)
    F = transition_probabilities(A, psi)
    return np.sort(np.abs(A.spectrum.eigenvalues - mean) * np.sqrt(F), kind="stable")


def signed_projection_vector(A: Observable, psi: PureState) -> np.ndarray:
    """Ascending signed (a_k - <A>) * sqrt(F_k); squares sum to the variance."""
    _check_dims(A, psi)
    mean = expectation(A, psi)
    F = transition_probabilities(A, psi)
    return np.sort((A.spectrum.eigenvalues - mean) * np.sqrt(F), kind="stable")


def composite_observable(terms: Sequence[tuple[float, Observable]]) -> Observable:
    """Observable for sum(c_i * A_i), with a fresh eigendecomposition."""
    terms = list(terms)
    if not terms:
        raise ValueError("composite_observable needs at least one term")
    dim = terms[0][1].dim
    total = np.zeros((dim, dim), dtype=complex)
    for coeff, obs in terms:
        if obs.dim != dim:
            raise ValueError(f"dimension mismatch in composite: {obs.dim} vs {dim}")
        total += float(coeff) * obs.matrix
    return Observable(HermitianMatrix(total))
