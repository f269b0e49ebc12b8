"""Dense complex linear algebra for small Hermitian problems.

The eigensolver is a cyclic Jacobi iteration with complex plane rotations.
It is self-contained, deterministic (fixed sweep order, no pivot search)
and accurate for the matrix sizes this package deals with (dim <= 16).
Random instances come from a counter-based generator (Philox) so that any
task can derive its own independent, reproducible stream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

__all__ = [
    "ConvergenceError",
    "HermitianMatrix",
    "Seed",
    "SpectralData",
    "bloch_state",
    "commutator",
    "hermitian_eigendecompose",
    "random_hermitian",
    "random_pure_state",
]

HERMITICITY_ATOL = 1e-12
MAX_RANDOM_DIM = 16

_JACOBI_TOL_FACTOR = 1e-13
_JACOBI_MAX_SWEEPS = 100

_U64 = 2**64


class ConvergenceError(RuntimeError):
    """The Jacobi sweep limit was exceeded before reaching the threshold."""


@dataclass(frozen=True)
class Seed:
    """64-bit master seed.

    Independent sub-streams are derived with :meth:`mix` (one splitmix64
    step per task index), so concurrent tasks never share a stream and the
    whole run is reproducible from a single integer.
    """

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or not 0 <= self.value < _U64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.value!r}")

    def mix(self, index: int) -> "Seed":
        """Return the sub-seed for task number ``index`` (deterministic)."""
        z = (self.value + (index + 1) * 0x9E3779B97F4A7C15) % _U64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) % _U64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) % _U64
        return Seed(z ^ (z >> 31))

    def generator(self) -> np.random.Generator:
        """Counter-based (Philox) generator keyed by this seed."""
        return np.random.Generator(np.random.Philox(key=self.value))


class HermitianMatrix:
    """Validated Hermitian matrix.

    Construction rejects entries that differ from the conjugate transpose
    by more than ``1e-12`` (absolute, per entry) and then symmetrizes via
    (M + M^dagger)/2, so downstream code can rely on exact Hermiticity.
    """

    __slots__ = ("matrix", "dim")

    def __init__(self, entries):
        M = np.asarray(entries, dtype=complex)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {M.shape}")
        if M.shape[0] == 0:
            raise ValueError("matrix dimension must be >= 1")
        if not np.all(np.isfinite(M)):
            raise ValueError("matrix entries must be finite")
        if np.max(np.abs(M - M.conj().T)) > HERMITICITY_ATOL:
            raise ValueError(f"matrix is not Hermitian within {HERMITICITY_ATOL:g}")
        M = (M + M.conj().T) / 2.0
        M.setflags(write=False)
        self.matrix = M
        self.dim = M.shape[0]

    def __repr__(self):
        return f"HermitianMatrix(dim={self.dim})"


@dataclass(frozen=True)
class SpectralData:
    """Eigendecomposition: ascending real eigenvalues, orthonormal columns.

    Column ``k`` of ``eigenvectors`` belongs to ``eigenvalues[k]``.  Ties
    keep the solver's emission order (stable sort), which makes the chosen
    basis inside a degenerate cluster deterministic albeit arbitrary.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@numba.njit(cache=True)
def _jacobi_kernel(A, tol, max_sweeps):  # pragma: no cover - exercised via wrapper
    n = A.shape[0]
    V = np.eye(n, dtype=np.complex128)
    converged = False
    for sweep in range(max_sweeps + 1):
        off2 = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off2 += abs(A[i, j]) ** 2
        if np.sqrt(off2) <= tol:
            converged = True
            break
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = A[p, q]
                ab = abs(b)
                if ab == 0.0:
                    continue
                alpha = b / ab
                diff = A[q, q].real - A[p, p].real
                # Small pivots: linear approximation avoids overflow in tau.
                if ab < abs(diff) * 1e-36:
                    t = ab / diff
                else:
                    tau = diff / (2.0 * ab)
                    if tau >= 0.0:
                        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                    else:
                        t = 1.0 / (tau - np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ca = alpha * c
                sa = alpha * s
                for i in range(n):
                    ap = A[i, p]
                    aq = A[i, q]
                    A[i, p] = ca * ap - s * aq
                    A[i, q] = sa * ap + c * aq
                cac = np.conj(ca)
                sac = np.conj(sa)
                for j in range(n):
                    ap = A[p, j]
                    aq = A[q, j]
                    A[p, j] = cac * ap - s * aq
                    A[q, j] = sac * ap + c * aq
                A[p, p] = complex(A[p, p].real, 0.0)
                A[q, q] = complex(A[q, q].real, 0.0)
                A[p, q] = 0.0
                A[q, p] = 0.0
                for i in range(n):
                    vp = V[i, p]
                    vq = V[i, q]
                    V[i, p] = ca * vp - s * vq
                    V[i, q] = sa * vp + c * vq
    w = np.empty(n, dtype=np.float64)
    for i in range(n):
        w[i] = A[i, i].real
    return w, V, converged


def hermitian_eigendecompose(M: HermitianMatrix) -> SpectralData:
    """Diagonalize a Hermitian matrix with cyclic Jacobi rotations.

    Sweeps run in fixed row-cyclic order until the off-diagonal Frobenius
    norm drops below ``1e-13 * ||M||_F`` (hard cap: 100 sweeps).  The
    output is deterministic for identical input.

    Raises
    ------
    ConvergenceError
        If the sweep limit is exceeded (does not happen for dim <= 16).
    """
    A = np.array(M.matrix, dtype=np.complex128)
    n = A.shape[0]
    fro = np.linalg.norm(A)
    if n == 1 or fro == 0.0:
        w = A.diagonal().real.copy()
        return _spectral(w, np.eye(n, dtype=complex))
    w, V, converged = _jacobi_kernel(A, _JACOBI_TOL_FACTOR * fro, _JACOBI_MAX_SWEEPS)
    if not converged:
        raise ConvergenceError(
            f"cyclic Jacobi did not converge within {_JACOBI_MAX_SWEEPS} sweeps (dim {n})"
        )
    order = np.argsort(w, kind="stable")
    return _spectral(w[order], np.ascontiguousarray(V[:, order]))


def _spectral(w: np.ndarray, V: np.ndarray) -> SpectralData:
    w.setflags(write=False)
    V.setflags(write=False)
    return SpectralData(eigenvalues=w, eigenvectors=V)


def bloch_state(theta: float, phi: float) -> np.ndarray:
    """Qubit state (cos(theta/2), e^{i phi} sin(theta/2)) on the Bloch sphere.

    ``theta`` must lie in [0, pi] and ``phi`` in [0, 2*pi).
    """
    if not 0.0 <= theta <= np.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if not 0.0 <= phi < 2.0 * np.pi:
        raise ValueError(f"phi must lie in [0, 2*pi), got {phi}")
    return np.array([np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0)])


def commutator(A: HermitianMatrix, B: HermitianMatrix) -> np.ndarray:
    """AB - BA (anti-Hermitian for Hermitian inputs)."""
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")
    return A.matrix @ B.matrix - B.matrix @ A.matrix


def _check_random_dim(dim: int) -> None:
    if not 1 <= dim <= MAX_RANDOM_DIM:
        raise ValueError(f"dim must lie in [1, {MAX_RANDOM_DIM}], got {dim}")


def random_hermitian(seed: Seed, dim: int) -> HermitianMatrix:
    """Gaussian Hermitian matrix (G + G^dagger)/2, deterministic per seed."""
    _check_random_dim(dim)
    rng = seed.generator()
    G = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return HermitianMatrix((G + G.conj().T) / 2.0)


def random_pure_state(seed: Seed, dim: int) -> np.ndarray:
    """Haar-random state direction: normalized complex Gaussian vector.

    A zero draw (probability zero, but possible in principle) retries with
    an incremented sub-seed, keeping the result deterministic.
    """
    _check_random_dim(dim)
    attempt = 0
    while True:
        rng = (seed if attempt == 0 else seed.mix(attempt)).generator()
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        norm = np.linalg.norm(v)
        if norm > 0.0:
            return v / norm
        attempt += 1
