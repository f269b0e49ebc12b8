"""Variance lower bounds for N >= 2 observables on a pure state.

Product-type bounds cap the product of variances from below, sum-type
bounds the sum.  The generic machinery works in any finite dimension:

* ``robertson_product``      |<[A,B]>|^2 / 4               (two observables)
* ``mondal_product``         rank-paired signed projections (two observables)
* ``mondal_sum``             same ingredients, additive form (two observables)
* ``carlson_product``        Carlson's inequality on rank-paired u-vectors
* ``additive_bound``         pairwise combined-spread norms (Lambda set)
* ``variance_decomposition_sum_bound``  variances of sums and differences

``bound_report`` evaluates whichever of these (plus the qubit-triple
closed forms from :mod:`varbounds.spinhalf`) apply to a given instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .qmath import commutator
from .quantum import (
    Observable,
    PureState,
    composite_observable,
    expectation,
    signed_projection_vector,
    u_vector,
    variance,
)

__all__ = [
    "ALL_BOUND_IDS",
    "BoundReport",
    "LambdaSet",
    "PRODUCT_BOUND_IDS",
    "SUM_BOUND_IDS",
    "additive_bound",
    "bound_report",
    "carlson_product",
    "lambda_set",
    "mondal_product",
    "mondal_sum",
    "robertson_product",
    "variance_decomposition_sum_bound",
]

# Stable identifiers; these double as CSV column names.
PRODUCT_BOUND_IDS = (
    "robertson",
    "mondal_product",
    "carlson_product",
    "spin_pro_hr",
    "spin_pro_fd",
    "spin_pro_closed",
)
SUM_BOUND_IDS = (
    "mondal_sum",
    "additive",
    "variance_decomposition",
    "spin_sum_song",
    "spin_sum_fd",
)
ALL_BOUND_IDS = PRODUCT_BOUND_IDS + SUM_BOUND_IDS

_TWO_OBS_IDS = ("robertson", "mondal_product", "mondal_sum")
_GENERIC_IDS = ("carlson_product", "additive", "variance_decomposition")
_SPIN_IDS = ("spin_pro_hr", "spin_pro_fd", "spin_pro_closed", "spin_sum_song", "spin_sum_fd")


@dataclass(frozen=True)
class LambdaSet:
    """Norms of rank-paired u-vector sums, plus the correction term.

    ``lam[(i, j)]`` is ||u_i + u_j|| for each unordered pair i < j.  The
    correction ``delta`` is (sum of Lambda)^2 / (N-1)^2 for N >= 3 and
    Lambda_01^2 for N = 2.
    """

    n_obs: int
    lam: dict[tuple[int, int], float]
    delta: float

    def sum_of_squares(self) -> float:
        return float(sum(v * v for v in self.lam.values()))


@dataclass(frozen=True)
class BoundReport:
    """Left-hand sides plus every applicable named bound for one instance.

    ``values`` holds only the applicable bounds; ``applicable`` flags all
    known identifiers.  Inapplicable bounds are absent, never reported
    as 0 (0 is a meaningful bound value).  ``degenerate_spectrum`` warns
    that some observable has a repeated eigenvalue, in which case the
    transition probabilities (hence every bound that consults them)
    depend on the solver's deterministic basis choice inside the
    degenerate subspace.
    """

    lhs_product: float
    lhs_sum: float
    values: dict[str, float]
    applicable: dict[str, bool]
    degenerate_spectrum: bool = False


def _check_pair(A: Observable, B: Observable, psi: PureState) -> None:
    if not (A.dim == B.dim == psi.dim):
        raise ValueError(f"dimension mismatch: {A.dim}, {B.dim}, state {psi.dim}")


def _check_family(obs: Sequence[Observable], psi: PureState) -> None:
    if len(obs) < 2:
        raise ValueError(f"need at least 2 observables, got {len(obs)}")
    for A in obs:
        if A.dim != psi.dim:
            raise ValueError(f"dimension mismatch: observable dim {A.dim}, state dim {psi.dim}")


def _has_degenerate_spectrum(obs: Sequence[Observable]) -> bool:
    for A in obs:
        w = A.spectrum.eigenvalues
        if w.size > 1 and np.min(np.diff(w)) <= 1e-12 * max(1.0, float(np.max(np.abs(w)))):
            return True
    return False


def robertson_product(A: Observable, B: Observable, psi: PureState) -> float:
    """Heisenberg-Robertson bound |<psi|[A,B]|psi>|^2 / 4."""
    _check_pair(A, B, psi)
    val = np.vdot(psi.amplitudes, commutator(A.hermitian, B.hermitian) @ psi.amplitudes)
    return float(0.25 * abs(val) ** 2)


def mondal_product(A: Observable, B: Observable, psi: PureState) -> float:
    """(sum_k v_k w_k)^2 over the rank-paired signed projection vectors."""
    _check_pair(A, B, psi)
    v = signed_projection_vector(A, psi)
    w = signed_projection_vector(B, psi)
    return float(np.dot(v, w) ** 2)


def mondal_sum(A: Observable, B: Observable, psi: PureState) -> float:
    """(1/2) sum_k (v_k + w_k)^2 over the rank-paired signed projections."""
    _check_pair(A, B, psi)
    v = signed_projection_vector(A, psi)
    w = signed_projection_vector(B, psi)
    return float(0.5 * np.sum((v + w) ** 2))


def carlson_product(obs: Sequence[Observable], psi: PureState) -> float:
    """[sum_k (prod_i u_ik^2)^(1/N)]^N over rank-paired ascending u-vectors.

    Valid by Carlson's inequality, which bounds the product of the squared
    norms from below.  A vanishing factor makes the whole k-term 0 (the
    continuous limit, no 0^0 ambiguity).
    """
    _check_family(obs, psi)
    n = len(obs)
    U = np.array([u_vector(A, psi) for A in obs])
    prods = np.prod(U * U, axis=0)
    return float(np.sum(prods ** (1.0 / n)) ** n)


def lambda_set(obs: Sequence[Observable], psi: PureState) -> LambdaSet:
    """Pairwise ||u_i + u_j|| values and the additive-bound correction."""
    _check_family(obs, psi)
    n = len(obs)
    U = [u_vector(A, psi) for A in obs]
    lam: dict[tuple[int, int], float] = {}
    for i in range(n):
        for j in range(i + 1, n):
            lam[(i, j)] = float(np.linalg.norm(U[i] + U[j]))
    if n == 2:
        delta = lam[(0, 1)] ** 2
    else:
        delta = sum(lam.values()) ** 2 / (n - 1) ** 2
    return LambdaSet(n_obs=n, lam=lam, delta=delta)


def additive_bound(obs: Sequence[Observable], psi: PureState) -> float:
    """Sum-of-variances bound from the Lambda set.

    For N >= 3: (sum Lambda_ij^2 - delta) / (N - 2).  For N = 2 the
    formula degenerates and the bound reduces to Lambda_01^2 / 2.
    """
    ls = lambda_set(obs, psi)
    if ls.n_obs == 2:
        return 0.5 * ls.lam[(0, 1)] ** 2
    return (ls.sum_of_squares() - ls.delta) / (ls.n_obs - 2)


def variance_decomposition_sum_bound(obs: Sequence[Observable], psi: PureState) -> float:
    """(1/N) Var(sum A_i) + 2/(N^2 (N-1)) (sum_{i<j} Std(A_i - A_j))^2."""
    _check_family(obs, psi)
    n = len(obs)
    total = composite_observable([(1.0, A) for A in obs])
    spread_sum = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            diff = composite_observable([(1.0, obs[i]), (-1.0, obs[j])])
            spread_sum += math.sqrt(variance(diff, psi))
    return variance(total, psi) / n + 2.0 / (n * n * (n - 1)) * spread_sum**2


def bound_report(obs: Sequence[Observable], psi: PureState) -> BoundReport:
    """Evaluate the LHS product/sum and every applicable bound.

    Two-observable bounds apply only when N = 2; the closed-form qubit
    bounds only when the input is the standard Pauli triple (in order).
    """
    from . import spinhalf  # local import; spinhalf builds on this module

    obs = list(obs)
    _check_family(obs, psi)
    n = len(obs)
    variances = [variance(A, psi) for A in obs]
    is_spin = spinhalf.is_pauli_triple(obs)

    applicable = {name: False for name in ALL_BOUND_IDS}
    for name in _GENERIC_IDS:
        applicable[name] = True
    if n == 2:
        for name in _TWO_OBS_IDS:
            applicable[name] = True
    if is_spin:
        for name in _SPIN_IDS:
            applicable[name] = True

    values: dict[str, float] = {}
    if n == 2:
        values["robertson"] = robertson_product(obs[0], obs[1], psi)
        values["mondal_product"] = mondal_product(obs[0], obs[1], psi)
        values["mondal_sum"] = mondal_sum(obs[0], obs[1], psi)
    values["carlson_product"] = carlson_product(obs, psi)
    values["additive"] = additive_bound(obs, psi)
    values["variance_decomposition"] = variance_decomposition_sum_bound(obs, psi)
    if is_spin:
        pro = spinhalf.spin_product_bounds(psi)
        values["spin_pro_hr"] = pro.pro_hr
        values["spin_pro_fd"] = pro.pro_fd
        values["spin_pro_closed"] = pro.pro_closed
        sums = spinhalf.spin_sum_bounds(psi)
        values["spin_sum_song"] = sums.sum_song
        values["spin_sum_fd"] = sums.sum_fd

    values = {name: values[name] for name in ALL_BOUND_IDS if name in values}
    return BoundReport(
        lhs_product=float(np.prod(variances)),
        lhs_sum=float(np.sum(variances)),
        values=values,
        applicable=applicable,
        degenerate_spectrum=_has_degenerate_spectrum(obs),
    )
