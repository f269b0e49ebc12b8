"""Qubit (spin-1/2) specializations for the standard Pauli triple.

Conventions: hbar = 1 and each spin component is the Pauli matrix itself,
eigenvalues +1 and -1.  The product closed form below requires exactly
this normalization.  The literal constants 1/8 and 1/(3*sqrt(3)) in the
comparison bounds are kept as printed in the literature; under the +-1
convention they remain valid (weaker) bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import bounds as _bounds
from .quantum import Observable, PureState, composite_observable, expectation, variance

__all__ = [
    "BlochAngles",
    "SpinExpectations",
    "SpinProductBounds",
    "SpinSumBounds",
    "bloch_expectations",
    "closed_form_product_bound",
    "is_pauli_triple",
    "pauli",
    "spin_product_bounds",
    "spin_sum_bounds",
]

_SIGMA = {
    1: np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    2: np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    3: np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}
_PAULI_CACHE: dict[int, Observable] = {}


@dataclass(frozen=True)
class BlochAngles:
    """Polar angle in [0, pi], azimuth in [0, 2*pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise ValueError(f"phi must lie in [0, 2*pi), got {self.phi}")


@dataclass(frozen=True)
class SpinExpectations:
    """Expectation values of the three spin components, each in [-1, 1]."""

    s1: float
    s2: float
    s3: float

    def __post_init__(self):
        for name, v in (("s1", self.s1), ("s2", self.s2), ("s3", self.s3)):
            if not -1.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [-1, 1], got {v}")


class SpinProductBounds(NamedTuple):
    pro_hr: float
    pro_fd: float
    pro_closed: float


class SpinSumBounds(NamedTuple):
    sum_ours: float
    sum_song: float
    sum_fd: float


def pauli(index: int) -> Observable:
    """The Pauli observable sigma_1, sigma_2 or sigma_3 (eigenvalues +-1)."""
    if index not in (1, 2, 3):
        raise ValueError(f"pauli index must be 1, 2 or 3, got {index}")
    if index not in _PAULI_CACHE:
        _PAULI_CACHE[index] = Observable(_SIGMA[index])
    return _PAULI_CACHE[index]


def pauli_triple() -> tuple[Observable, Observable, Observable]:
    """The standard triple (sigma_1, sigma_2, sigma_3), cached."""
    return (pauli(1), pauli(2), pauli(3))


def is_pauli_triple(obs: Sequence[Observable]) -> bool:
    """True when ``obs`` is the standard Pauli triple, in order."""
    if len(obs) != 3:
        return False
    for A, index in zip(obs, (1, 2, 3)):
        if A.dim != 2 or not np.allclose(A.matrix, _SIGMA[index], rtol=0.0, atol=1e-12):
            return False
    return True


def bloch_expectations(angles: BlochAngles) -> SpinExpectations:
    """Spin expectations (sin t cos p, sin t sin p, cos t) on the Bloch sphere."""
    st = math.sin(angles.theta)
    return SpinExpectations(
        s1=st * math.cos(angles.phi),
        s2=st * math.sin(angles.phi),
        s3=math.cos(angles.theta),
    )


def closed_form_product_bound(s: SpinExpectations) -> float:
    """Closed form of the rank-paired product bound for the Pauli triple.

    [ sum_{k=1,2} ( (1/8) prod_i (1 + (-1)^k |s_i|)^2 (1 - (-1)^k |s_i|) )^(1/3) ]^3
    """
    mags = (abs(s.s1), abs(s.s2), abs(s.s3))
    total = 0.0
    for sign in (-1.0, 1.0):
        prod = 0.125
        for m in mags:
            prod *= (1.0 + sign * m) ** 2 * (1.0 - sign * m)
        total += prod ** (1.0 / 3.0)
    return total**3


def _spin_expectations(psi: PureState) -> SpinExpectations:
    if psi.dim != 2:
        raise ValueError(f"spin-1/2 bounds need a qubit state, got dim {psi.dim}")
    s = [expectation(pauli(i), psi) for i in (1, 2, 3)]
    clip = [min(1.0, max(-1.0, v)) for v in s]  # guard roundoff at the poles
    return SpinExpectations(*clip)


def spin_product_bounds(psi: PureState) -> SpinProductBounds:
    """The three product bounds for the Pauli triple on a qubit state.

    ``pro_hr`` and ``pro_fd`` scale |<S1><S2><S3>| by 1/8 and 1/(3*sqrt(3))
    and vanish whenever any expectation does; ``pro_closed`` is the
    closed form, free of that triviality.
    """
    s = _spin_expectations(psi)
    triple = abs(s.s1 * s.s2 * s.s3)
    return SpinProductBounds(
        pro_hr=triple / 8.0,
        pro_fd=triple / (3.0 * math.sqrt(3.0)),
        pro_closed=closed_form_product_bound(s),
    )


def spin_sum_bounds(psi: PureState) -> SpinSumBounds:
    """The three sum bounds for the Pauli triple on a qubit state.

    ``sum_ours`` is the generic additive bound (the pairwise combined
    norms coincide with the generic Lambda values for this triple);
    ``sum_song`` is (1/3) Var(sum S_i) + (1/9) (sum Std(S_i - S_j))^2;
    ``sum_fd`` is (|<S1>| + |<S2>| + |<S3>|) / sqrt(3).
    """
    s = _spin_expectations(psi)
    triple = pauli_triple()
    total = composite_observable([(1.0, A) for A in triple])
    spread = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            diff = composite_observable([(1.0, triple[i]), (-1.0, triple[j])])
            spread += math.sqrt(variance(diff, psi))
    return SpinSumBounds(
        sum_ours=_bounds.additive_bound(triple, psi),
        sum_song=variance(total, psi) / 3.0 + spread**2 / 9.0,
        sum_fd=(abs(s.s1) + abs(s.s2) + abs(s.s3)) / math.sqrt(3.0),
    )
