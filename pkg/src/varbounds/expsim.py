"""Monte Carlo stand-in for the single-photon measurement runs.

Each observable is measured as its own setting: a multinomial sample of
``shots`` outcomes over its eigenbasis, i.e. ideal projective statistics
with shot noise and nothing else (no dark counts, no detector model).
Bounds that need sums, differences or a commutator get those Hermitian
combinations measured as auxiliary settings, exactly as a real experiment
would rotate into a different basis.

Error bars are nonparametric bootstrap over the count vectors, propagated
through the full bound formulas (they are nonlinear in the counts, so an
analytic delta method would need per-formula derivatives).
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import bounds as _bounds
from . import spinhalf as _spinhalf
from .qmath import HermitianMatrix, Seed
from .quantum import Observable, PureState, composite_observable, transition_probabilities

__all__ = [
    "CountVector",
    "EmpiricalBoundReport",
    "EmpiricalEstimate",
    "SimConfig",
    "empirical_bound_report",
    "empirical_moments",
    "simulate_projective_counts",
]

DEFAULT_SHOTS = 2800  # one second at the experiment's coincidence rate
DEFAULT_RESAMPLES = 1000


@dataclass(frozen=True)
class SimConfig:
    """Counts per measurement setting, master seed, bootstrap resamples."""

    shots: int = DEFAULT_SHOTS
    seed: Seed = Seed(0)
    bootstrap_resamples: int = DEFAULT_RESAMPLES

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")
        if self.bootstrap_resamples < 100:
            raise ValueError(f"bootstrap_resamples must be >= 100, got {self.bootstrap_resamples}")


@dataclass(frozen=True)
class CountVector:
    """Outcome counts per spectrum index."""

    counts: np.ndarray
    total: int

    def __post_init__(self):
        c = np.asarray(self.counts, dtype=np.int64)
        if c.ndim != 1 or np.any(c < 0):
            raise ValueError("counts must be a 1-d nonnegative integer vector")
        if int(c.sum()) != self.total:
            raise ValueError(f"counts sum {int(c.sum())} != total {self.total}")
        if self.total <= 0:
            raise ValueError("total must be positive")
        c.setflags(write=False)
        object.__setattr__(self, "counts", c)

    def probabilities(self) -> np.ndarray:
        return self.counts / self.total


@dataclass(frozen=True)
class EmpiricalEstimate:
    """Point estimate with a +-1 standard deviation error bar."""

    value: float
    std_error: float

    def __post_init__(self):
        if self.std_error < 0.0:
            raise ValueError("std_error must be >= 0")


@dataclass(frozen=True)
class EmpiricalBoundReport:
    """Bound report with bootstrap error bars, plus the raw counts.

    ``values`` mirrors the analytic report's applicable identifiers;
    ``counts`` maps setting labels (obs0..obsN-1, sum, diff_i_j, comm)
    to their simulated count vectors.
    """

    lhs_product: EmpiricalEstimate
    lhs_sum: EmpiricalEstimate
    values: dict[str, EmpiricalEstimate]
    applicable: dict[str, bool]
    counts: dict[str, CountVector]
    degenerate_spectrum: bool = False


def _outcome_probabilities(A: Observable, psi: PureState) -> np.ndarray:
    # Clip roundoff negatives and renormalize so the multinomial sampler
    # never sees a probability vector off by ~1e-16.
    p = np.clip(transition_probabilities(A, psi), 0.0, None)
    return p / p.sum()


def simulate_projective_counts(A: Observable, psi: PureState, cfg: SimConfig) -> CountVector:
    """Multinomial sample of ``cfg.shots`` outcomes in A's eigenbasis."""
    p = _outcome_probabilities(A, psi)
    counts = cfg.seed.generator().multinomial(cfg.shots, p)
    return CountVector(counts=counts, total=cfg.shots)


def _bootstrap_probabilities(counts: CountVector, resamples: int, seed: Seed) -> np.ndarray:
    """Resampled outcome probabilities, shape (resamples, m)."""
    p_hat = counts.probabilities()
    draws = seed.generator().multinomial(counts.total, p_hat, size=resamples)
    return draws / counts.total


def empirical_moments(
    counts: CountVector,
    eigenvalues: Sequence[float],
    *,
    bootstrap_resamples: int = DEFAULT_RESAMPLES,
    seed: Seed = Seed(0),
) -> tuple[EmpiricalEstimate, EmpiricalEstimate, np.ndarray]:
    """Empirical mean and variance of an observable from its counts.

    Returns (mean, variance, probabilities); the standard errors come
    from a bootstrap over the multinomial counts.
    """
    a = np.asarray(eigenvalues, dtype=float)
    if a.shape != counts.counts.shape:
        raise ValueError(f"length mismatch: {a.shape} eigenvalues vs {counts.counts.shape} counts")
    p = counts.probabilities()
    mean = float(p @ a)
    var = float(p @ (a * a) - mean * mean)
    boot = _bootstrap_probabilities(counts, bootstrap_resamples, seed)
    boot_mean = boot @ a
    boot_var = boot @ (a * a) - boot_mean**2
    return (
        EmpiricalEstimate(mean, float(np.std(boot_mean, ddof=1))),
        EmpiricalEstimate(max(var, 0.0), float(np.std(boot_var, ddof=1))),
        p,
    )


def _setting_plan(obs: Sequence[Observable]) -> list[tuple[str, Observable]]:
    """Measurement settings: the observables themselves plus the Hermitian
    combinations the bounds need (sum, pairwise differences, and i[A,B]
    for the two-observable commutator bound)."""
    n = len(obs)
    plan = [(f"obs{i}", A) for i, A in enumerate(obs)]
    plan.append(("sum", composite_observable([(1.0, A) for A in obs])))
    for i in range(n):
        for j in range(i + 1, n):
            plan.append((f"diff_{i}_{j}", composite_observable([(1.0, obs[i]), (-1.0, obs[j])])))
    if n == 2:
        comm = 1j * (obs[0].matrix @ obs[1].matrix - obs[1].matrix @ obs[0].matrix)
        plan.append(("comm", Observable(HermitianMatrix(comm))))
    return plan


def _batch_moments(a: np.ndarray, P: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    mean = P @ a
    var = np.maximum(P @ (a * a) - mean * mean, 0.0)
    return mean, var


def _batch_sorted(a: np.ndarray, P: np.ndarray, mean: np.ndarray, signed: bool) -> np.ndarray:
    proj = (a[None, :] - mean[:, None]) * np.sqrt(P)
    if not signed:
        proj = np.abs(proj)
    return np.sort(proj, axis=1, kind="stable")


def _evaluate_batch(
    obs: Sequence[Observable],
    plan: list[tuple[str, Observable]],
    probs: dict[str, np.ndarray],
    is_spin: bool,
) -> tuple[np.ndarray, np.ndarray, dict[str, np.ndarray]]:
    """Evaluate LHS and every applicable bound on a batch of probability
    vectors (first axis = batch).  Used for both the point estimate and
    the bootstrap resamples."""
    n = len(obs)
    names = [name for name, _ in plan]
    eigs = {name: A.spectrum.eigenvalues for name, A in plan}

    means: dict[str, np.ndarray] = {}
    varis: dict[str, np.ndarray] = {}
    for name in names:
        means[name], varis[name] = _batch_moments(eigs[name], probs[name])

    primary = [f"obs{i}" for i in range(n)]
    u = {
        name: _batch_sorted(eigs[name], probs[name], means[name], signed=False)
        for name in primary
    }

    lhs_product = np.prod(np.stack([varis[name] for name in primary]), axis=0)
    lhs_sum = np.sum(np.stack([varis[name] for name in primary]), axis=0)

    values: dict[str, np.ndarray] = {}
    if n == 2:
        values["robertson"] = 0.25 * means["comm"] ** 2
        v0 = _batch_sorted(eigs["obs0"], probs["obs0"], means["obs0"], signed=True)
        v1 = _batch_sorted(eigs["obs1"], probs["obs1"], means["obs1"], signed=True)
        values["mondal_product"] = np.sum(v0 * v1, axis=1) ** 2
        values["mondal_sum"] = 0.5 * np.sum((v0 + v1) ** 2, axis=1)

    U = np.stack([u[name] for name in primary])  # (n, batch, m)
    values["carlson_product"] = np.sum(np.prod(U * U, axis=0) ** (1.0 / n), axis=1) ** n

    lam = {}
    for i in range(n):
        for j in range(i + 1, n):
            lam[(i, j)] = np.sqrt(np.sum((u[f"obs{i}"] + u[f"obs{j}"]) ** 2, axis=1))
    lam_sq = sum(v * v for v in lam.values())
    if n == 2:
        values["additive"] = 0.5 * lam[(0, 1)] ** 2
    else:
        delta = sum(lam.values()) ** 2 / (n - 1) ** 2
        values["additive"] = (lam_sq - delta) / (n - 2)

    spread = sum(np.sqrt(varis[name]) for name in names if name.startswith("diff_"))
    values["variance_decomposition"] = varis["sum"] / n + 2.0 / (n * n * (n - 1)) * spread**2

    if is_spin:
        s = np.stack([means[name] for name in primary], axis=1)  # (batch, 3)
        mags = np.abs(s)
        triple = np.abs(np.prod(s, axis=1))
        values["spin_pro_hr"] = triple / 8.0
        values["spin_pro_fd"] = triple / (3.0 * math.sqrt(3.0))
        closed = np.zeros(mags.shape[0])
        for sign in (-1.0, 1.0):
            prod = 0.125 * np.prod((1.0 + sign * mags) ** 2 * (1.0 - sign * mags), axis=1)
            closed += prod ** (1.0 / 3.0)
        values["spin_pro_closed"] = closed**3
        values["spin_sum_song"] = varis["sum"] / 3.0 + spread**2 / 9.0
        values["spin_sum_fd"] = np.sum(mags, axis=1) / math.sqrt(3.0)

    return lhs_product, lhs_sum, values


def empirical_bound_report(
    obs: Sequence[Observable], psi: PureState, cfg: SimConfig
) -> EmpiricalBoundReport:
    """Simulate counts for every needed setting and evaluate all bounds.

    Every formula is evaluated on the empirical probabilities and the
    empirical expectation values only.  Setting ``k`` draws its counts
    from sub-seed ``mix(2k)`` and its bootstrap from ``mix(2k + 1)``, so
    the report is a pure function of (obs, psi, cfg) and settings are
    order-independent.
    """
    obs = list(obs)
    analytic = _bounds.bound_report(obs, psi)  # validates dims, fixes applicability
    is_spin = _spinhalf.is_pauli_triple(obs)
    plan = _setting_plan(obs)

    counts: dict[str, CountVector] = {}
    probs_point: dict[str, np.ndarray] = {}
    probs_boot: dict[str, np.ndarray] = {}
    for k, (name, setting) in enumerate(plan):
        cv = simulate_projective_counts(
            setting, psi, dataclasses.replace(cfg, seed=cfg.seed.mix(2 * k))
        )
        counts[name] = cv
        probs_point[name] = cv.probabilities()[None, :]
        probs_boot[name] = _bootstrap_probabilities(
            cv, cfg.bootstrap_resamples, cfg.seed.mix(2 * k + 1)
        )

    lhs_p, lhs_s, vals = _evaluate_batch(obs, plan, probs_point, is_spin)
    boot_p, boot_s, boot_vals = _evaluate_batch(obs, plan, probs_boot, is_spin)

    def estimate(point: np.ndarray, boot: np.ndarray) -> EmpiricalEstimate:
        return EmpiricalEstimate(float(point[0]), float(np.std(boot, ddof=1)))

    values = {
        name: estimate(vals[name], boot_vals[name])
        for name in _bounds.ALL_BOUND_IDS
        if name in vals
    }
    return EmpiricalBoundReport(
        lhs_product=estimate(lhs_p, boot_p),
        lhs_sum=estimate(lhs_s, boot_s),
        values=values,
        applicable=dict(analytic.applicable),
        counts=counts,
        degenerate_spectrum=analytic.degenerate_spectrum,
    )
