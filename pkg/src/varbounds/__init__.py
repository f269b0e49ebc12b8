"""Variance-based uncertainty-relation lower bounds for N observables.

Evaluate, cross-validate and simulate measurement of the product- and
sum-form variance bounds for families of Hermitian observables on pure
states, with Pauli-triple closed forms and a verification CLI.
"""

__version__ = "0.1.0"

from .bounds import (
    ALL_BOUND_IDS,
    BoundReport,
    LambdaSet,
    additive_bound,
    bound_report,
    carlson_product,
    lambda_set,
    mondal_product,
    mondal_sum,
    robertson_product,
    variance_decomposition_sum_bound,
)
from .expsim import (
    CountVector,
    EmpiricalBoundReport,
    EmpiricalEstimate,
    SimConfig,
    empirical_bound_report,
    empirical_moments,
    simulate_projective_counts,
)
from .qmath import (
    ConvergenceError,
    HermitianMatrix,
    Seed,
    SpectralData,
    bloch_state,
    commutator,
    hermitian_eigendecompose,
    random_hermitian,
    random_pure_state,
)
from .quantum import (
    Observable,
    PureState,
    composite_observable,
    expectation,
    signed_projection_vector,
    transition_probabilities,
    u_vector,
    variance,
)
from .spinhalf import (
    BlochAngles,
    SpinExpectations,
    bloch_expectations,
    closed_form_product_bound,
    pauli,
    pauli_triple,
    spin_product_bounds,
    spin_sum_bounds,
)

__all__ = [
    "ALL_BOUND_IDS",
    "BlochAngles",
    "BoundReport",
    "ConvergenceError",
    "CountVector",
    "EmpiricalBoundReport",
    "EmpiricalEstimate",
    "HermitianMatrix",
    "LambdaSet",
    "Observable",
    "PureState",
    "Seed",
    "SimConfig",
    "SpectralData",
    "SpinExpectations",
    "additive_bound",
    "bloch_expectations",
    "bloch_state",
    "bound_report",
    "carlson_product",
    "closed_form_product_bound",
    "commutator",
    "composite_observable",
    "empirical_bound_report",
    "empirical_moments",
    "expectation",
    "hermitian_eigendecompose",
    "lambda_set",
    "mondal_product",
    "mondal_sum",
    "pauli",
    "pauli_triple",
    "random_hermitian",
    "random_pure_state",
    "robertson_product",
    "signed_projection_vector",
    "simulate_projective_counts",
    "spin_product_bounds",
    "spin_sum_bounds",
    "transition_probabilities",
    "u_vector",
    "variance",
    "variance_decomposition_sum_bound",
]
