import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from varbounds import Observable, PureState, Seed, pauli_triple

settings.register_profile(
    "ci",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

PAULI_1 = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_3 = np.array([[1, 0], [0, -1]], dtype=complex)


@pytest.fixture(scope="session")
def triple():
    return pauli_triple()


@pytest.fixture(scope="session")
def ket0():
    return PureState([1.0, 0.0])


def random_instance(seed: int, dim: int, n: int):
    """Random Gaussian observables and a Haar state, reproducibly."""
    from varbounds import random_hermitian, random_pure_state

    base = Seed(seed)
    psi = PureState(random_pure_state(base.mix(0), dim))
    obs = [Observable(random_hermitian(base.mix(i + 1), dim)) for i in range(n)]
    return obs, psi
