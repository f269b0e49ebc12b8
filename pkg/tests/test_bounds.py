import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as npst

from varbounds.bounds import (
    ALL_BOUND_IDS,
    PRODUCT_BOUND_IDS,
    additive_bound,
    bound_report,
    carlson_product,
    lambda_set,
    mondal_product,
    mondal_sum,
    robertson_product,
    variance_decomposition_sum_bound,
)
from varbounds.quantum import PureState, u_vector, variance
from varbounds.spinhalf import pauli

from conftest import random_instance

BLOCH_QUARTER = PureState.bloch(np.pi / 4, 0.0)
BLOCH_23 = PureState.bloch(2 * np.pi / 3, 0.0)
EQUATOR = PureState.bloch(np.pi / 2, 0.0)


class TestRobertson:
    def test_tight_at_pole(self, ket0):
        val = robertson_product(pauli(1), pauli(2), ket0)
        assert val == pytest.approx(1.0, abs=1e-12)
        lhs = variance(pauli(1), ket0) * variance(pauli(2), ket0)
        assert val == pytest.approx(lhs, abs=1e-12)

    def test_vanishes_on_equator(self):
        assert robertson_product(pauli(1), pauli(2), EQUATOR) == pytest.approx(0.0, abs=1e-12)

    def test_self_commutator(self):
        assert robertson_product(pauli(1), pauli(1), BLOCH_QUARTER) == 0.0

    def test_dim_mismatch(self, ket0):
        from varbounds.quantum import Observable

        with pytest.raises(ValueError):
            robertson_product(pauli(1), Observable(np.eye(3)), ket0)


class TestMondal:
    def test_product_witness(self):
        val = mondal_product(pauli(1), pauli(3), BLOCH_23)
        assert val == pytest.approx(0.0937499999999999, abs=1e-9)

    def test_product_tight(self, ket0):
        assert mondal_product(pauli(1), pauli(2), ket0) == pytest.approx(1.0, abs=1e-12)

    def test_product_eigenstate(self, ket0):
        assert mondal_product(pauli(3), pauli(3), ket0) == pytest.approx(0.0, abs=1e-15)

    def test_sum_tight(self, ket0):
        assert mondal_sum(pauli(1), pauli(2), ket0) == pytest.approx(2.0, abs=1e-12)

    def test_sum_witness(self):
        val = mondal_sum(pauli(1), pauli(3), BLOCH_23)
        assert val == pytest.approx(0.806186217847897, abs=1e-9)

    def test_sum_joint_eigenstate(self, ket0):
        assert mondal_sum(pauli(3), pauli(3), ket0) == pytest.approx(0.0, abs=1e-15)


class TestCarlson:
    def test_pauli_triple_quarter(self, triple):
        assert carlson_product(triple, BLOCH_QUARTER) == pytest.approx(
            0.204154753012881, abs=1e-9
        )

    def test_pauli_triple_pole(self, triple, ket0):
        assert carlson_product(triple, ket0) == pytest.approx(0.0, abs=1e-15)

    def test_two_observable_witness_exceeds_mondal(self):
        val = carlson_product([pauli(1), pauli(3)], BLOCH_23)
        assert val == pytest.approx(0.174939881604791, abs=1e-9)
        assert val > mondal_product(pauli(1), pauli(3), BLOCH_23)
        lhs = variance(pauli(1), BLOCH_23) * variance(pauli(3), BLOCH_23)
        assert lhs == pytest.approx(0.1875, abs=1e-12)
        assert val <= lhs

    def test_needs_two(self, ket0):
        with pytest.raises(ValueError):
            carlson_product([pauli(1)], ket0)


class TestLambdaSet:
    def test_pole_values(self, triple, ket0):
        ls = lambda_set(triple, ket0)
        assert ls.lam[(0, 1)] ** 2 == pytest.approx(4.0, abs=1e-12)
        assert ls.lam[(0, 2)] ** 2 == pytest.approx(1.0, abs=1e-12)
        assert ls.lam[(1, 2)] ** 2 == pytest.approx(1.0, abs=1e-12)
        assert ls.delta == pytest.approx(4.0, abs=1e-12)

    def test_quarter_values(self, triple):
        ls = lambda_set(triple, BLOCH_QUARTER)
        assert ls.lam[(0, 1)] ** 2 == pytest.approx(2.80656296487638, abs=1e-9)
        assert ls.lam[(1, 2)] ** 2 == pytest.approx(2.80656296487638, abs=1e-9)
        assert ls.lam[(0, 2)] ** 2 == pytest.approx(2.0, abs=1e-9)
        assert ls.delta == pytest.approx(5.67576661373241, abs=1e-9)

    def test_identical_at_joint_eigenstate(self, ket0):
        ls = lambda_set([pauli(3), pauli(3)], ket0)
        assert ls.lam[(0, 1)] == pytest.approx(0.0, abs=1e-15)
        assert ls.delta == pytest.approx(0.0, abs=1e-15)

    @given(st.integers(0, 2**32), st.integers(2, 4))
    def test_invariants(self, seed, n):
        obs, psi = random_instance(seed, dim=3, n=n)
        ls = lambda_set(obs, psi)
        assert len(ls.lam) == n * (n - 1) // 2
        assert all(v >= 0 for v in ls.lam.values())
        if n == 2:
            assert ls.delta == pytest.approx(ls.lam[(0, 1)] ** 2, rel=1e-12)
        else:
            expected = sum(ls.lam.values()) ** 2 / (n - 1) ** 2
            assert ls.delta == pytest.approx(expected, rel=1e-12)


class TestAdditive:
    def test_tight_at_pole(self, triple, ket0):
        assert additive_bound(triple, ket0) == pytest.approx(2.0, abs=1e-12)

    def test_quarter(self, triple):
        assert additive_bound(triple, BLOCH_QUARTER) == pytest.approx(
            1.93735931602034, abs=1e-9
        )

    def test_two_observable_reduction(self):
        val = additive_bound([pauli(1), pauli(3)], BLOCH_23)
        assert val == pytest.approx(0.918258151868904, abs=1e-9)
        assert val >= mondal_sum(pauli(1), pauli(3), BLOCH_23)

    def test_needs_two(self, ket0):
        with pytest.raises(ValueError):
            additive_bound([pauli(1)], ket0)
        with pytest.raises(ValueError):
            lambda_set([pauli(1)], ket0)


class TestVarianceDecomposition:
    def test_quarter(self, triple):
        val = variance_decomposition_sum_bound(triple, BLOCH_QUARTER)
        assert val == pytest.approx(1.99202258114172, abs=1e-9)
        # the additive bound is not universally dominant; here it loses
        assert val > additive_bound(triple, BLOCH_QUARTER)

    def test_pole_closed_form(self, triple, ket0):
        val = variance_decomposition_sum_bound(triple, ket0)
        assert val == pytest.approx(2.0 / 3.0 + (np.sqrt(2) + 2) ** 2 / 9.0, abs=1e-12)

    def test_two_observables_tight(self):
        val = variance_decomposition_sum_bound([pauli(1), pauli(3)], BLOCH_23)
        assert val == pytest.approx(1.0, abs=1e-12)


class TestBoundReport:
    def test_pauli_quarter_aggregation(self, triple):
        rep = bound_report(triple, BLOCH_QUARTER)
        assert rep.lhs_product == pytest.approx(0.25, abs=1e-12)
        assert rep.lhs_sum == pytest.approx(2.0, abs=1e-12)
        assert rep.values["carlson_product"] == pytest.approx(0.204154753012881, abs=1e-9)
        assert rep.values["additive"] == pytest.approx(1.93735931602034, abs=1e-9)
        assert rep.values["variance_decomposition"] == pytest.approx(
            1.99202258114172, abs=1e-9
        )

    def test_two_observable_pole_all_tight(self, ket0):
        rep = bound_report([pauli(1), pauli(2)], ket0)
        assert rep.lhs_product == pytest.approx(1.0, abs=1e-12)
        for name in ("robertson", "mondal_product", "carlson_product"):
            assert rep.values[name] == pytest.approx(1.0, abs=1e-12)

    def test_single_observable_rejected(self, ket0):
        with pytest.raises(ValueError):
            bound_report([pauli(1)], ket0)

    def test_applicability_flags(self, triple, ket0):
        rep = bound_report(triple, ket0)
        assert rep.applicable["spin_pro_closed"] and rep.applicable["carlson_product"]
        assert not rep.applicable["robertson"]
        assert "robertson" not in rep.values
        obs, psi = random_instance(1, dim=3, n=2)
        rep = bound_report(obs, psi)
        assert rep.applicable["robertson"]
        assert not rep.applicable["spin_pro_closed"]
        assert "spin_pro_closed" not in rep.values

    def test_values_ordered_by_schema(self, triple):
        rep = bound_report(triple, BLOCH_QUARTER)
        names = list(rep.values)
        assert names == [n for n in ALL_BOUND_IDS if n in rep.values]

    def test_degenerate_spectrum_flag(self, triple, ket0):
        from varbounds.quantum import Observable

        assert not bound_report(triple, ket0).degenerate_spectrum
        rep = bound_report([Observable(np.eye(2)), pauli(3)], ket0)
        assert rep.degenerate_spectrum


def _validity_margins(rep):
    for name, val in rep.values.items():
        lhs = rep.lhs_product if name in PRODUCT_BOUND_IDS else rep.lhs_sum
        yield name, lhs - val, 1e-9 * max(1.0, abs(lhs))


class TestValidityFuzz:
    def test_random_instances(self):
        cases = itertools.product(range(40), (2, 3, 4, 5, 6), (2, 3, 4))
        for seed, dim, n in cases:
            obs, psi = random_instance(1000 * seed + 10 * dim + n, dim=dim, n=n)
            rep = bound_report(obs, psi)
            for name, margin, slack in _validity_margins(rep):
                assert margin >= -slack, (name, dim, n, seed, margin)

    def test_chains(self):
        for seed in range(60):
            obs, psi = random_instance(seed, dim=3, n=2)
            rep = bound_report(obs, psi)
            assert rep.values["carlson_product"] >= rep.values["mondal_product"] - 1e-12
            assert rep.values["additive"] >= rep.values["mondal_sum"] - 1e-12
        for seed in range(60):
            for n in (3, 4):
                obs, psi = random_instance(seed + 7000, dim=4, n=n)
                rep = bound_report(obs, psi)
                ls = lambda_set(obs, psi)
                simple = ls.sum_of_squares() / (2 * (n - 1))
                assert rep.values["additive"] >= simple - 1e-12

    def test_rank_pairing_is_optimal(self):
        rng = np.random.default_rng(17)
        for seed in range(40):
            obs, psi = random_instance(seed + 300, dim=5, n=2)
            u0, u1 = u_vector(obs[0], psi), u_vector(obs[1], psi)
            base = float(np.dot(u0, u1))
            for _ in range(20):
                perm = rng.permutation(u1.size)
                assert base >= float(np.dot(u0, u1[perm])) - 1e-12

    @given(st.integers(0, 2**32), st.permutations(range(3)))
    def test_permutation_invariance(self, seed, perm):
        obs, psi = random_instance(seed, dim=3, n=3)
        shuffled = [obs[i] for i in perm]
        a = carlson_product(obs, psi)
        b = carlson_product(shuffled, psi)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))
        a = additive_bound(obs, psi)
        b = additive_bound(shuffled, psi)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))

    def test_shift_invariance_of_all_bounds(self):
        from varbounds.qmath import HermitianMatrix
        from varbounds.quantum import Observable

        rng = np.random.default_rng(5)
        for seed in range(25):
            n = 2 + seed % 3
            obs, psi = random_instance(seed + 900, dim=3, n=n)
            shifts = rng.normal(size=n)
            shifted = [
                Observable(HermitianMatrix(A.matrix + c * np.eye(3)))
                for A, c in zip(obs, shifts)
            ]
            a, b = bound_report(obs, psi), bound_report(shifted, psi)
            for name in a.values:
                tol = 1e-12 * max(1.0, abs(a.values[name]))
                assert abs(a.values[name] - b.values[name]) <= tol, name
            assert abs(a.lhs_product - b.lhs_product) <= 1e-12 * max(1.0, a.lhs_product)
            assert abs(a.lhs_sum - b.lhs_sum) <= 1e-12 * max(1.0, a.lhs_sum)


class TestCarlsonBaseInequality:
    @given(
        npst.arrays(
            np.float64,
            st.tuples(st.integers(2, 4), st.integers(2, 6)),
            elements=st.floats(0, 1),
        )
    )
    def test_on_nonnegative_matrices(self, u):
        n = u.shape[0]
        lhs = float(np.prod(np.sum(u * u, axis=1)))
        rhs = float(np.sum(np.prod(u * u, axis=0) ** (1.0 / n)) ** n)
        assert lhs >= rhs - 1e-12
