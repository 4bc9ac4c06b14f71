"""Iterates, kernels, contraction bounds, and the mean-ergodic splitting."""

import io
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cesarospec import (
    CoordinateVector,
    FAILS,
    HOLDS,
    PreconditionError,
    WeightSystem,
    basis_vector,
    cesaro,
    cesaro_apply,
    cesaro_means,
    ergodic_decomposition_check,
    gm_sup,
    iterate_limit_check,
    iterate_via_kernel,
    kernel_matrix,
    parse_alpha,
    power_bound_check,
    power_iterate,
    seminorm,
)

F = Fraction


class TestPowerIterate:
    def test_single_pass_is_running_mean(self):
        tr = power_iterate(basis_vector(1, 4), 1)
        assert list(tr.final().values) == [1, F(1, 2), F(1, 3), F(1, 4)]

    def test_two_passes_hand_values(self):
        # second averaging of e_1: coordinate 2 is (1 + 1/2)/2 = 3/4,
        # coordinate 3 is (1 + 1/2 + 1/3)/3 = 11/18
        tr = power_iterate(basis_vector(1, 4), 2)
        assert list(tr.final().values) == [1, F(3, 4), F(11, 18), F(25, 48)]

    def test_records_every_step(self):
        tr = power_iterate(basis_vector(1, 3), 3)
        assert [step for step, _ in tr.iterates] == [0, 1, 2, 3]
        assert tr.iterates[0][1] == (1, 0, 0)

    def test_limit_prediction_is_first_coordinate(self):
        x = CoordinateVector([F(7), F(1), F(2)])
        assert power_iterate(x, 2).limit_prediction == 7

    def test_seminorm_history_with_weights(self, linear):
        tr = power_iterate(basis_vector(1, 5), 3, w=WeightSystem(linear),
                           ks=(1, 2))
        assert len(tr.seminorms) == 4
        step0 = dict(tr.seminorms[0][1])
        assert step0[1] == pytest.approx(math.exp(-1))

    def test_averaging_fixes_the_top_seminorm_of_e1(self, linear):
        # the sup sits at coordinate 1, which every averaging pass fixes,
        # so p_k stays exactly constant along the trajectory
        tr = power_iterate(basis_vector(1, 6), 4, w=linear, ks=(1, 2, 3))
        for k in (1, 2, 3):
            history = [dict(vals)[k] for _, vals in tr.seminorms]
            assert all(h == history[0] for h in history)

    def test_rejects_bad_m(self):
        with pytest.raises(PreconditionError):
            power_iterate(basis_vector(1, 3), 0)

    def test_complex_input(self):
        x = CoordinateVector([1 + 1j, 0.0, 0.0])
        tr = power_iterate(x, 1)
        assert tr.final().values[1] == pytest.approx((1 + 1j) / 2)


class TestCesaroMeans:
    def test_first_mean_is_first_iterate(self):
        tr = cesaro_means(basis_vector(1, 3), 1)
        assert list(tr.means[0][1]) == [1, F(1, 2), F(1, 3)]

    def test_second_mean_hand_value(self):
        # (Cx + C^2 x)/2 at coordinate 2: (1/2 + 3/4)/2 = 5/8
        tr = cesaro_means(basis_vector(1, 3), 2)
        assert tr.means[1][1][1] == F(5, 8)

    def test_distances_shrink_for_e1(self, linear):
        tr = cesaro_means(basis_vector(1, 8), 40, w=linear, ks=(1,))
        gaps = [dict(v)[1] for _, v in tr.distances]
        assert gaps[-1] < gaps[0]
        assert gaps[-1] < 0.05

    def test_limit_prediction(self):
        x = CoordinateVector([F(3), F(0), F(0)])
        assert cesaro_means(x, 2).limit_prediction == 3


class TestKernel:
    def test_first_power_is_plain_averaging(self):
        k = kernel_matrix(1, 12)
        c = cesaro(12, mode="float").dense()
        assert np.max(np.abs(k - c)) <= 1e-15

    def test_rows_sum_to_one(self):
        # constant vectors are fixed by every averaging power
        for m in (2, 3, 5):
            k = kernel_matrix(m, 16)
            assert np.allclose(k.sum(axis=1), 1.0, atol=1e-12)

    def test_matches_iterated_means(self):
        x = CoordinateVector(np.linspace(-1.0, 1.0, 20))
        for m in (2, 3):
            via_kernel = iterate_via_kernel(x, m).as_float()
            via_means = power_iterate(x, m).final().as_float()
            assert np.max(np.abs(via_kernel - via_means)) <= 1e-10

    def test_cache_returns_same_object(self):
        assert kernel_matrix(2, 10) is kernel_matrix(2, 10)

    def test_ones_preserved(self):
        ones = CoordinateVector([1.0] * 15)
        out = iterate_via_kernel(ones, 4).as_float()
        assert np.max(np.abs(out - 1.0)) <= 1e-12


class TestDensitySups:
    def test_first_values(self):
        assert gm_sup(1) == 1.0
        assert gm_sup(2) == pytest.approx(math.exp(-1), abs=1e-14)

    def test_closed_matches_numeric(self):
        for m in range(1, 21):
            closed = gm_sup(m, method="closed")
            numeric = gm_sup(m, method="numeric")
            assert abs(closed - numeric) <= 1e-10

    def test_strictly_decreasing(self):
        vals = [gm_sup(m) for m in range(1, 25)]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert vals[-1] < 0.1

    def test_rejects_bad_m(self):
        with pytest.raises(PreconditionError):
            gm_sup(0)


class TestContraction:
    def test_exact_rational_mode(self, linear):
        x = CoordinateVector([F(5), F(-3), F(7, 2), F(0), F(2)])
        v = power_bound_check(linear, x, K=3, M=12, mode="rational")
        assert v.outcome == HOLDS

    def test_float_mode(self, linear, rng):
        x = CoordinateVector(rng.uniform(-1, 1, size=30))
        v = power_bound_check(linear, x, K=4, M=20)
        assert v.outcome == HOLDS

    def test_rational_mode_needs_exact_generator(self):
        x = CoordinateVector([F(1), F(2)])
        with pytest.raises(PreconditionError):
            power_bound_check(parse_alpha("sqrt"), x, mode="rational")

    @given(xs=st.lists(st.floats(min_value=-50, max_value=50),
                       min_size=2, max_size=25))
    @settings(max_examples=60)
    def test_single_pass_never_raises_seminorms(self, linear, xs):
        # independent of the verdict machinery: one averaging pass cannot
        # increase any weighted sup when the weights decrease in n
        y = cesaro_apply(CoordinateVector(xs)).as_float()
        for k in (1, 2):
            before = seminorm(linear, k, np.abs(xs))
            after = seminorm(linear, k, np.abs(y))
            assert after <= before * (1 + 1e-12) + 1e-300


class TestIterateLimit:
    def test_basis_vector_settles(self):
        v = iterate_limit_check(basis_vector(1, 30), tol=1e-6)
        assert v.outcome == HOLDS
        assert v.params["max_steps"] <= 60

    def test_skewed_vector_settles(self, rng):
        x = CoordinateVector(rng.uniform(-1, 1, size=25))
        assert iterate_limit_check(x, tol=1e-6).outcome == HOLDS

    def test_cap_too_small_fails_honestly(self):
        v = iterate_limit_check(basis_vector(1, 30), tol=1e-12, m_cap=2)
        assert v.outcome == FAILS
        assert v.witness["m_cap"] == 2


class TestErgodicSplitting:
    def test_exact_identity(self, linear):
        x = CoordinateVector([F(3), F(1), F(4), F(1), F(5)])
        v = ergodic_decomposition_check(linear, x)
        assert v.outcome == HOLDS
        assert v.params["mode"] == "rational"

    def test_float_identity(self, linear, rng):
        x = CoordinateVector(rng.uniform(-2, 2, size=40))
        v = ergodic_decomposition_check(linear, x)
        assert v.outcome == HOLDS

    def test_constant_vector_has_zero_remainder(self, linear):
        x = CoordinateVector([F(2)] * 6)
        v = ergodic_decomposition_check(linear, x)
        assert v.outcome == HOLDS

    def test_short_vector_rejected(self, linear):
        with pytest.raises(PreconditionError):
            ergodic_decomposition_check(linear, CoordinateVector([F(1)]))


class TestTraceSerialization:
    def test_csv_layout(self, linear):
        tr = power_iterate(basis_vector(1, 2), 1, w=linear, ks=(1, 2))
        buf = io.StringIO()
        tr.write_csv(buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "m,n,value,p_1,p_2"
        assert lines[1].startswith("0,1,1,")
        assert lines[3].startswith("1,1,1,")
        assert lines[4].startswith("1,2,1/2,")

    def test_csv_floats_are_canonical(self):
        tr = power_iterate(CoordinateVector([1.0, 0.0]), 1)
        buf = io.StringIO()
        tr.write_csv(buf)
        assert "0,1,1\n" in buf.getvalue() or "0,1,1.0" not in buf.getvalue()
