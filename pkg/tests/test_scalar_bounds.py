import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from karabounds import scalar_bounds as sb
from karabounds.errors import DomainError, PreconditionError
from karabounds.functions import FunctionSpec, Interval

IV01 = Interval(0.0, 1.0)


def neg_log(eps):
    return FunctionSpec.neg_log(Interval(eps, 1.0))


class TestIntervalMax:
    def test_entropy_integrand_peak(self):
        arg, val = sb.interval_max(
            lambda t: -np.asarray(t) * np.log(np.maximum(np.asarray(t), 1e-300)),
            Interval(1e-12, 1.0), 1e-10)
        assert val == pytest.approx(1.0 / math.e, abs=1e-10)
        assert arg == pytest.approx(1.0 / math.e, abs=1e-6)

    def test_constant_map_ties_break_left(self):
        arg, val = sb.interval_max(lambda t: np.full_like(np.asarray(t, dtype=float), 2.5),
                                   Interval(0.25, 4.0), 1e-10)
        assert arg == 0.25
        assert val == 2.5

    def test_neg_log_shannon_reverse_value(self):
        # max of chord - f for -log on [eps, 1] equals log of the Specht ratio
        eps = 0.2
        f = neg_log(eps)
        arg, val = sb.interval_max(
            lambda t: (math.log(eps) / (eps - 1.0)) * (1.0 - np.asarray(t)) + np.log(t),
            Interval(eps, 1.0), 1e-10)
        assert val == pytest.approx(math.log(sb.specht(eps)), abs=1e-10)
        assert arg == pytest.approx((eps - 1.0) / math.log(eps), abs=1e-6)

    def test_error_carries_offending_point(self):
        def g(t):
            t = np.asarray(t, dtype=float)
            if np.any(t > 0.5):
                raise DomainError("boom")
            return t

        with pytest.raises(DomainError, match="t="):
            sb.interval_max(g, Interval(0.0, 1.0), 1e-10)

    def test_rejects_bad_tol(self):
        with pytest.raises(DomainError):
            sb.interval_max(lambda t: t, IV01, 0.0)

    def test_interval_min_mirrors_max(self):
        arg, val = sb.interval_min(lambda t: (np.asarray(t) - 0.3) ** 2, IV01, 1e-10)
        assert val == pytest.approx(0.0, abs=1e-12)
        assert arg == pytest.approx(0.3, abs=1e-6)


class TestBetaConstant:
    @pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 2.0])
    def test_t_log_t_closed_form(self, alpha):
        f = FunctionSpec.t_log_t(IV01)
        assert sb.beta_constant(f, IV01, alpha) == pytest.approx(alpha / math.e, abs=1e-14)
        assert sb.beta_oracle(f, IV01, alpha) == pytest.approx(alpha / math.e, abs=1e-9)

    @pytest.mark.parametrize("r", [0.1, 0.3, 0.5, 0.7, 0.9])
    @pytest.mark.parametrize("alpha", [0.0, 1.0, 2.0])
    def test_tsallis_closed_form(self, r, alpha):
        f = FunctionSpec.tsallis_f(r, IV01)
        expected = alpha * (1.0 - r) ** ((1.0 - r) / r)
        assert sb.beta_constant(f, IV01, alpha) == pytest.approx(expected, abs=1e-13)
        assert sb.beta_oracle(f, IV01, alpha) == pytest.approx(expected, abs=1e-9)

    def test_linear_chord_gives_zero(self):
        f = FunctionSpec.custom(lambda t: 2.0 * np.asarray(t, dtype=float) + 1.0,
                                "convex", IV01, "2t+1")
        assert sb.beta_constant(f, IV01, 1.0) == pytest.approx(0.0, abs=1e-10)

    def test_alpha_zero_is_endpoint_max(self):
        for f, iv in [(FunctionSpec.t_log_t(IV01), IV01),
                      (neg_log(0.2), Interval(0.2, 1.0)),
                      (FunctionSpec.power(2.0, Interval(0.3, 2.0)), Interval(0.3, 2.0))]:
            lo = iv.m if f.defined_at(iv.m) else iv.m + 1e-12
            expected = max(float(f(lo)), float(f(iv.M)))
            assert sb.beta_constant(f, iv, 0.0) == pytest.approx(expected, abs=1e-10)

    def test_negative_alpha_rejected(self):
        with pytest.raises(DomainError):
            sb.beta_constant(FunctionSpec.t_log_t(IV01), IV01, -0.1)

    def test_diff_equals_beta_at_one(self):
        for eps in (0.05, 0.3):
            f = neg_log(eps)
            iv = Interval(eps, 1.0)
            assert sb.diff_constant(f, iv) == sb.beta_constant(f, iv, 1.0)

    def test_neg_log_general_alpha_matches_oracle(self):
        for eps in (0.02, 0.2, 0.6):
            iv = Interval(eps, 1.0)
            f = neg_log(eps)
            for alpha in (0.0, 0.3, 1.0, 5.0):
                closed = sb.beta_constant(f, iv, alpha)
                assert closed == pytest.approx(sb.beta_oracle(f, iv, alpha), abs=1e-8)

    def test_concave_dual_is_minimum(self):
        f = FunctionSpec.power(0.5, Interval(1.0, 4.0))
        beta = sb.beta_constant(f, Interval(1.0, 4.0), 1.0)
        assert beta == pytest.approx(sb.c_of_hr(1.0, 4.0, 0.5), abs=1e-10)
        assert beta < 0.0


class TestRatioConstant:
    @pytest.mark.parametrize("eps", [0.01, 0.1, 0.5, 0.9])
    def test_neg_log_closed_form(self, eps):
        iv = Interval(eps, 1.0)
        expected = math.log(eps) / (eps - 1.0)
        assert sb.ratio_constant(neg_log(eps), iv) == pytest.approx(expected, abs=1e-14)
        assert sb.ratio_oracle(neg_log(eps), iv) == pytest.approx(expected, abs=1e-8)

    @pytest.mark.parametrize("eps", [0.05, 0.3])
    @pytest.mark.parametrize("r", [0.1, 0.5, 1.0, 3.0])
    def test_ln_r_closed_form(self, eps, r):
        iv = Interval(eps, 1.0)
        f = FunctionSpec.ln_r_reciprocal(r, iv)
        expected = sb.ln_r(r, 1.0 / eps) / (1.0 - eps)
        assert sb.ratio_constant(f, iv) == pytest.approx(expected, rel=1e-12)
        assert sb.ratio_oracle(f, iv) == pytest.approx(expected, rel=1e-8)

    def test_positive_linear_gives_one(self):
        iv = Interval(1.0, 2.0)
        f = FunctionSpec.custom(lambda t: 3.0 * np.asarray(t, dtype=float) + 0.5,
                                "convex", iv, "3t+0.5")
        assert sb.ratio_oracle(f, iv) == pytest.approx(1.0, abs=1e-9)

    def test_nonpositive_function_rejected(self):
        iv = Interval(0.0, 1.0)
        f = FunctionSpec.t_log_t(iv)  # t log t <= 0 on [0, 1]
        with pytest.raises(PreconditionError):
            sb.ratio_constant(f, iv)

    def test_monotonicity_in_eps(self):
        # the -log ratio constant decreases in eps and exceeds 1
        values = [sb.ratio_constant(neg_log(e), Interval(e, 1.0))
                  for e in (0.05, 0.1, 0.3, 0.5, 0.8, 0.95)]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(v > 1.0 for v in values)


class TestKantorovich:
    def test_r_limits_are_one(self):
        for h in (1.1, 10.0, 100.0):
            assert sb.kantorovich(h, 0.0) == 1.0
            assert sb.kantorovich(h, 1.0) == 1.0
            assert abs(sb.kantorovich(h, 1e-6) - 1.0) < 1e-5

    def test_h_limit(self):
        assert sb.kantorovich(1.0 + 1e-13, 2.0) == 1.0
        assert abs(sb.kantorovich(1.0 + 1e-6, 2.0) - 1.0) < 1e-5

    @pytest.mark.parametrize("h", [1.5, 3.0, 42.0])
    def test_classical_r2_value(self, h):
        assert sb.kantorovich(h, 2.0) == pytest.approx((h + 1.0) ** 2 / (4.0 * h), abs=1e-12)

    def test_matches_oracle_both_regimes(self):
        for h in (2.0, 10.0):
            for r in (-2.0, -1.0, 0.3, 0.7, 2.0, 3.0):
                iv = Interval(1.0, h)
                oracle = sb.ratio_oracle(FunctionSpec.power(r, iv), iv)
                assert sb.kantorovich(h, r) == pytest.approx(oracle, rel=1e-9)

    def test_scale_invariance(self):
        iv = Interval(0.3, 1.2)
        got = sb.ratio_constant(FunctionSpec.power(2.0, iv), iv)
        assert got == pytest.approx(sb.kantorovich(4.0, 2.0), rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            sb.kantorovich(0.9, 2.0)
        with pytest.raises(DomainError):
            sb.kantorovich(-1.0, 2.0)


class TestCOfHr:
    def test_limits_vanish(self):
        for h in (1.1, 10.0, 100.0):
            assert sb.c_of_hr(1.0, h, 0.0) == 0.0
            assert sb.c_of_hr(1.0, h, 1.0) == 0.0
            assert abs(sb.c_of_hr(1.0, h, 1e-6)) < 1e-5
        assert sb.c_of_hr(2.0, 1.0 + 1e-13, 2.0) == 0.0

    def test_matches_oracle(self):
        for m in (0.5, 1.0, 2.0):
            for h in (2.0, 10.0):
                for r in (-1.0, 0.5, 2.0, 3.0):
                    iv = Interval(m, m * h)
                    oracle = sb.diff_oracle(FunctionSpec.power(r, iv), iv)
                    assert sb.c_of_hr(m, h, r) == pytest.approx(oracle, rel=1e-9, abs=1e-11)

    def test_sign_by_regime(self):
        assert sb.c_of_hr(1.0, 4.0, 2.0) > 0.0
        assert sb.c_of_hr(1.0, 4.0, -1.0) > 0.0
        assert sb.c_of_hr(1.0, 4.0, 0.5) < 0.0

    def test_m_must_be_positive(self):
        with pytest.raises(DomainError):
            sb.c_of_hr(0.0, 2.0, 2.0)


class TestSpecht:
    def test_unit_value(self):
        assert sb.specht(1.0) == 1.0
        assert sb.specht(1.0 + 1e-14) == 1.0

    def test_value_at_e(self):
        e = math.e
        expected = e ** (1.0 / (e - 1.0)) / (e / (e - 1.0))
        assert sb.specht(e) == pytest.approx(expected, rel=1e-14)

    def test_cross_check_against_diff_constant(self):
        # C(eps, 1, -log) = log S(eps) = log S(1/eps)
        for eps in (0.05, 1.0 / math.e, 0.4):
            iv = Interval(eps, 1.0)
            c = sb.diff_constant(neg_log(eps), iv)
            assert math.exp(c) == pytest.approx(sb.specht(1.0 / eps), rel=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=-6.0, max_value=6.0))
    def test_symmetry_on_log_grid(self, loghe):
        h = math.exp(loghe)
        if abs(h - 1.0) < 1e-9:
            return
        s, s_inv = sb.specht(h), sb.specht(1.0 / h)
        assert abs(s - s_inv) <= 1e-12 * abs(s)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            sb.specht(0.0)


class TestLsR:
    def test_matches_diff_constant(self):
        for eps in (0.05, 0.3, 0.8):
            for r in (0.1, 0.5, 1.0, 3.0):
                iv = Interval(eps, 1.0)
                f = FunctionSpec.ln_r_reciprocal(r, iv)
                assert sb.ls_r_constant(eps, r) == pytest.approx(
                    sb.diff_constant(f, iv), rel=1e-12, abs=1e-14)

    def test_r_to_zero_recovers_log_specht(self):
        for eps in (0.05, 0.5, 0.9):
            assert abs(sb.ls_r_constant(eps, 1e-6) - math.log(sb.specht(eps))) < 1e-4

    def test_eps_to_one_vanishes(self):
        assert abs(sb.ls_r_constant(1.0 - 1e-8, 0.5)) < 1e-6

    def test_nonnegative(self):
        for eps in np.linspace(0.01, 0.99, 25):
            for r in (0.1, 0.5, 1.0, 2.0, 5.0):
                assert sb.ls_r_constant(float(eps), r) >= -1e-14

    def test_claimed_upper_bound_fails_for_small_eps(self):
        # the advertised bound ls_r <= 1/r does not survive small eps: the
        # grid oracle confirms the closed form *is* the true maximum there
        eps, r = 0.1, 1.0
        val = sb.ls_r_constant(eps, r)
        assert val > 1.0 / r + 1.0  # 4.675... vs 1.0
        iv = Interval(eps, 1.0)
        oracle = sb.diff_oracle(FunctionSpec.ln_r_reciprocal(r, iv), iv)
        assert val == pytest.approx(oracle, rel=1e-10)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            sb.ls_r_constant(0.0, 1.0)
        with pytest.raises(DomainError):
            sb.ls_r_constant(0.5, 0.0)
