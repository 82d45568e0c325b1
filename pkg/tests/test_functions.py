import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from karabounds.errors import DomainError, PreconditionError
from karabounds.functions import (
    ChordCoeffs,
    FunctionSpec,
    Interval,
    chord_coeffs,
    convexity_check,
    ln_r,
)

IV01 = Interval(0.0, 1.0)


class TestInterval:
    def test_rejects_bad_endpoints(self):
        with pytest.raises(DomainError):
            Interval(1.0, 1.0)
        with pytest.raises(DomainError):
            Interval(2.0, 1.0)
        with pytest.raises(DomainError):
            Interval(0.0, math.inf)

    def test_contains(self):
        iv = Interval(0.5, 2.0)
        assert iv.contains(0.5) and iv.contains(2.0)
        assert not iv.contains(2.0 + 1e-6)
        assert iv.contains(2.0 + 1e-6, slack=1e-5)


class TestLnR:
    def test_r_zero_is_log(self):
        assert ln_r(0.0, 2.0) == pytest.approx(math.log(2.0), abs=1e-15)

    def test_r_one(self):
        assert ln_r(1.0, 2.0) == pytest.approx(1.0)

    def test_unit_argument(self):
        assert ln_r(0.5, 1.0) == 0.0

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            ln_r(0.5, 0.0)
        with pytest.raises(DomainError):
            ln_r(0.5, -1.0)

    def test_small_r_matches_log(self):
        ts = np.array([0.01, 0.1, 1.0, 10.0, 100.0])
        assert np.max(np.abs(ln_r(1e-8, ts) - np.log(ts))) <= 1e-6

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=0.01, max_value=100.0),
           st.floats(min_value=-3.0, max_value=3.0))
    def test_matches_power_formula(self, t, r):
        if abs(r) < 1e-6:
            return
        assert ln_r(r, t) == pytest.approx((t ** r - 1.0) / r, rel=1e-9, abs=1e-12)


class TestFunctionSpecs:
    def test_t_log_t_convention_at_zero(self):
        f = FunctionSpec.t_log_t(IV01)
        assert f(0.0) == 0.0
        assert f(1.0) == 0.0
        assert f(0.5) == pytest.approx(0.5 * math.log(0.5))

    def test_tsallis_matches_definition(self):
        f = FunctionSpec.tsallis_f(0.4, IV01)
        t = 0.3
        assert f(t) == pytest.approx((t - t ** 0.6) / 0.4)
        assert f(0.0) == 0.0

    def test_tsallis_r_range(self):
        with pytest.raises(DomainError):
            FunctionSpec.tsallis_f(0.0, IV01)
        with pytest.raises(DomainError):
            FunctionSpec.tsallis_f(1.5, IV01)

    def test_ln_r_reciprocal(self):
        f = FunctionSpec.ln_r_reciprocal(0.7, Interval(0.1, 1.0))
        t = 0.25
        assert f(t) == pytest.approx((t ** -0.7 - 1.0) / 0.7, rel=1e-12)

    def test_power_negative_exponent_needs_positive(self):
        f = FunctionSpec.power(-1.0, Interval(0.5, 2.0))
        assert f(2.0) == pytest.approx(0.5)
        with pytest.raises(DomainError):
            f(0.0)

    def test_power_convexity_flag(self):
        assert FunctionSpec.power(2.0, Interval(0.1, 1.0)).is_convex
        assert not FunctionSpec.power(0.5, Interval(0.1, 1.0)).is_convex
        assert FunctionSpec.power(-1.0, Interval(0.1, 1.0)).is_convex

    def test_central_moment(self):
        f = FunctionSpec.central_moment(2, 1.0, Interval(-3.0, 3.0))
        assert f(3.0) == pytest.approx(4.0)
        assert f(-1.0) == pytest.approx(4.0)

    def test_custom_validates_declared_convexity(self):
        with pytest.raises(PreconditionError):
            FunctionSpec.custom(lambda t: -np.asarray(t, dtype=float) ** 2,
                                "convex", IV01, "-t^2")
        # the same function is fine when declared concave
        FunctionSpec.custom(lambda t: -np.asarray(t, dtype=float) ** 2,
                            "concave", IV01, "-t^2")


class TestChordCoeffs:
    def test_t_log_t_chord_vanishes(self):
        ch = chord_coeffs(FunctionSpec.t_log_t(IV01), IV01)
        assert ch == ChordCoeffs(0.0, 0.0)

    def test_tsallis_chord_vanishes(self):
        for r in (0.2, 0.5, 0.9):
            ch = chord_coeffs(FunctionSpec.tsallis_f(r, IV01), IV01)
            assert abs(ch.slope) < 1e-14 and abs(ch.intercept) < 1e-14

    def test_square_chord(self):
        f = FunctionSpec.custom(lambda t: np.asarray(t, dtype=float) ** 2, "convex",
                                IV01, "t^2")
        ch = chord_coeffs(f, IV01)
        assert ch.slope == pytest.approx(1.0)
        assert ch.intercept == pytest.approx(0.0)

    def test_interpolation_invariant(self):
        iv = Interval(0.3, 1.7)
        f = FunctionSpec.power(2.0, Interval(0.0, 2.0))
        ch = chord_coeffs(f, iv)
        assert ch(iv.m) == pytest.approx(f(iv.m), rel=1e-12)
        assert ch(iv.M) == pytest.approx(f(iv.M), rel=1e-12)


class TestConvexityCheck:
    def test_t_log_t_is_convex(self):
        assert convexity_check(FunctionSpec.t_log_t(IV01), IV01, 1000)

    def test_neg_log_is_convex(self):
        iv = Interval(0.05, 1.0)
        assert convexity_check(FunctionSpec.neg_log(iv), iv, 1000)

    def test_negated_square_is_not(self):
        f = FunctionSpec.custom(lambda t: -np.asarray(t, dtype=float) ** 2,
                                "concave", IV01, "-t^2")
        assert not convexity_check(f, IV01, 1000)

    def test_sample_count_guard(self):
        with pytest.raises(DomainError):
            convexity_check(FunctionSpec.t_log_t(IV01), IV01, 2)
