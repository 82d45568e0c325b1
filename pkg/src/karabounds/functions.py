"""Scalar function catalog: intervals, convex test functions, chords, r-logarithm.

Every reverse-inequality constant in this package is defined through a convex
(or concave) scalar function on a closed interval [m, M] together with its
secant line.  ``FunctionSpec`` bundles the evaluator, the declared convexity
and the interval so the bound modules can stay generic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, PreconditionError

__all__ = [
    "Interval",
    "ChordCoeffs",
    "FunctionSpec",
    "ln_r",
    "chord_coeffs",
    "convexity_check",
]

#: parameters closer than this to a removable singularity switch to the limit branch
SINGULAR_TOL = 1e-12

#: absolute slack for the midpoint convexity test (double-precision secant noise)
CONVEXITY_TOL = 1e-10


@dataclass(frozen=True)
class Interval:
    """Closed interval [m, M] with finite endpoints, m < M."""

    m: float
    M: float

    def __post_init__(self):
        if not (math.isfinite(self.m) and math.isfinite(self.M)):
            raise DomainError(f"interval endpoints must be finite, got [{self.m}, {self.M}]")
        if not self.m < self.M:
            raise DomainError(f"interval needs m < M, got [{self.m}, {self.M}]")

    @property
    def width(self) -> float:
        return self.M - self.m

    def contains(self, t: float, slack: float = 0.0) -> bool:
        return self.m - slack <= t <= self.M + slack


@dataclass(frozen=True)
class ChordCoeffs:
    """Secant line t -> slope*t + intercept through (m, f(m)) and (M, f(M))."""

    slope: float
    intercept: float

    def __call__(self, t):
        return self.slope * np.asarray(t, dtype=float) + self.intercept


def ln_r(r: float, t):
    """r-logarithm (t^r - 1)/r, with the r -> 0 limit log t.

    Computed as expm1(r log t)/r, which is uniformly accurate down to the
    branch switch at |r| < 1e-12.  t must be strictly positive.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= 0.0):
        raise DomainError(f"ln_r requires t > 0, got min {t_arr.min()}")
    if abs(r) < SINGULAR_TOL:
        out = np.log(t_arr)
    else:
        out = np.expm1(r * np.log(t_arr)) / r
    return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out


def _tlogt(t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0.0):
        raise DomainError("t log t requires t >= 0")
    # convention 0 log 0 = 0
    safe = np.where(t > 0.0, t, 1.0)
    return np.where(t > 0.0, t * np.log(safe), 0.0)


def _neglog(t):
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0):
        raise DomainError("-log t requires t > 0")
    return -np.log(t)


@dataclass(frozen=True)
class FunctionSpec:
    """A scalar function on an interval, with declared convexity.

    ``kind`` is one of ``t_log_t``, ``neg_log``, ``power``, ``tsallis_f``,
    ``ln_r_reciprocal``, ``central_moment`` or ``custom``.  Parametric kinds
    carry ``r`` (exponent/deformation) or ``moment_order``/``center``.
    Custom functions supply ``evaluator`` and must declare their convexity,
    which is validated by a midpoint convexity scan on ``domain``.
    """

    kind: str
    domain: Interval
    convexity: str = "convex"
    r: Optional[float] = None
    moment_order: Optional[int] = None
    center: float = 0.0
    evaluator: Optional[Callable] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.convexity not in ("convex", "concave"):
            raise DomainError(f"convexity must be 'convex' or 'concave', got {self.convexity!r}")
        if self.kind == "tsallis_f" and not (0.0 < self.r <= 1.0):
            raise DomainError(f"tsallis_f needs r in (0, 1], got {self.r}")
        if self.kind == "ln_r_reciprocal" and not self.r > 0.0:
            raise DomainError(f"ln_r_reciprocal needs r > 0, got {self.r}")
        if self.kind == "central_moment" and self.moment_order < 1:
            raise DomainError(f"central_moment needs order >= 1, got {self.moment_order}")
        if self.kind == "custom":
            if self.evaluator is None:
                raise DomainError("custom FunctionSpec needs an evaluator")
            sign = 1.0 if self.convexity == "convex" else -1.0
            if not _midpoint_convex(lambda t: sign * np.asarray(self(t), dtype=float),
                                    self.domain.m, self.domain.M, 200):
                raise PreconditionError(
                    f"declared convexity {self.convexity!r} fails the midpoint test "
                    f"on [{self.domain.m}, {self.domain.M}]"
                )

    # -- constructors ------------------------------------------------------

    @staticmethod
    def t_log_t(domain: Interval = Interval(0.0, 1.0)) -> "FunctionSpec":
        return FunctionSpec("t_log_t", domain, "convex", name="t*log(t)")

    @staticmethod
    def neg_log(domain: Interval) -> "FunctionSpec":
        return FunctionSpec("neg_log", domain, "convex", name="-log(t)")

    @staticmethod
    def power(r: float, domain: Interval) -> "FunctionSpec":
        conv = "concave" if 0.0 < r < 1.0 else "convex"
        return FunctionSpec("power", domain, conv, r=r, name=f"t^{r:g}")

    @staticmethod
    def tsallis_f(r: float, domain: Interval = Interval(0.0, 1.0)) -> "FunctionSpec":
        return FunctionSpec("tsallis_f", domain, "convex", r=r, name=f"(t-t^(1-r))/r, r={r:g}")

    @staticmethod
    def ln_r_reciprocal(r: float, domain: Interval) -> "FunctionSpec":
        return FunctionSpec("ln_r_reciprocal", domain, "convex", r=r, name=f"ln_r(1/t), r={r:g}")

    @staticmethod
    def central_moment(order: int, mean: float, domain: Interval) -> "FunctionSpec":
        return FunctionSpec(
            "central_moment", domain, "convex", moment_order=order, center=mean,
            name=f"(t-{mean:g})^{order}",
        )

    @staticmethod
    def custom(evaluator: Callable, convexity: str, domain: Interval, name: str = "custom") -> "FunctionSpec":
        return FunctionSpec("custom", domain, convexity, evaluator=evaluator, name=name)

    # -- evaluation --------------------------------------------------------

    def __call__(self, t):
        t_in = t
        t = np.asarray(t, dtype=float)
        if self.kind == "t_log_t":
            out = _tlogt(t)
        elif self.kind == "neg_log":
            out = _neglog(t)
        elif self.kind == "power":
            out = self._eval_power(t)
        elif self.kind == "tsallis_f":
            out = self._eval_tsallis(t)
        elif self.kind == "ln_r_reciprocal":
            # ln_r(1/t) = expm1(-r log t)/r: avoids the 1/t rounding noise near t = 1
            out = np.expm1(-self.r * np.log(_strictly_positive(t, self.name))) / self.r
        elif self.kind == "central_moment":
            out = (t - self.center) ** self.moment_order
        else:
            out = np.asarray(self.evaluator(t), dtype=float)
        return float(out) if np.isscalar(t_in) or t.ndim == 0 else out

    def _eval_power(self, t):
        r = self.r
        if r < 0.0:
            return _strictly_positive(t, self.name) ** r
        if np.any(t < 0.0):
            raise DomainError(f"t^{r:g} requires t >= 0 here")
        if abs(r) < SINGULAR_TOL:
            return np.ones_like(t)
        return t ** r

    def _eval_tsallis(self, t):
        # f_r(t) = (t - t^(1-r))/r for t > 0, with the continuity convention
        # f_r(0) = 0 (exact for r < 1, limiting value at r = 1)
        r = self.r
        if np.any(t < 0.0):
            raise DomainError("tsallis_f requires t >= 0")
        safe = np.where(t > 0.0, t, 1.0)
        val = (safe - safe ** (1.0 - r)) / r
        return np.where(t > 0.0, val, 0.0)

    def defined_at(self, t: float) -> bool:
        """True when the evaluator accepts t (convention points included)."""
        try:
            v = self(float(t))
        except (DomainError, FloatingPointError, ValueError, ZeroDivisionError, OverflowError):
            return False
        return math.isfinite(v)

    @property
    def is_convex(self) -> bool:
        return self.convexity == "convex"


def _strictly_positive(t, name):
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0):
        raise DomainError(f"{name or 'function'} requires t > 0")
    return t


def chord_coeffs(f: FunctionSpec, iv: Interval) -> ChordCoeffs:
    """Secant coefficients of f over [m, M]: slope (f(M)-f(m))/(M-m) and the
    matching intercept (M f(m) - m f(M))/(M-m)."""
    try:
        fm = float(f(iv.m))
        fM = float(f(iv.M))
    except DomainError as exc:
        raise DomainError(f"cannot evaluate {f.name or f.kind} at an endpoint of "
                          f"[{iv.m}, {iv.M}]: {exc}") from exc
    slope = (fM - fm) / iv.width
    intercept = (iv.M * fm - iv.m * fM) / iv.width
    return ChordCoeffs(slope, intercept)


def _midpoint_convex(eval_fn, lo: float, hi: float, n_samples: int) -> bool:
    rng = np.random.default_rng(0x5EED)
    s = rng.uniform(lo, hi, size=n_samples)
    t = rng.uniform(lo, hi, size=n_samples)
    try:
        fs = np.asarray(eval_fn(s), dtype=float)
        ft = np.asarray(eval_fn(t), dtype=float)
        fmid = np.asarray(eval_fn((s + t) / 2.0), dtype=float)
    except DomainError as exc:
        raise DomainError(f"convexity check could not evaluate the function: {exc}") from exc
    gap = (fs + ft) / 2.0 - fmid
    return bool(np.all(gap >= -CONVEXITY_TOL))


def convexity_check(f, iv: Interval, n_samples: int) -> bool:
    """Midpoint convexity test on randomly sampled pairs from [m, M].

    True iff f((s+t)/2) <= (f(s)+f(t))/2 + 1e-10 for every sampled pair.
    Deterministic (fixed internal seed).  f may be a FunctionSpec or any
    vectorized scalar callable.
    """
    if n_samples < 3:
        raise DomainError(f"convexity_check needs n_samples >= 3, got {n_samples}")
    lo, hi = iv.m, iv.M
    if isinstance(f, FunctionSpec):
        if not f.defined_at(lo):
            lo = lo + 1e-12
        if not f.defined_at(hi):
            hi = hi - 1e-12
    return _midpoint_convex(f, lo, hi, n_samples)
