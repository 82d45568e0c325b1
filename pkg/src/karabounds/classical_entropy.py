"""Shannon and Tsallis entropies with their reverse inequalities.

The reverse bounds trade the information inequality H(p) <= -sum p log q for
two-sided control under an inner-product condition between p and q: either
sum p_i q_i <= sum p_i^2 (``self_dominated``) or the opposite
(``cross_dominated``).  All components must live in a floor interval
[eps, 1]; the constants K(eps) = log(eps)/(eps-1), log S(eps) and their
r-deformed versions c1, ls_r come from ``scalar_bounds``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConsistencyError, DomainError, PreconditionError
from .functions import ln_r
from .scalar_bounds import ls_r_constant, specht

__all__ = [
    "SELF_DOMINATED",
    "CROSS_DOMINATED",
    "as_prob_vector",
    "condition_tag_holds",
    "shannon_entropy",
    "cross_term",
    "tsallis_entropy",
    "tsallis_cross_terms",
    "information_inequality_margin",
    "reverse_shannon_margins",
    "parametric_reverse_margins",
]

SELF_DOMINATED = "self_dominated"    # sum p_i q_i <= sum p_i^2
CROSS_DOMINATED = "cross_dominated"  # sum p_i^2  <= sum p_i q_i

PROB_TOL = 1e-12


def as_prob_vector(p, floor: float | None = None) -> np.ndarray:
    """Validate a probability vector; optionally require components in [floor, 1]."""
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError(f"probability vector must be 1-d, got shape {arr.shape}")
    if np.any(arr < -PROB_TOL):
        raise DomainError(f"negative probability {arr.min()}")
    if abs(arr.sum() - 1.0) > 1e-10:
        raise DomainError(f"probabilities sum to {arr.sum()}, not 1")
    if floor is not None:
        if not 0.0 < floor < 1.0:
            raise DomainError(f"floor must be in (0, 1), got {floor}")
        if np.any(arr < floor - PROB_TOL) or np.any(arr > 1.0 + PROB_TOL):
            raise DomainError(
                f"components must lie in [{floor}, 1], got range "
                f"[{arr.min()}, {arr.max()}]"
            )
    return arr


def condition_tag_holds(p, q, tag: str) -> bool:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    pp = float(np.dot(p, p))
    pq = float(np.dot(p, q))
    if tag == SELF_DOMINATED:
        return pq <= pp + PROB_TOL
    if tag == CROSS_DOMINATED:
        return pp <= pq + PROB_TOL
    raise DomainError(f"unknown condition tag {tag!r}")


def shannon_entropy(p) -> float:
    """H(p) = -sum p_i log p_i with 0 log 0 = 0; lives in [0, log n]."""
    p = as_prob_vector(p)
    pos = p[p > 0.0]
    return float(-np.sum(pos * np.log(pos)))


def cross_term(p, q) -> float:
    """-sum p_i log q_i.  Returns +inf when some q_i = 0 meets p_i > 0."""
    p = as_prob_vector(p)
    q = as_prob_vector(q)
    if p.shape != q.shape:
        raise DomainError("p and q must share a length")
    mask = p > 0.0
    if np.any(q[mask] <= 0.0):
        return math.inf
    return float(-np.sum(p[mask] * np.log(q[mask])))


def tsallis_entropy(p, r: float) -> float:
    """Deformed entropy H_r(p) for r in (0, 1].

    Both displayed forms -sum p^(1-r) ln_r p and sum p ln_r(1/p) are
    computed and must agree to 1e-8 (they are algebraically identical);
    the first is returned.
    """
    p = as_prob_vector(p)
    if not 0.0 < r <= 1.0:
        raise DomainError(f"tsallis_entropy needs r in (0, 1], got {r}")
    pos = p[p > 0.0]
    weighted = float(-np.sum(pos ** (1.0 - r) * ln_r(r, pos)))
    naive = float(np.sum(pos * np.expm1(-r * np.log(pos)) / r))
    if abs(weighted - naive) > 1e-8:
        raise ConsistencyError(
            f"Tsallis entropy forms disagree: {weighted} vs {naive}"
        )
    return weighted


def tsallis_cross_terms(p, q, r: float):
    """The two r-deformed cross terms:
    weighted = -sum p_i^(1-r) ln_r q_i  and  naive = sum p_i ln_r(1/q_i).

    They agree at r = 0 (both tend to the Shannon cross term) but differ for
    r > 0 in general.
    """
    p = as_prob_vector(p)
    q = as_prob_vector(q)
    if p.shape != q.shape:
        raise DomainError("p and q must share a length")
    if np.any(q <= 0.0):
        raise DomainError("q must be strictly positive")
    weighted = float(-np.sum(p ** (1.0 - r) * ln_r(r, q))) if abs(r) >= 1e-15 else cross_term(p, q)
    if abs(r) >= 1e-15:
        naive = float(np.sum(p * np.expm1(-r * np.log(q)) / r))
    else:
        naive = cross_term(p, q)
    return weighted, naive


def information_inequality_margin(p, q) -> float:
    """Slack of H(p) <= -sum p log q; nonnegative, zero iff p = q."""
    return cross_term(p, q) - shannon_entropy(p)


def reverse_shannon_margins(p, q, eps: float, direction: str):
    """Margins of the two-sided reverse information bounds on [eps, 1].

    cross_dominated (sum p^2 <= sum pq):
        ratio:  cross_term(p, q)/K <= H(p)
        diff:   cross_term(p, q) - log S(eps) <= H(p)
    self_dominated (sum pq <= sum p^2):
        ratio:  H(p) <= K * cross_term(p, q)
        diff:   H(p) <= log S(eps) + cross_term(p, q)

    with K = log(eps)/(eps - 1) > 1.  Returns (ratio_margin, diff_margin);
    both are nonnegative when the corresponding inequalities hold.
    """
    p = as_prob_vector(p, floor=eps)
    q = as_prob_vector(q, floor=eps)
    if not condition_tag_holds(p, q, direction):
        raise PreconditionError(f"declared condition {direction!r} does not hold")
    big_k = math.log(eps) / (eps - 1.0)
    log_s = math.log(specht(eps))
    h = shannon_entropy(p)
    cross = cross_term(p, q)
    if direction == CROSS_DOMINATED:
        return h - cross / big_k, h + log_s - cross
    return big_k * cross - h, log_s + cross - h


def parametric_reverse_margins(p, q, eps: float, r: float, direction: str):
    """r-deformed analog of ``reverse_shannon_margins`` built on
    T_p = sum p_i ln_r(1/p_i) and T_q = sum p_i ln_r(1/q_i).

    self_dominated:  T_p <= c1 * T_q   and  T_p <= ls_r(eps) + T_q
    cross_dominated: T_q / c1 <= T_p   and  T_q - ls_r(eps) <= T_p

    with c1 = ln_r(1/eps)/(1 - eps).  Recovers the Shannon margins as r -> 0.
    """
    if not r > 0.0:
        raise DomainError(f"parametric reverse needs r > 0, got {r}")
    p = as_prob_vector(p, floor=eps)
    q = as_prob_vector(q, floor=eps)
    if not condition_tag_holds(p, q, direction):
        raise PreconditionError(f"declared condition {direction!r} does not hold")
    c1 = ln_r(r, 1.0 / eps) / (1.0 - eps)
    c2 = ls_r_constant(eps, r)
    t_p = float(np.sum(p * np.expm1(-r * np.log(p)) / r))
    t_q = float(np.sum(p * np.expm1(-r * np.log(q)) / r))
    if direction == SELF_DOMINATED:
        return c1 * t_q - t_p, c2 + t_q - t_p
    return t_p - t_q / c1, t_p - t_q + c2
