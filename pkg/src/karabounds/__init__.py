"""karabounds: reverse Karamata/Jensen constants, entropy inequalities,
operator means, and randomized verification with brute-force oracles."""

from .errors import (
    ConsistencyError,
    ConvergenceError,
    DomainError,
    GeneratorExhausted,
    KaraboundsError,
    PreconditionError,
    ShapeError,
)
from .functions import ChordCoeffs, FunctionSpec, Interval, chord_coeffs, convexity_check, ln_r
from .scalar_bounds import (
    beta_constant,
    beta_oracle,
    c_of_hr,
    diff_constant,
    diff_oracle,
    interval_max,
    interval_min,
    kantorovich,
    ls_r_constant,
    ratio_constant,
    ratio_oracle,
    specht,
)

__version__ = "0.1.0"

__all__ = [
    "Interval",
    "FunctionSpec",
    "ChordCoeffs",
    "chord_coeffs",
    "convexity_check",
    "ln_r",
    "interval_max",
    "interval_min",
    "beta_constant",
    "beta_oracle",
    "ratio_constant",
    "ratio_oracle",
    "diff_constant",
    "diff_oracle",
    "kantorovich",
    "c_of_hr",
    "specht",
    "ls_r_constant",
    "KaraboundsError",
    "DomainError",
    "PreconditionError",
    "ShapeError",
    "ConvergenceError",
    "ConsistencyError",
    "GeneratorExhausted",
]
