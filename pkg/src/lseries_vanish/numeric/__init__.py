"""Certified numerics: ball arithmetic, special functions and L-values."""

from .ball import DEFAULT_PREC, Ball, ComplexBall, ball_sum
from .lvalues import (
    METHODS,
    DigammaDeterminant,
    EvalReport,
    L1,
    L_s,
    digamma_determinant,
    g_function,
    lemma4_check,
    divisor_log_identity,
)
from .special import (
    bernoulli,
    digamma,
    digamma_series,
    euler_gamma,
    hurwitz_constant,
    hurwitz_zeta,
    log_one_minus_zeta,
)

__all__ = [
    "DEFAULT_PREC",
    "Ball",
    "ComplexBall",
    "ball_sum",
    "METHODS",
    "DigammaDeterminant",
    "EvalReport",
    "L1",
    "L_s",
    "digamma_determinant",
    "g_function",
    "lemma4_check",
    "divisor_log_identity",
    "bernoulli",
    "digamma",
    "digamma_series",
    "euler_gamma",
    "hurwitz_constant",
    "hurwitz_zeta",
    "log_one_minus_zeta",
]
