"""Exact evaluation of the singular functions g_lambda,
continued-fraction expansions and the Stern-Brocot / Xi_n sequences."""

from fractions import Fraction

from ._singular import (
    QuadSurd,
    Rational,
    empirical_cdf,
    expand_rcf,
    expand_rrcf,
    fibonacci,
    fibonacci_ratio_limit,
    g_inductive,
    g_series,
    g_tau2,
    mediant_ratio,
    question_mark,
    rcf_to_rrcf,
    stern_brocot,
    subtree_count,
    theta,
    value_rcf,
    value_rrcf,
    verify_theorem1,
    xi,
)


def to_fraction(x):
    """Rational -> fractions.Fraction."""
    return Fraction(x.numerator, x.denominator)


__all__ = [name for name in dir() if not name.startswith("_")]
