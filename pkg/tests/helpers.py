from fractions import Fraction

import mpmath
from hypothesis import strategies as st

from lseries_vanish import PeriodicFunction

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


@st.composite
def periodic_functions(draw, qmin=1, qmax=24, zero_mean=False):
    q = draw(st.integers(qmin, qmax))
    vals = draw(st.lists(rationals, min_size=q, max_size=q))
    if zero_mean:
        vals[-1] -= sum(vals, Fraction(0))
    return PeriodicFunction(q, tuple(vals))


def mp_value(ball):
    """Ball midpoint as an mpmath number (test-side conversion)."""
    return mpmath.mp.make_mpf(ball.mid)


def close_to(ball, expected, tol):
    """|midpoint - expected| + radius <= tol."""
    with mpmath.workdps(150):
        err = abs(mpmath.mp.make_mpf(ball.mid) - expected) + mpmath.mp.make_mpf(ball.rad)
        return err <= tol


def encloses(ball, expected):
    """|midpoint - expected| <= radius, for an mpmath reference value."""
    with mpmath.workdps(150):
        return abs(mpmath.mp.make_mpf(ball.mid) - expected) <= mpmath.mp.make_mpf(ball.rad)
