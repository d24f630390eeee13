"""Midpoint-radius (ball) arithmetic on top of mpmath's low-level float kernel.

A :class:`Ball` is a binary floating-point midpoint plus a nonnegative radius.
Every operation returns a ball containing every exact result obtainable from
points of the operand balls.  Midpoints are rounded to nearest at the ball's
working precision and the rounding error is added to the radius; radii are
kept at 32 bits and always rounded toward +infinity.

Elementary functions (log, exp, cos/sin of pi*x, pi, log 2) come from
``mpmath.libmp``; their results are treated as accurate to within 2 ulp and
4 ulp are added to the radius.

Working precision is carried by each ball and never set globally.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from mpmath import libmp
from mpmath.libmp import (
    fzero,
    fone,
    from_int,
    from_man_exp,
    from_rational,
    mpf_abs,
    mpf_add,
    mpf_cmp,
    mpf_cos_sin_pi,
    mpf_div,
    mpf_exp,
    mpf_ln2,
    mpf_log,
    mpf_mul,
    mpf_neg,
    mpf_pi,
    mpf_sqrt,
    mpf_sub,
    round_ceiling,
    round_floor,
    round_nearest,
    to_str,
)

DEFAULT_PREC = 128
RAD_PREC = 32
_ELEM_ULPS = 4


def _radd(*terms):
    out = fzero
    for t in terms:
        out = mpf_add(out, t, RAD_PREC, round_ceiling)
    return out


def _rmul(a, b):
    return mpf_mul(a, b, RAD_PREC, round_ceiling)


def _ulp(m, prec, ulps=1):
    """Upper bound for ``ulps`` units in the last place of m at ``prec`` bits."""
    if m == fzero:
        return fzero
    sign, man, exp, bc = m
    # |m| < 2^(exp+bc); one ulp at prec bits is 2^(exp+bc-prec)
    return from_man_exp(ulps, exp + bc - prec)


def _mag(x):
    """Upper bound for |x| at RAD_PREC bits."""
    return libmp.mpf_pos(mpf_abs(x), RAD_PREC, round_ceiling)


def _rational_mpf(value: Fraction, prec):
    """Round a rational to nearest; returns (mid, error bound)."""
    if value.denominator == 1:
        m = from_int(int(value.numerator))
        return m, fzero
    m = from_rational(value.numerator, value.denominator, prec, round_nearest)
    return m, _ulp(m, prec)


class Ball:
    """A real ball [mid - rad, mid + rad]."""

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid=fzero, rad=fzero, prec: int = DEFAULT_PREC):
        self.mid = mid
        self.rad = rad
        self.prec = prec

    # construction --------------------------------------------------------

    @classmethod
    def exact(cls, value, prec: int = DEFAULT_PREC) -> Ball:
        """Ball around an int or rational; exact when the value is dyadic."""
        if isinstance(value, Ball):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not numbers here")
        if isinstance(value, int):
            return cls(from_int(value), fzero, prec)
        if isinstance(value, Rational):
            mid, err = _rational_mpf(Fraction(value), prec)
            return cls(mid, err, prec)
        raise TypeError(f"cannot build a Ball from {type(value).__name__}")

    @classmethod
    def from_fixed(cls, value: int, shift: int, err_units: int, prec: int) -> Ball:
        """Ball from a fixed-point integer ``value * 2^-shift`` with error ``err_units * 2^-shift``."""
        return cls(from_man_exp(value, -shift), from_man_exp(err_units, -shift), prec)

    @classmethod
    def pi(cls, prec: int = DEFAULT_PREC) -> Ball:
        m = mpf_pi(prec, round_nearest)
        return cls(m, _ulp(m, prec, _ELEM_ULPS), prec)

    @classmethod
    def ln2(cls, prec: int = DEFAULT_PREC) -> Ball:
        m = mpf_ln2(prec, round_nearest)
        return cls(m, _ulp(m, prec, _ELEM_ULPS), prec)

    @classmethod
    def log_of_rational(cls, value, prec: int = DEFAULT_PREC) -> Ball:
        """log of a positive rational."""
        value = Fraction(value)
        if value <= 0:
            raise ValueError("log of a nonpositive number")
        return cls.exact(value, prec + 8).log().with_prec(prec)

    @classmethod
    def cos_sin_pi(cls, value, prec: int = DEFAULT_PREC) -> tuple[Ball, Ball]:
        """(cos(pi x), sin(pi x)) for rational x."""
        x = Fraction(value)
        wp = prec + 10
        xm, xerr = _rational_mpf(x, wp)
        c, s = mpf_cos_sin_pi(xm, wp, round_nearest)
        # |d/dx cos(pi x)| <= pi < 4
        prop = mpf_mul(xerr, from_int(4), RAD_PREC, round_ceiling)
        cb = cls(c, _radd(_ulp(fone, wp, _ELEM_ULPS), prop), prec)
        sb = cls(s, _radd(_ulp(fone, wp, _ELEM_ULPS), prop), prec)
        return cb, sb

    def with_prec(self, prec: int) -> Ball:
        return Ball(self.mid, self.rad, prec)

    # inspection ------------------------------------------------------------

    @property
    def lower(self):
        return mpf_sub(self.mid, self.rad, self.prec + 8, round_floor)

    @property
    def upper(self):
        return mpf_add(self.mid, self.rad, self.prec + 8, round_ceiling)

    def contains_zero(self) -> bool:
        return mpf_cmp(mpf_abs(self.mid), self.rad) <= 0

    def separated_from_zero(self) -> bool:
        return not self.contains_zero()

    def is_positive(self) -> bool:
        return mpf_cmp(self.lower, fzero) > 0

    def is_negative(self) -> bool:
        return mpf_cmp(self.upper, fzero) < 0

    def contains(self, other) -> bool:
        """True if the exact number (or every point of a Ball) lies inside."""
        if isinstance(other, Ball):
            return (
                mpf_cmp(self.lower, other.lower) <= 0
                and mpf_cmp(other.upper, self.upper) <= 0
            )
        if isinstance(other, int) or isinstance(other, Rational):
            x = Fraction(other)
            lo = libmp.to_rational(self.lower)
            hi = libmp.to_rational(self.upper)
            return Fraction(*lo) <= x <= Fraction(*hi)
        raise TypeError(f"cannot test containment of {type(other).__name__}")

    def overlaps(self, other: Ball) -> bool:
        other = _coerce(other, self.prec)
        return (
            mpf_cmp(self.lower, other.upper) <= 0
            and mpf_cmp(other.lower, self.upper) <= 0
        )

    def definitely_less(self, other) -> bool:
        other = _coerce(other, self.prec)
        return mpf_cmp(self.upper, other.lower) < 0

    def rad_lt(self, bound) -> bool:
        """True if the radius is certainly below every point of ``bound``."""
        bound = _coerce(bound, self.prec)
        return mpf_cmp(self.rad, bound.lower) < 0

    def mid_fraction(self) -> Fraction:
        return Fraction(*libmp.to_rational(self.mid))

    def __float__(self):
        return libmp.to_float(self.mid)

    @property
    def radius_float(self) -> float:
        return libmp.to_float(self.rad, rnd=round_ceiling)

    def mid_str(self, digits: int | None = None) -> str:
        if digits is None:
            digits = max(5, int(self.prec * 0.30103))
        return to_str(self.mid, digits)

    def rad_str(self, digits: int = 5) -> str:
        """Decimal radius, padded so the printed value is still an upper bound."""
        if self.rad == fzero:
            return "0"
        padded = mpf_mul(self.rad, from_rational(101, 100, RAD_PREC, round_ceiling), RAD_PREC, round_ceiling)
        return to_str(padded, digits)

    def __repr__(self):
        return f"Ball({self.mid_str(20)} +/- {self.rad_str(3)})"

    # arithmetic ------------------------------------------------------------

    def __neg__(self):
        return Ball(mpf_neg(self.mid), self.rad, self.prec)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.contains_zero():
            m = _radd(mpf_abs(self.mid), self.rad)
            half = libmp.mpf_shift(m, -1)
            return Ball(half, half, self.prec)
        return Ball(mpf_abs(self.mid), self.rad, self.prec)

    def __add__(self, other):
        other = _coerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        p = max(self.prec, other.prec)
        m = mpf_add(self.mid, other.mid, p, round_nearest)
        return Ball(m, _radd(self.rad, other.rad, _ulp(m, p)), p)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        p = max(self.prec, other.prec)
        m = mpf_sub(self.mid, other.mid, p, round_nearest)
        return Ball(m, _radd(self.rad, other.rad, _ulp(m, p)), p)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = _coerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        p = max(self.prec, other.prec)
        m = mpf_mul(self.mid, other.mid, p, round_nearest)
        rad = _radd(
            _rmul(_mag(self.mid), other.rad),
            _rmul(_mag(other.mid), self.rad),
            _rmul(self.rad, other.rad),
            _ulp(m, p),
        )
        return Ball(m, rad, p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        if other.contains_zero():
            raise ZeroDivisionError("divisor ball contains zero")
        p = max(self.prec, other.prec)
        m = mpf_div(self.mid, other.mid, p, round_nearest)
        bm = mpf_abs(other.mid)
        # |a/b - am/bm| <= (ra |bm| + |am| rb) / (|bm| (|bm| - rb))
        num = _radd(_rmul(self.rad, _mag(bm)), _rmul(_mag(self.mid), other.rad))
        gap = mpf_sub(bm, other.rad, RAD_PREC, round_floor)
        den = mpf_mul(libmp.mpf_pos(bm, RAD_PREC, round_floor), gap, RAD_PREC, round_floor)
        rad = _radd(mpf_div(num, den, RAD_PREC, round_ceiling), _ulp(m, p))
        return Ball(m, rad, p)

    def __rtruediv__(self, other):
        other = _coerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Ball(fone, fzero, self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # elementary functions --------------------------------------------------

    def log(self) -> Ball:
        if not self.is_positive():
            raise ValueError("log of a ball that is not strictly positive")
        p = self.prec
        m = mpf_log(self.mid, p, round_nearest)
        # Lipschitz constant of log on [mid - rad, inf) is 1/(mid - rad)
        low = mpf_sub(self.mid, self.rad, RAD_PREC, round_floor)
        prop = mpf_div(self.rad, low, RAD_PREC, round_ceiling)
        return Ball(m, _radd(prop, _ulp(m, p, _ELEM_ULPS)), p)

    def exp(self) -> Ball:
        p = self.prec
        m = mpf_exp(self.mid, p, round_nearest)
        # |exp(x) - exp(mid)| <= exp(mid) (exp(rad) - 1)
        if mpf_cmp(self.rad, from_man_exp(1, -1)) <= 0:
            # exp(r) - 1 <= r exp(r) <= 2 r for r <= 1/2
            grow = libmp.mpf_shift(self.rad, 1)
        else:
            grow = mpf_sub(
                mpf_exp(self.rad, RAD_PREC, round_ceiling), fone, RAD_PREC, round_ceiling
            )
        top = mpf_exp(self.mid, RAD_PREC, round_ceiling)
        return Ball(m, _radd(_rmul(top, grow), _ulp(m, p, _ELEM_ULPS)), p)

    def sqrt(self) -> Ball:
        if not self.is_positive():
            raise ValueError("sqrt of a ball that is not strictly positive")
        p = self.prec
        m = mpf_sqrt(self.mid, p, round_nearest)
        # |sqrt(x) - sqrt(mid)| <= rad / sqrt(mid - rad)
        low = mpf_sqrt(
            mpf_sub(self.mid, self.rad, RAD_PREC, round_floor), RAD_PREC, round_floor
        )
        prop = mpf_div(self.rad, low, RAD_PREC, round_ceiling)
        return Ball(m, _radd(prop, _ulp(m, p, _ELEM_ULPS)), p)


def _coerce(x, prec):
    if isinstance(x, Ball):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, (int, Rational)):
        return Ball.exact(x, prec)
    return NotImplemented


class ComplexBall:
    """A rectangle re + i*im with real and imaginary parts given as Balls."""

    __slots__ = ("re", "im")

    def __init__(self, re: Ball, im: Ball | None = None):
        self.re = re
        self.im = im if im is not None else Ball(fzero, fzero, re.prec)

    @classmethod
    def exact(cls, value, prec: int = DEFAULT_PREC) -> ComplexBall:
        if isinstance(value, ComplexBall):
            return value
        if isinstance(value, Ball):
            return cls(value)
        return cls(Ball.exact(value, prec))

    @classmethod
    def root_of_unity(cls, k: int, m: int, prec: int = DEFAULT_PREC) -> ComplexBall:
        """exp(2 pi i k / m)."""
        c, s = Ball.cos_sin_pi(Fraction(2 * k, m), prec)
        return cls(c, s)

    @property
    def prec(self):
        return max(self.re.prec, self.im.prec)

    def conjugate(self):
        return ComplexBall(self.re, -self.im)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def separated_from_zero(self) -> bool:
        return not self.contains_zero()

    def overlaps(self, other) -> bool:
        other = _ccoerce(other, self.prec)
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    @property
    def radius_float(self) -> float:
        return max(self.re.radius_float, self.im.radius_float)

    def __repr__(self):
        return f"ComplexBall({self.re!r}, {self.im!r})"

    def __neg__(self):
        return ComplexBall(-self.re, -self.im)

    def __add__(self, other):
        other = _ccoerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        return ComplexBall(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _ccoerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        return ComplexBall(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (Ball, int, Rational)) and not isinstance(other, bool):
            return ComplexBall(self.re * other, self.im * other)
        other = _ccoerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        return ComplexBall(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def abs2(self) -> Ball:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        if isinstance(other, (Ball, int, Rational)) and not isinstance(other, bool):
            return ComplexBall(self.re / other, self.im / other)
        other = _ccoerce(other, self.prec)
        if other is NotImplemented:
            return NotImplemented
        den = other.abs2()
        num = self * other.conjugate()
        return ComplexBall(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        return _ccoerce(other, self.prec) / self


def _ccoerce(x, prec):
    if isinstance(x, ComplexBall):
        return x
    if isinstance(x, Ball):
        return ComplexBall(x)
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, (int, Rational)):
        return ComplexBall(Ball.exact(x, prec))
    return NotImplemented


def ball_sum(terms, prec: int = DEFAULT_PREC):
    total = Ball(fzero, fzero, prec)
    for t in terms:
        total = total + t
    return total
