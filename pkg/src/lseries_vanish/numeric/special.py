"""Certified special functions: Euler's constant, digamma, Hurwitz zeta.

Error budgets (all rigorous, folded into the returned radius):

* ``euler_gamma`` -- Brent-McMillan with exact rational partial sums; the
  method error is below pi*exp(-4n) and the truncated tails are bounded by a
  geometric series once k >= 2n (term ratio n^2/k^2 <= 1/4).
* ``digamma`` -- upward recurrence to z = x + N >= W/8 + 2, then the
  asymptotic series.  For real z > 0 the remainder after K Bernoulli terms is
  bounded by the first omitted term.  Evaluated in fixed point with W = prec
  + 24 bits; every truncating division contributes at most one unit.
* ``hurwitz_zeta`` -- Euler-Maclaurin with N shifted terms and M Bernoulli
  terms; remainder bounded by 4 |(s)_{2M}| / (2 pi)^{2M} *
  (N + x)^{-(s + 2M - 1)} / (s + 2M - 1), valid for real s with s + 2M > 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil

from mpmath import bernfrac
from mpmath.libmp import from_rational, mpf_log, round_nearest, to_fixed

from ..errors import PreconditionError
from .ball import DEFAULT_PREC, Ball, ComplexBall

# rational lower bound for 2*pi
_TWO_PI_LOW = Fraction(2 * 314159, 100000)


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    p, q = bernfrac(n)
    return Fraction(int(p), int(q))


def _inflate(ball: Ball, err: Fraction) -> Ball:
    """Add a rational error bound to the radius."""
    return ball + _error_ball(err, ball.prec)


def _error_ball(err: Fraction, prec: int) -> Ball:
    e = Ball.exact(abs(Fraction(err)), 53)
    # [0 +/- (|err| rounded up)]
    hi = e.upper
    return Ball(Ball.exact(0).mid, hi, prec)


# --- Euler's constant ---------------------------------------------------------


@lru_cache(maxsize=32)
def euler_gamma(prec: int = DEFAULT_PREC) -> Ball:
    """Euler's constant with radius below 2^-prec."""
    if prec < 16:
        raise PreconditionError("precision must be at least 16 bits")
    W = prec + 8
    n = ceil((W + 4) * 0.6931471805599453 / 4) + 1
    n2 = n * n
    B = Fraction(1)
    H = Fraction(0)
    P = Fraction(0)  # sum B_k H_k
    V = Fraction(1)  # sum B_k
    k = 0
    target = Fraction(1, 2 ** (W + 4))
    while True:
        k += 1
        B = B * n2 / (k * k)
        H += Fraction(1, k)
        P += B * H
        V += B
        if k >= 2 * n and B * (H + 1) / V < target:
            break
    tail_V = B / 3
    tail_P = B * (H + 1) / 2
    ratio = P / V
    trunc = tail_P / V + ratio * tail_V / V
    # pi * exp(-4n) < 4 * 2^(-5.77 n)
    method = Fraction(4, 2 ** int(5.77 * n))
    wp = prec + 16
    gamma = Ball.exact(ratio, wp) - Ball.log_of_rational(n, wp)
    return _inflate(gamma, trunc + method).with_prec(prec)


# --- digamma -----------------------------------------------------------------


@lru_cache(maxsize=64)
def _digamma_plan(W: int):
    """(zmin, [(k, B_2k / (2k))...]) for a working precision of W bits."""
    zmin = W // 8 + 2
    coeffs = []
    k = 1
    while True:
        c = bernoulli(2 * k) / (2 * k)
        coeffs.append(c)
        nxt = abs(bernoulli(2 * k + 2)) / (2 * k + 2)
        # first omitted term at z = zmin
        if nxt * 2 ** (W + 2) < zmin ** (2 * k + 2):
            break
        k += 1
        if k > 4 * zmin:
            raise AssertionError("asymptotic series plan did not converge")
    return zmin, tuple(coeffs)


def digamma(x, prec: int = DEFAULT_PREC) -> Ball:
    """psi(x) for a positive rational x, radius below 2^-prec."""
    x = Fraction(x)
    if x <= 0:
        raise PreconditionError(f"digamma needs x > 0, got {x}")
    W = prec + 24
    zmin, coeffs = _digamma_plan(W)
    n, d = x.numerator, x.denominator
    N = max(0, ceil(zmin - x))
    Z = n + N * d  # z = Z / d
    one = 1 << W

    acc = 0
    err = 0
    for j in range(N):
        acc -= (d << W) // (n + j * d)
        err += 1

    lnz = mpf_log(from_rational(Z, d, W + 16, round_nearest), W + 16, round_nearest)
    acc += to_fixed(lnz, W)
    err += 3
    acc -= (d << W) // (2 * Z)
    err += 1

    dpow, Zpow = 1, 1
    d2, Z2 = d * d, Z * Z
    for k, c in enumerate(coeffs, start=1):
        dpow *= d2
        Zpow *= Z2
        acc -= (c.numerator * dpow * one) // (c.denominator * Zpow)
        err += 1
    K = len(coeffs)
    nxt = abs(bernoulli(2 * K + 2)) / (2 * K + 2)
    dpow *= d2
    Zpow *= Z2
    rem = -((-nxt.numerator * dpow * one) // (nxt.denominator * Zpow))  # ceil
    err += rem + 1
    return Ball.from_fixed(acc, W, err, prec)


def digamma_series(x, terms: int = 20000, prec: int = 64) -> Ball:
    """Slow oracle: -psi(x) = gamma + 1/x - sum_{n>=1} x / (n (n + x)).

    The tail beyond ``terms`` lies in [log(1 + x/(M+1)), log(1 + x/M)].
    """
    x = Fraction(x)
    if x <= 0:
        raise PreconditionError(f"digamma needs x > 0, got {x}")
    W = prec + 16
    n, d = x.numerator, x.denominator
    acc = 0
    for m in range(1, terms + 1):
        # x / (m (m + x)) = n / (m (m d + n))
        acc += (n << W) // (m * (m * d + n))
    partial = Ball.from_fixed(acc, W, terms, prec + 8)
    M = terms
    lo = Ball.log_of_rational(1 + x / (M + 1), prec + 8)
    hi = Ball.log_of_rational(1 + x / M, prec + 8)
    mid = (lo + hi) * Fraction(1, 2)
    half = (hi - lo) * Fraction(1, 2)
    tail = _inflate(mid, Fraction(*_upper_rational(half)))
    return -(euler_gamma(prec + 8) + Fraction(1) / x - partial - tail).with_prec(prec)


def _upper_rational(ball: Ball):
    from mpmath.libmp import to_rational

    return to_rational(ball.upper)


# --- Hurwitz zeta -------------------------------------------------------------


def _rising(s: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= s + i
    return out


def _rpow(base: Fraction, s: Fraction, prec: int) -> Ball:
    """base ** (-s) for a positive rational base."""
    if s.denominator == 1:
        return Ball.exact(base ** (-int(s)), prec)
    return (Ball.log_of_rational(base, prec) * (-s)).exp()


def _em_remainder(s: Fraction, M: int, a: Fraction) -> Fraction:
    """Upper bound for the Euler-Maclaurin remainder, a = N + x >= 1."""
    e = s + 2 * M - 1
    if e <= 0:
        return None
    e_floor = Fraction(s.numerator // s.denominator) + 2 * M - 1
    bound = 4 * abs(_rising(s, 2 * M)) / _TWO_PI_LOW ** (2 * M) / e
    if e_floor > 0:
        bound /= a ** int(e_floor)
    return bound


def _em_plan(s: Fraction, prec: int):
    N = max(10, prec // 6 + 4)
    target = Fraction(1, 2 ** (prec + 8))
    M = 1
    while True:
        r = _em_remainder(s, M, Fraction(N))
        if r is not None and r < target:
            return N, M
        M += 1
        if M > 4 * N:
            N *= 2
            M = 1


def hurwitz_zeta(s, x, prec: int = DEFAULT_PREC) -> Ball:
    """zeta(s, x) = sum_{n>=0} (n + x)^-s for real rational s != 1, x > 0."""
    s = Fraction(s)
    x = Fraction(x)
    if s == 1:
        raise PreconditionError("zeta(s, x) has a pole at s = 1")
    if x <= 0:
        raise PreconditionError(f"hurwitz_zeta needs x > 0, got {x}")
    wp = prec + 20
    N, M = _em_plan(s, wp)
    total = Ball.exact(0, wp)
    for n in range(N):
        total = total + _rpow(n + x, s, wp)
    a = N + x
    a_s = _rpow(a, s, wp)
    total = total + a_s * a / (s - 1) + a_s * Fraction(1, 2)
    for k in range(1, M + 1):
        coeff = bernoulli(2 * k) / _factorial(2 * k) * _rising(s, 2 * k - 1)
        total = total + a_s * (coeff / a ** (2 * k - 1))
    return _inflate(total, _em_remainder(s, M, a)).with_prec(prec)


def hurwitz_constant(x, prec: int = DEFAULT_PREC) -> Ball:
    """lim_{s->1} (zeta(s, x) - 1/(s - 1)), evaluated by Euler-Maclaurin.

    Equals -psi(x); used as an evaluator independent of :func:`digamma`.
    """
    x = Fraction(x)
    if x <= 0:
        raise PreconditionError(f"hurwitz_constant needs x > 0, got {x}")
    wp = prec + 20
    s = Fraction(1)
    N, M = _em_plan(s, wp)
    total = Ball.exact(sum(Fraction(1) / (n + x) for n in range(N)), wp)
    a = N + x
    total = total - Ball.log_of_rational(a, wp) + Fraction(1) / (2 * a)
    for k in range(1, M + 1):
        total = total + bernoulli(2 * k) / (2 * k) / a ** (2 * k)
    return _inflate(total, _em_remainder(s, M, a)).with_prec(prec)


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    return 1 if n < 2 else n * _factorial(n - 1)


# --- logarithms on the unit circle -------------------------------------------


def log_one_minus_zeta(b: int, q: int, prec: int = DEFAULT_PREC) -> ComplexBall:
    """Principal log of 1 - exp(2 pi i b / q) = ln(2 sin(pi b/q)) + i(pi b/q - pi/2)."""
    if q < 1 or b % q == 0:
        raise PreconditionError("log(1 - zeta^b) is undefined for b = 0 mod q")
    b %= q
    wp = prec + 10
    _, sin = Ball.cos_sin_pi(Fraction(b, q), wp)
    re = (sin * 2).log()
    im = Ball.pi(wp) * Fraction(2 * b - q, 2 * q)
    return ComplexBall(re.with_prec(prec), im.with_prec(prec))
