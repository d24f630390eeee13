"""Certified values of L(s, f) for periodic f, by several independent methods.

Every evaluator handles rational-valued f.  A function whose values lie in a
cyclotomic field Q(zeta_L) (a Dirichlet character, say) is split into its
power-basis coordinates f = sum_j f_j zeta_L^j; each f_j is rational and has
zero mean when f does, and L(s, f) = sum_j zeta_L^j L(s, f_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..core import PeriodicFunction, divisors, euler_phi, lcm_of, mobius, units
from ..errors import PoleError, PreconditionError
from .ball import DEFAULT_PREC, Ball, ComplexBall
from .special import (
    _inflate,
    digamma,
    euler_gamma,
    hurwitz_constant,
    hurwitz_zeta,
    log_one_minus_zeta,
)

METHODS = ("digamma", "hurwitz", "fourier_log", "partial_sum")


@dataclass(frozen=True)
class EvalReport:
    value: Ball | ComplexBall
    method: str
    precision_bits: int
    terms_used: int

    def contains_zero(self) -> bool:
        return self.value.contains_zero()

    def overlaps(self, other: EvalReport) -> bool:
        a, b = self.value, other.value
        if isinstance(a, ComplexBall) or isinstance(b, ComplexBall):
            return ComplexBall.exact(a).overlaps(ComplexBall.exact(b))
        return a.overlaps(b)


@dataclass(frozen=True)
class _Coordinates:
    """f split as sum_j zeta_L^j * rows[j], each row a rational function mod q."""

    modulus: int
    value_modulus: int
    rows: tuple[PeriodicFunction, ...]

    @property
    def real(self) -> bool:
        return all(r.is_zero() for r in self.rows[1:])

    def mean(self):
        if self.real:
            return self.rows[0].mean
        from ..cyclotomic import CyclotomicElement

        return CyclotomicElement(self.value_modulus, [r.mean for r in self.rows])


def _coordinates(f) -> _Coordinates:
    from ..characters import DirichletCharacter
    from ..cyclotomic import CyclotomicElement

    if isinstance(f, PeriodicFunction):
        return _Coordinates(f.modulus, 1, (f,))
    if isinstance(f, DirichletCharacter):
        values = [f(a) for a in range(1, f.modulus + 1)]
    else:
        values = list(f)
    q = len(values)
    if q == 0:
        raise PreconditionError("empty value table")
    elems = [v for v in values if isinstance(v, CyclotomicElement)]
    if not elems:
        return _Coordinates(q, 1, (PeriodicFunction(q, tuple(values)),))
    L = lcm_of(e.modulus for e in elems)
    lifted = []
    for v in values:
        if isinstance(v, CyclotomicElement):
            lifted.append(v.lift(L) if v.modulus != L else v)
        else:
            lifted.append(CyclotomicElement.rational(L, v))
    n = len(lifted[0].coeffs)
    rows = tuple(PeriodicFunction(q, tuple(v.coeffs[j] for v in lifted)) for j in range(n))
    return _Coordinates(q, L, rows)


def _combine(coords: _Coordinates, parts: list[Ball], prec: int):
    if coords.real:
        return parts[0]
    total = ComplexBall.exact(0, prec)
    for j, part in enumerate(parts):
        total = total + ComplexBall.root_of_unity(j, coords.value_modulus, prec) * part
    return total


# --- rational evaluators ----------------------------------------------------


def _l1_digamma(f: PeriodicFunction, prec: int, cache: dict) -> Ball:
    q = f.modulus
    total = Ball.exact(0, prec)
    for a in range(1, q + 1):
        fa = f(a)
        if fa:
            if a not in cache:
                cache[a] = digamma(Fraction(a, q), prec)
            total = total + cache[a] * fa
    return -total / q


def _l1_hurwitz(f: PeriodicFunction, prec: int, cache: dict) -> Ball:
    q = f.modulus
    total = Ball.exact(0, prec)
    for a in range(1, q + 1):
        fa = f(a)
        if fa:
            if a not in cache:
                cache[a] = hurwitz_constant(Fraction(a, q), prec)
            total = total + cache[a] * fa
    return total / q


def _l1_fourier(f: PeriodicFunction, prec: int, cache: dict) -> Ball:
    from ..cyclotomic import fourier_transform

    q = f.modulus
    hat = fourier_transform(f)
    total = ComplexBall.exact(0, prec)
    for b in range(1, q):
        h = hat(b)
        if h:
            if b not in cache:
                cache[b] = log_one_minus_zeta(b, q, prec)
            total = total + h.to_complex_ball(prec) * cache[b]
    if not total.im.contains_zero():
        raise AssertionError("imaginary part of a real L-value is separated from 0")
    return -total.re


def _l1_partial(f: PeriodicFunction, prec: int, terms: int) -> Ball:
    """Averaged partial sums with a certified tail.

    With F(n) = sum_{k<=n} f(k), Fbar its mean over a period, G = F - Fbar
    and H(n) = sum_{k<=n} G(k):
        L(1, f) = S_n + (Fbar - F(n)) / (n + 1) + R,
        |R| <= 2 max|H| / ((n + 1)(n + 2)).
    """
    q = f.modulus
    den = lcm_of(v.denominator for v in f.values)
    ints = [int(v * den) for v in f.values]
    W = prec + terms.bit_length() + 8
    acc = 0
    for k in range(1, terms + 1):
        c = ints[(k - 1) % q]
        if c:
            acc += (c << W) // k
    partial = Ball.from_fixed(acc, W, terms, prec + 8) / den

    F = []
    run = Fraction(0)
    for v in f.values:
        run += v
        F.append(run)
    Fbar = sum(F, Fraction(0)) / q
    H, hmax = Fraction(0), Fraction(0)
    for v in F:
        H += v - Fbar
        hmax = max(hmax, abs(H))
    Fn = F[(terms - 1) % q]
    n = terms
    corrected = partial + (Fbar - Fn) / (n + 1)
    return _inflate(corrected, 2 * hmax / ((n + 1) * (n + 2))).with_prec(prec)


def L1(f, precision_bits: int = DEFAULT_PREC, method: str = "digamma", terms: int = 100000) -> EvalReport:
    """L(1, f) as a certified ball.

    ``f`` may be a PeriodicFunction, a DirichletCharacter, or a sequence of
    rationals / CyclotomicElements (values at 1..q).  Methods:
    ``digamma`` (-q^-1 sum f(a) psi(a/q)), ``hurwitz`` (constant terms of
    zeta(s, a/q) at s = 1), ``fourier_log`` (-sum f^(b) Log(1 - zeta^b)) and
    ``partial_sum`` (slow; accuracy limited by ``terms``).
    """
    if method not in METHODS:
        raise PreconditionError(f"unknown method {method!r}; choose from {METHODS}")
    coords = _coordinates(f)
    if any(not r.zero_mean for r in coords.rows):
        raise PoleError(coords.mean())
    q = coords.modulus
    wp = precision_bits + 2 * q.bit_length() + 10
    cache: dict = {}
    parts = []
    for row in coords.rows:
        if row.is_zero():
            parts.append(Ball.exact(0, wp))
        elif method == "digamma":
            parts.append(_l1_digamma(row, wp, cache))
        elif method == "hurwitz":
            parts.append(_l1_hurwitz(row, wp, cache))
        elif method == "fourier_log":
            parts.append(_l1_fourier(row, wp, cache))
        else:
            parts.append(_l1_partial(row, wp, terms))
    used = terms if method == "partial_sum" else len(cache)
    value = _combine(coords, parts, wp)
    return EvalReport(_with_prec(value, precision_bits), method, precision_bits, used)


def _with_prec(x, prec):
    if isinstance(x, ComplexBall):
        return ComplexBall(x.re.with_prec(prec), x.im.with_prec(prec))
    return x.with_prec(prec)


def L_s(f, s, precision_bits: int = DEFAULT_PREC) -> EvalReport:
    """L(s, f) = q^-s sum f(a) zeta(s, a/q) for real rational s > 0, s != 1."""
    s = Fraction(s)
    if s == 1:
        raise PreconditionError("s = 1: use L1")
    if s <= 0:
        raise PreconditionError("s must be positive")
    coords = _coordinates(f)
    q = coords.modulus
    wp = precision_bits + 2 * q.bit_length() + 10
    zetas = {}
    parts = []
    for row in coords.rows:
        total = Ball.exact(0, wp)
        for a in range(1, q + 1):
            fa = row(a)
            if fa:
                if a not in zetas:
                    zetas[a] = hurwitz_zeta(s, Fraction(a, q), wp)
                total = total + zetas[a] * fa
        parts.append(total)
    if s.denominator == 1:
        qs = Ball.exact(Fraction(1, q ** int(s)), wp)
    else:
        qs = (Ball.log_of_rational(q, wp) * (-s)).exp()
    parts = [p * qs for p in parts]
    value = _combine(coords, parts, wp)
    return EvalReport(_with_prec(value, precision_bits), "hurwitz", precision_bits, len(zetas))


# --- checks built on the digamma function -------------------------------------


def lemma4_check(q: int, precision_bits: int = DEFAULT_PREC) -> tuple[Ball, Ball, bool]:
    """(sum over units a of psi(a/q), -gamma phi(q), sum certainly below bound)."""
    if q < 2:
        raise PreconditionError("needs q >= 2")
    wp = precision_bits + q.bit_length() + 8
    total = Ball.exact(0, wp)
    for a in units(q):
        total = total + digamma(Fraction(a, q), wp)
    bound = -euler_gamma(wp) * euler_phi(q)
    return total.with_prec(precision_bits), bound.with_prec(precision_bits), total.definitely_less(bound)


def g_function(q: int) -> PeriodicFunction:
    """1 on the units, -phi(q) at the residue 0, 0 elsewhere."""
    vals = [Fraction(1) if gcd(a, q) == 1 else Fraction(0) for a in range(1, q + 1)]
    vals[-1] = Fraction(-euler_phi(q))
    return PeriodicFunction(q, tuple(vals))


def divisor_log_identity(q: int, precision_bits: int = DEFAULT_PREC) -> tuple[Ball, Ball, bool]:
    """L(1, g) for g = :func:`g_function` against q^-1 sum_{d|q} mu(q/d) d log d."""
    if q < 2:
        raise PreconditionError("needs q >= 2")
    lhs = L1(g_function(q), precision_bits).value
    wp = precision_bits + 16
    rhs = Ball.exact(0, wp)
    for d in divisors(q):
        mu = mobius(q // d)
        if mu and d > 1:
            rhs = rhs + Ball.log_of_rational(d, wp) * (mu * d)
    rhs = (rhs / q).with_prec(precision_bits)
    return lhs, rhs, lhs.overlaps(rhs)


@dataclass(frozen=True)
class DigammaDeterminant:
    """Data for the determinant of [psi((x y^-1 mod q) / q)] over units x, y.

    ``character_sums[chi]`` is sum_x chi(x) psi(x/q); ``l_values[chi]`` is
    L(1, chi) for the non-principal characters.
    """

    modulus: int
    determinant: ComplexBall
    character_product: ComplexBall
    psi_sum: Ball
    l_values: dict
    character_sums: dict

    def l_value_product(self, factor) -> ComplexBall:
        """psi_sum * prod_{chi != chi_0} factor * L(1, chi)."""
        out = ComplexBall.exact(self.psi_sum)
        for val in self.l_values.values():
            out = out * (ComplexBall.exact(val) * factor)
        return out


def digamma_determinant(q: int, precision_bits: int = DEFAULT_PREC) -> DigammaDeterminant:
    from ..characters import dedekind_determinant, enumerate_characters

    if q < 2:
        raise PreconditionError("needs q >= 2")
    wp = precision_bits + 4 * q.bit_length() + 16
    psi = {a: digamma(Fraction(a, q), wp) for a in units(q)}
    det, prod = dedekind_determinant(q, lambda a: psi[a], wp)
    sums, lvals = {}, {}
    psi_sum = Ball.exact(0, wp)
    for a in units(q):
        psi_sum = psi_sum + psi[a]
    for chi in enumerate_characters(q):
        s = ComplexBall.exact(0, wp)
        for a in units(q):
            s = s + chi.complex_value(a, wp) * psi[a]
        sums[chi] = s
        if not chi.is_principal():
            lvals[chi] = L1(chi, wp).value
    return DigammaDeterminant(q, det, prod, psi_sum, lvals, sums)
