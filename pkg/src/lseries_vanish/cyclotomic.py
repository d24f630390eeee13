"""Exact arithmetic in Q(zeta_q), finite Fourier transforms and the product criterion.

Elements are stored on the power basis 1, zeta, ..., zeta^(phi(q)-1) and kept
reduced modulo the q-th cyclotomic polynomial, so equality is coefficient
equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Sequence

from mpmath.libmp.backend import MPZ

from .core import (
    PeriodicFunction,
    as_fraction,
    check_modulus,
    divisors,
    euler_phi,
    is_prime,
    lcm_of,
    prime_divisors,
)
from .errors import PoleError, PrecisionExhausted, PreconditionError

# --- polynomials --------------------------------------------------------------
# Integer and rational polynomials are lists of coefficients, constant first.


def _poly_divmod_monic(num: list, den: Sequence[int]) -> tuple[list, list]:
    """Quotient and remainder of num by a monic den."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for k in range(dd + 1):
                num[i - dd + k] -= c * den[k]
    rem = num[:dd] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_q, constant term first.

    Obtained by dividing x^q - 1 by Phi_d for every proper divisor d of q.
    """
    check_modulus(q)
    poly = [-1] + [0] * (q - 1) + [1]
    for d in divisors(q)[:-1]:
        poly, rem = _poly_divmod_monic(poly, cyclotomic_polynomial(d))
        assert not any(rem)
    assert len(poly) - 1 == euler_phi(q)
    return tuple(poly)


@lru_cache(maxsize=256)
def _power_table(q: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of zeta_q^k for k = 0..q-1."""
    phi = cyclotomic_polynomial(q)
    n = len(phi) - 1
    table = []
    cur = [1] + [0] * (n - 1)
    for _ in range(q):
        table.append(tuple(cur))
        # multiply by x, then reduce the x^n term with the monic Phi_q
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(table)


def _fold(vec: Sequence, q: int) -> list:
    """Reduce sum_k vec[k] zeta^k (any length) to power-basis coordinates."""
    table = _power_table(q)
    n = len(table[0])
    out = [0] * n
    for k, c in enumerate(vec):
        if c:
            row = table[k % q]
            for i in range(n):
                if row[i]:
                    out[i] += c * row[i]
    return out


def _mul_coeffs(a: Sequence, b: Sequence, q: int) -> list:
    conv = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
    return _fold(conv, q)


def _poly_trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Division over Q with Fraction coefficients."""
    num = [Fraction(c) for c in num]
    den = _poly_trim([Fraction(c) for c in den])
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        return [Fraction(0)], _poly_trim(num)
    quot = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        if c:
            quot[i - dd] = c
            for k in range(dd + 1):
                num[i - dd + k] -= c * den[k]
    return _poly_trim(quot), _poly_trim(num[:dd] or [Fraction(0)])


def _poly_sub_mul(a: list, q: list, b: list) -> list:
    """a - q*b."""
    out = [Fraction(c) for c in a] + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        for j, y in enumerate(b):
            out[i + j] -= x * y
    return _poly_trim(out)


# --- field elements -----------------------------------------------------------


class CyclotomicElement:
    """An element of Q(zeta_q) in power-basis coordinates."""

    __slots__ = ("modulus", "coeffs", "_hash")

    def __init__(self, modulus: int, coeffs: Sequence):
        check_modulus(modulus, None)
        n = euler_phi(modulus)
        vals = tuple(as_fraction(c) for c in coeffs)
        if len(vals) != n:
            raise PreconditionError(f"expected {n} coordinates for modulus {modulus}, got {len(vals)}")
        self.modulus = modulus
        self.coeffs = vals
        self._hash = None

    # constructors

    @classmethod
    def from_exponents(cls, q: int, vec: Sequence) -> CyclotomicElement:
        """sum_k vec[k] zeta_q^k for arbitrary k (reduced mod q)."""
        return cls(q, _fold([as_fraction(v) for v in vec], q))

    @classmethod
    def rational(cls, q: int, value) -> CyclotomicElement:
        n = euler_phi(q)
        return cls(q, [as_fraction(value)] + [0] * (n - 1))

    @classmethod
    def zeta(cls, q: int, k: int = 1) -> CyclotomicElement:
        return cls(q, _power_table(q)[k % q])

    @classmethod
    def zero(cls, q: int) -> CyclotomicElement:
        return cls.rational(q, 0)

    @classmethod
    def one(cls, q: int) -> CyclotomicElement:
        return cls.rational(q, 1)

    # inspection

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise PreconditionError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.modulus, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"CyclotomicElement({self.modulus}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return body

    # arithmetic

    def _other(self, other) -> CyclotomicElement | None:
        if isinstance(other, CyclotomicElement):
            if other.modulus != self.modulus:
                raise PreconditionError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}; lift first"
                )
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return CyclotomicElement.rational(self.modulus, other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.modulus, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.modulus, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.modulus, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            c = Fraction(other)
            return CyclotomicElement(self.modulus, [c * a for a in self.coeffs])
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.modulus, _mul_coeffs(self.coeffs, o.coeffs, self.modulus))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicElement:
        """Multiplicative inverse by the extended Euclidean algorithm against Phi_q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_q)")
        if self.is_rational():
            return CyclotomicElement.rational(self.modulus, 1 / self.coeffs[0])
        r0, r1 = list(cyclotomic_polynomial(self.modulus)), _poly_trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        # invariant: r_i = s_i * self (mod Phi_q)
        while not (len(r1) == 1 and r1[0] == 0):
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub_mul(s0, quo, s1)
        # r0 is a nonzero constant since Phi_q is irreducible
        assert len(r0) == 1
        inv = [c / r0[0] for c in s0]
        return CyclotomicElement.from_exponents(self.modulus, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._other(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicElement.one(self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # automorphisms and embeddings

    def galois(self, a: int) -> CyclotomicElement:
        """sigma_a: zeta -> zeta^a for a unit a."""
        q = self.modulus
        if gcd(a, q) != 1:
            raise PreconditionError(f"{a} is not a unit modulo {q}")
        vec = [Fraction(0)] * q
        for j, c in enumerate(self.coeffs):
            vec[(a * j) % q] += c
        return CyclotomicElement.from_exponents(q, vec)

    def conjugate(self) -> CyclotomicElement:
        return self.galois(-1)

    def lift(self, m: int) -> CyclotomicElement:
        """The same number as an element of Q(zeta_m), for q | m."""
        q = self.modulus
        if m % q:
            raise PreconditionError(f"cannot lift from modulus {q} to {m}")
        step = m // q
        vec = [Fraction(0)] * m
        for j, c in enumerate(self.coeffs):
            vec[j * step] += c
        return CyclotomicElement.from_exponents(m, vec)

    def to_complex_ball(self, prec: int = 128):
        from .numeric.ball import ComplexBall

        q = self.modulus
        total = ComplexBall.exact(0, prec)
        for j, c in enumerate(self.coeffs):
            if c:
                total = total + ComplexBall.root_of_unity(j, q, prec) * c
        return total


def cyc_add(x: CyclotomicElement, y: CyclotomicElement) -> CyclotomicElement:
    return x + y


def cyc_mul(x: CyclotomicElement, y: CyclotomicElement) -> CyclotomicElement:
    return x * y


def cyc_pow(x: CyclotomicElement, k: int) -> CyclotomicElement:
    if k < 0:
        raise PreconditionError("cyc_pow takes a nonnegative exponent; use cyc_invert")
    return x**k


def cyc_invert(x: CyclotomicElement) -> CyclotomicElement:
    return x.inverse()


def galois_apply(x: CyclotomicElement, a: int) -> CyclotomicElement:
    return x.galois(a)


def common_modulus(*elems: CyclotomicElement) -> list[CyclotomicElement]:
    """Lift elements to Q(zeta_m) with m the lcm of their moduli."""
    m = lcm_of(e.modulus for e in elems)
    return [e.lift(m) if e.modulus != m else e for e in elems]


# --- Fourier transform ------------------------------------------------------


@dataclass(frozen=True)
class FourierCoefficients:
    """hat[b - 1] holds f^(b) for b = 1..q."""

    modulus: int
    hat: tuple[CyclotomicElement, ...]

    def __call__(self, b: int) -> CyclotomicElement:
        return self.hat[(b - 1) % self.modulus]

    def __iter__(self):
        return iter(self.hat)

    def __len__(self):
        return self.modulus


def fourier_transform(f: PeriodicFunction) -> FourierCoefficients:
    """f^(b) = q^{-1} sum_a f(a) zeta^{-ab}, exactly."""
    q = f.modulus
    hats = []
    for b in range(1, q + 1):
        vec = [Fraction(0)] * q
        for a in range(1, q + 1):
            fa = f(a)
            if fa:
                vec[(-a * b) % q] += fa
        hats.append(CyclotomicElement.from_exponents(q, vec) * Fraction(1, q))
    return FourierCoefficients(q, tuple(hats))


def fourier_inverse(F: FourierCoefficients) -> PeriodicFunction:
    """f(b) = sum_a f^(a) zeta^{ab}; every value must come out rational."""
    q = F.modulus
    values = []
    for b in range(1, q + 1):
        vec = [Fraction(0)] * q
        for a in range(1, q + 1):
            for j, c in enumerate(F(a).coeffs):
                if c:
                    vec[(j + a * b) % q] += c
        value = CyclotomicElement.from_exponents(q, vec)
        if not value.is_rational():
            raise PreconditionError(
                f"inverse transform at b={b} is not rational; coefficients are corrupted"
            )
        values.append(value.coeffs[0])
    return PeriodicFunction(q, tuple(values))


def coefficient_matrix(f: PeriodicFunction) -> list[list[Fraction]]:
    """Rows b = 1..q-1 of power-basis coordinates of f^(b); needs zero mean."""
    if not f.zero_mean:
        raise PoleError(f.mean)
    hat = fourier_transform(f)
    return [list(hat(b).coeffs) for b in range(1, f.modulus)]


# --- product criterion ------------------------------------------------------


@lru_cache(maxsize=256)
def _prime_with_root(q: int) -> tuple[int, int]:
    """A prime p = 1 (mod q) above 2^61 and a primitive q-th root of unity mod p."""
    k = (2**61) // q + 1
    while not is_prime(k * q + 1):
        k += 1
    p = k * q + 1
    rng = random.Random(q)
    ells = prime_divisors(q)
    while True:
        w = pow(rng.randrange(2, p - 1), (p - 1) // q, p)
        if all(pow(w, q // ell, p) != 1 for ell in ells):
            return p, w


def _one_minus_zeta_int(q: int, b: int) -> list[int]:
    vec = [0] * q
    vec[0] += 1
    vec[b % q] -= 1
    # GMP-backed integers when available: the products get very large
    return [MPZ(c) for c in _fold(vec, q)]


def _multi_power(bases: list[list[int]], exps: list[int], q: int) -> list[int]:
    """prod bases[i]^exps[i] with shared squarings (exponents >= 0)."""
    n = euler_phi(q)
    result = [MPZ(1)] + [MPZ(0)] * (n - 1)
    top = max((e.bit_length() for e in exps), default=0)
    for bit in range(top - 1, -1, -1):
        result = _mul_coeffs(result, result, q)
        for base, e in zip(bases, exps):
            if (e >> bit) & 1:
                result = _mul_coeffs(result, base, q)
    return result


@dataclass
class Theorem1Result:
    """Outcome of the product criterion.

    ``exponents[j][b-1]`` is N * c_bj for the integer primitive of f (f scaled
    to coprime integer values), so every exponent is an integer and N | q.
    ``root_of_unity_indices[j]`` is the lattice index k_j with
    lambda_j = 2 pi i k_j / N, or None when P_j != 1.
    """

    vanishing: bool
    modulus: int
    exponent_scale: int
    exponents: list[list[int]]
    products_are_one: list[bool]
    root_of_unity_indices: list[int | None]
    precision_used: int | None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def exact_products(self) -> list[CyclotomicElement]:
        """P_j as field elements (computed on first access)."""
        if "products" not in self._cache:
            q = self.modulus
            bases = [_one_minus_zeta_int(q, b) for b in range(1, q)]
            out = []
            for row in self.exponents:
                num = _multi_power(bases, [max(e, 0) for e in row], q)
                den = _multi_power(bases, [max(-e, 0) for e in row], q)
                out.append(CyclotomicElement(q, num) / CyclotomicElement(q, den))
            self._cache["products"] = out
        return self._cache["products"]


def theorem1_decide(
    f: PeriodicFunction, precision_bits: int = 128, max_precision: int = 16384
) -> Theorem1Result:
    """Decide L(1, f) = 0 through the multiplicative relations among 1 - zeta^b.

    For every basis index j, P_j = prod_b (1 - zeta^b)^(N c_bj) is compared
    with 1 exactly (a reduction modulo a large split prime screens out the
    common P_j != 1 case first; it can only prove inequality).  When all P_j
    are 1, lambda_j = sum_b c_bj Log(1 - zeta^b) lies on the lattice
    (2 pi i / N) Z and is located with a certified ball of radius below
    pi / (2N); L(1, f) vanishes iff every lambda_j is 0.
    """
    from .numeric.ball import Ball
    from .numeric.special import log_one_minus_zeta

    if not f.zero_mean:
        raise PoleError(f.mean)
    q = f.modulus
    n = euler_phi(q)
    _, g = f.integer_primitive()
    cmat = coefficient_matrix(g) if q > 1 else []
    N = lcm_of(c.denominator for row in cmat for c in row)
    if q % N:
        raise AssertionError(f"exponent denominator {N} does not divide {q}")
    exps = [[int(cmat[b - 1][j] * N) for b in range(1, q)] for j in range(n)]
    if q == 1:
        exps = [[]]

    # screen modulo p: P_j(omega) != 1 proves P_j != 1
    ones = [True] * n
    if q > 1:
        p, w = _prime_with_root(q)
        factors = [(1 - pow(w, b, p)) % p for b in range(1, q)]
        for j, row in enumerate(exps):
            num = den = 1
            for x, e in zip(factors, row):
                if e > 0:
                    num = num * pow(x, e, p) % p
                elif e < 0:
                    den = den * pow(x, -e, p) % p
            ones[j] = num == den
    if q > 1 and all(ones):
        bases = [_one_minus_zeta_int(q, b) for b in range(1, q)]
        for j, row in enumerate(exps):
            num = _multi_power(bases, [max(e, 0) for e in row], q)
            den = _multi_power(bases, [max(-e, 0) for e in row], q)
            ones[j] = num == den
            if not ones[j]:
                break
    if not all(ones):
        return Theorem1Result(False, q, N, exps, ones, [None] * n, None)

    prec = precision_bits
    while True:
        try:
            indices = _lattice_indices(q, N, exps, prec, Ball, log_one_minus_zeta)
            break
        except PrecisionExhausted:
            if prec >= max_precision:
                raise
            prec = min(2 * prec, max_precision)
    return Theorem1Result(all(k == 0 for k in indices), q, N, exps, ones, indices, prec)


def _lattice_indices(q, N, exps, prec, Ball, log_one_minus_zeta) -> list[int]:
    logs = [log_one_minus_zeta(b, q, prec + 16) for b in range(1, q)]
    two_pi = Ball.pi(prec + 16) * 2
    half_gap = Ball.pi(prec + 16) / (2 * N)
    out = []
    for row in exps:
        re = Ball.exact(0, prec + 16)
        im = Ball.exact(0, prec + 16)
        for lg, e in zip(logs, row):
            if e:
                # lambda_j = sum_b c_bj Log(1 - zeta^b) with c_bj = e / N
                re = re + lg.re * Fraction(e, N)
                im = im + lg.im * Fraction(e, N)
        if not re.rad_lt(half_gap) or not im.rad_lt(half_gap):
            raise PrecisionExhausted(f"lattice radius not reached at {prec} bits")
        if not re.contains_zero():
            raise AssertionError("P_j = 1 but the real part of lambda_j is nonzero")
        t = im * N / two_pi
        k = round(t.mid_fraction())
        # certify: |im - 2 pi k / N| < pi / N leaves k as the only lattice point
        diff = im - two_pi * Fraction(k, N)
        if not (abs(diff).definitely_less(half_gap * 2)):
            raise PrecisionExhausted("lattice point not isolated")
        out.append(int(k))
    return out
