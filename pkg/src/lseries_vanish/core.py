"""Rational scalars, elementary number theory and periodic arithmetic functions.

Residues are stored 1..q; the slot for ``a = q`` holds the value at the
residue class 0, so ``f(q) == f(0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

from .errors import ModulusTooLarge, PreconditionError

DEFAULT_MODULUS_CAP = 10**6

Factorization = tuple[tuple[int, int], ...]


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions and rational strings ("3", "-7/12") exactly.

    Floats are refused: they would silently introduce binary rounding.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational values")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def check_modulus(q: int, cap: int | None = 0) -> int:
    """Validate a modulus; ``cap=0`` means the current DEFAULT_MODULUS_CAP, None disables."""
    if cap == 0:
        cap = DEFAULT_MODULUS_CAP
    if not isinstance(q, int) or isinstance(q, bool):
        raise TypeError("modulus must be an int")
    if q < 1:
        raise PreconditionError(f"modulus must be positive, got {q}")
    if cap is not None and q > cap:
        raise ModulusTooLarge(f"modulus {q} exceeds cap {cap}")
    return q


# --- elementary number theory -------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Prime factorization as ((p, e), ...) with p increasing; factorize(1) == ()."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"factorize needs a positive integer, got {n!r}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p = 5
    while p * p <= n:
        for cand in (p, p + 2):
            if n % cand == 0:
                e = 0
                while n % cand == 0:
                    n //= cand
                    e += 1
                out.append((cand, e))
        p += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def v_p(n: int, p: int) -> int:
    """Exponent of the prime p in n (n > 0)."""
    if not is_prime(p):
        raise PreconditionError(f"v_p needs a prime, got {p}")
    if n <= 0:
        raise PreconditionError(f"v_p needs a positive integer, got {n}")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/mZ)^*; the order of anything modulo 1 is 1."""
    if m < 1:
        raise PreconditionError("modulus must be positive")
    if m == 1:
        return 1
    if gcd(a, m) != 1:
        raise PreconditionError(f"{a} is not a unit modulo {m}")
    order = euler_phi(m)
    for p, e in factorize(order):
        for _ in range(e):
            if pow(a, order // p, m) == 1:
                order //= p
            else:
                break
    return order


def units(q: int) -> list[int]:
    """Residues 1..q coprime to q (for q = 1 this is [1])."""
    return [a for a in range(1, q + 1) if gcd(a, q) == 1]


def lcm_of(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


# --- periodic functions -------------------------------------------------------


@dataclass(frozen=True)
class PeriodicFunction:
    """A rational-valued function on the integers with period ``modulus``.

    ``values[a - 1]`` is f(a) for a = 1..q.
    """

    modulus: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        check_modulus(self.modulus)
        vals = tuple(as_fraction(v) for v in self.values)
        if len(vals) != self.modulus:
            raise PreconditionError(
                f"expected {self.modulus} values, got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_values(cls, values: Sequence) -> PeriodicFunction:
        return cls(len(values), tuple(values))

    @classmethod
    def zero(cls, q: int) -> PeriodicFunction:
        return cls(q, (Fraction(0),) * q)

    @classmethod
    def indicator(cls, q: int, a: int) -> PeriodicFunction:
        vals = [Fraction(0)] * q
        vals[(a - 1) % q] = Fraction(1)
        return cls(q, tuple(vals))

    def __call__(self, n: int) -> Fraction:
        return self.values[(n - 1) % self.modulus]

    def __len__(self):
        return self.modulus

    def __iter__(self):
        return iter(self.values)

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    @property
    def mean(self) -> Fraction:
        """The residue q^{-1} sum f(a) of L(s, f) at s = 1."""
        return self.total / self.modulus

    @property
    def zero_mean(self) -> bool:
        return self.total == 0

    def is_zero(self) -> bool:
        return not any(self.values)

    def _check_same(self, other: PeriodicFunction):
        if not isinstance(other, PeriodicFunction):
            return NotImplemented
        if other.modulus != self.modulus:
            raise PreconditionError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )
        return None

    def __add__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return PeriodicFunction(
            self.modulus, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __sub__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return PeriodicFunction(
            self.modulus, tuple(a - b for a, b in zip(self.values, other.values))
        )

    def __neg__(self):
        return PeriodicFunction(self.modulus, tuple(-a for a in self.values))

    def __mul__(self, scalar):
        c = as_fraction(scalar)
        return PeriodicFunction(self.modulus, tuple(c * a for a in self.values))

    __rmul__ = __mul__

    def integer_primitive(self) -> tuple[Fraction, PeriodicFunction]:
        """Return (c, g) with f = c * g, g integer-valued with content 1.

        The zero function returns (1, zero).
        """
        if self.is_zero():
            return Fraction(1), self
        den = lcm_of(v.denominator for v in self.values)
        ints = [int(v * den) for v in self.values]
        content = 0
        for v in ints:
            content = gcd(content, v)
        scale = Fraction(content, den)
        return scale, PeriodicFunction(self.modulus, tuple(v // content for v in ints))

    def __str__(self):
        return f"({', '.join(str(v) for v in self.values)}) mod {self.modulus}"


def dilate(f: PeriodicFunction, a: int) -> PeriodicFunction:
    """f_a(b) = f(a b) for a unit a modulo q."""
    q = f.modulus
    if gcd(a, q) != 1:
        raise PreconditionError(f"dilation factor {a} is not a unit modulo {q}")
    return PeriodicFunction(q, tuple(f(a * b) for b in range(1, q + 1)))


def even_odd_split(f: PeriodicFunction) -> tuple[PeriodicFunction, PeriodicFunction]:
    q = f.modulus
    even = [(f(a) + f(-a)) / 2 for a in range(1, q + 1)]
    odd = [(f(a) - f(-a)) / 2 for a in range(1, q + 1)]
    return PeriodicFunction(q, tuple(even)), PeriodicFunction(q, tuple(odd))


def inner_product(f: PeriodicFunction, g):
    """(f, g) = phi(q)^{-1} sum over units a of f(a) * conj(g(a)).

    ``g`` may be a PeriodicFunction (rational result) or anything callable with
    a ``modulus`` whose values support ``conjugate()``, e.g. a Dirichlet
    character, in which case the result lives in the field of g's values.
    """
    if g.modulus != f.modulus:
        raise PreconditionError(f"modulus mismatch: {f.modulus} vs {g.modulus}")
    q = f.modulus
    total = 0
    for a in units(q):
        fa = f(a)
        if fa:
            total = total + g(a).conjugate() * fa
    return total * Fraction(1, euler_phi(q))


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0} over Q by exact Gauss-Jordan elimination.

    Basis vectors are the standard ones attached to free columns (free column
    entry 1, other free entries 0), so the result is canonical for a given
    row space.
    """
    m = [[as_fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [vi - factor * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -m[row][fc]
        basis.append(vec)
    return basis
