"""Unit groups, Dirichlet characters and the Dedekind determinant."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Callable, Mapping

from .core import (
    PeriodicFunction,
    check_modulus,
    euler_phi,
    factorize,
    inner_product,
    lcm_of,
    multiplicative_order,
    units,
)
from .cyclotomic import CyclotomicElement
from .errors import PreconditionError
from .numeric.ball import DEFAULT_PREC, Ball, ComplexBall


def _primitive_root_prime_power(p: int, e: int) -> int:
    """A generator of (Z/p^e Z)^* for an odd prime p."""
    phi_p = p - 1
    g = 2
    while multiplicative_order(g, p) != phi_p:
        g += 1
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _crt_lift(local: int, pe: int, q: int) -> int:
    """The residue mod q that is local mod pe and 1 mod q/pe."""
    rest = q // pe
    # x = local + pe * t with x = 1 (mod rest)
    t = ((1 - local) * pow(pe, -1, rest)) % rest if rest > 1 else 0
    return (local + pe * t) % q


@dataclass(frozen=True)
class UnitGroupStructure:
    """(Z/qZ)^* as a product of cyclic groups generated by ``generators``."""

    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]

    @property
    def exponent(self) -> int:
        """lcm of the generator orders; character values lie in Q(zeta_exponent)."""
        return lcm_of(self.orders)

    @property
    def size(self) -> int:
        out = 1
        for n in self.orders:
            out *= n
        return out

    def discrete_log(self, a: int) -> tuple[int, ...]:
        table = _dlog_table(self)
        try:
            return table[a % self.modulus]
        except KeyError:
            raise PreconditionError(f"{a} is not a unit modulo {self.modulus}") from None

    def element(self, exponents) -> int:
        out = 1 % self.modulus
        for g, e in zip(self.generators, exponents):
            out = out * pow(g, e, self.modulus) % self.modulus
        return out


@lru_cache(maxsize=256)
def _dlog_table(group: UnitGroupStructure) -> dict[int, tuple[int, ...]]:
    table = {}
    for exps in product(*(range(n) for n in group.orders)):
        table[group.element(exps)] = exps
    if len(table) != euler_phi(group.modulus):
        raise AssertionError(f"generators of modulus {group.modulus} are not independent")
    if group.modulus == 1:
        table = {0: ()}
    return table


@lru_cache(maxsize=256)
def unit_group(q: int) -> UnitGroupStructure:
    """Cyclic decomposition of (Z/qZ)^* over the prime-power factors of q.

    For 2^k with k >= 3 the 2-part is generated by -1 and 5.
    """
    check_modulus(q)
    gens, orders = [], []
    for p, e in factorize(q):
        pe = p**e
        if p == 2:
            if e == 1:
                continue
            gens.append(_crt_lift(pe - 1, pe, q))
            orders.append(2)
            if e >= 3:
                gens.append(_crt_lift(5, pe, q))
                orders.append(2 ** (e - 2))
        else:
            g = _primitive_root_prime_power(p, e)
            gens.append(_crt_lift(g, pe, q))
            orders.append(pe - pe // p)
    return UnitGroupStructure(q, tuple(gens), tuple(orders))


@dataclass(frozen=True)
class DirichletCharacter:
    """chi(g_i) = exp(2 pi i e_i / n_i) on the generators g_i of order n_i."""

    group: UnitGroupStructure
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.group.orders):
            raise PreconditionError("one exponent per generator is required")
        object.__setattr__(
            self,
            "exponents",
            tuple(e % n for e, n in zip(self.exponents, self.group.orders)),
        )

    @property
    def modulus(self) -> int:
        return self.group.modulus

    @property
    def value_modulus(self) -> int:
        return self.group.exponent

    def is_principal(self) -> bool:
        return not any(self.exponents)

    def log_value(self, a: int) -> int | None:
        """k with chi(a) = zeta_L^k (L = value_modulus), or None off the units."""
        if gcd(a, self.modulus) != 1:
            return None
        L = self.value_modulus
        dl = self.group.discrete_log(a)
        return sum(e * d * (L // n) for e, d, n in zip(self.exponents, dl, self.group.orders)) % L

    def __call__(self, a: int) -> CyclotomicElement:
        k = self.log_value(a)
        if k is None:
            return CyclotomicElement.zero(self.value_modulus)
        return CyclotomicElement.zeta(self.value_modulus, k)

    def complex_value(self, a: int, prec: int = DEFAULT_PREC) -> ComplexBall:
        k = self.log_value(a)
        if k is None:
            return ComplexBall.exact(0, prec)
        return ComplexBall.root_of_unity(k, self.value_modulus, prec)

    def is_odd(self) -> bool:
        return self.modulus > 2 and self.log_value(-1) != 0

    def conjugate(self) -> DirichletCharacter:
        return DirichletCharacter(self.group, tuple(-e for e in self.exponents))

    def __mul__(self, other: DirichletCharacter) -> DirichletCharacter:
        if other.group != self.group:
            raise PreconditionError("characters have different moduli")
        return DirichletCharacter(
            self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def order(self) -> int:
        return lcm_of(n // gcd(e, n) for e, n in zip(self.exponents, self.group.orders))

    def is_real(self) -> bool:
        return self.order() <= 2

    def rational_values(self) -> PeriodicFunction:
        """The character as a PeriodicFunction; only for real characters."""
        if not self.is_real():
            raise PreconditionError("character takes non-rational values")
        q = self.modulus
        return PeriodicFunction(q, tuple(self(a).rational_value() for a in range(1, q + 1)))

    def __str__(self):
        return f"chi_{self.modulus}{list(self.exponents)}"


def principal_character(q: int) -> DirichletCharacter:
    g = unit_group(q)
    return DirichletCharacter(g, (0,) * len(g.orders))


def enumerate_characters(q: int) -> list[DirichletCharacter]:
    """All phi(q) characters mod q; the principal character comes first."""
    g = unit_group(q)
    return [DirichletCharacter(g, exps) for exps in product(*(range(n) for n in g.orders))]


def character_decompose(g: PeriodicFunction) -> dict[DirichletCharacter, CyclotomicElement]:
    """Coefficients (g, chi) with g = sum_chi (g, chi) chi on the units."""
    q = g.modulus
    for a in range(1, q + 1):
        if gcd(a, q) != 1 and g(a) != 0:
            raise PreconditionError(f"g({a}) = {g(a)} but {a} is not a unit modulo {q}")
    out = {}
    for chi in enumerate_characters(q):
        c = inner_product(g, chi)
        if not isinstance(c, CyclotomicElement):
            c = CyclotomicElement.rational(chi.value_modulus, c)
        out[chi] = c
    return out


def character_reconstruct(coeffs: Mapping[DirichletCharacter, CyclotomicElement], a: int):
    """sum_chi coeffs[chi] chi(a) as an element of Q(zeta_L)."""
    total = None
    for chi, c in coeffs.items():
        term = c * chi(a)
        total = term if total is None else total + term
    return total


# --- Dedekind determinant ---------------------------------------------------


def complex_determinant(matrix: list[list[ComplexBall]]) -> ComplexBall:
    """Determinant by Gaussian elimination in ball arithmetic.

    If every remaining pivot candidate contains zero, the trailing minor is
    enclosed with Hadamard's bound instead.
    """
    n = len(matrix)
    if n == 0:
        return ComplexBall.exact(1)
    m = [list(row) for row in matrix]
    prec = max(x.prec for row in m for x in row)
    det = ComplexBall.exact(1, prec)
    for c in range(n):
        best = max(range(c, n), key=lambda i: float(m[i][c].abs2()))
        if m[best][c].contains_zero():
            return det * _hadamard_ball(m, c, prec)
        if best != c:
            m[c], m[best] = m[best], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        for i in range(c + 1, n):
            factor = m[i][c] / piv
            for k in range(c, n):
                m[i][k] = m[i][k] - factor * m[c][k]
    return det


def _hadamard_ball(m, c: int, prec: int) -> ComplexBall:
    """Ball around 0 enclosing the minor m[c:, c:] (|det| <= prod of row norms)."""
    from mpmath.libmp import fone, fzero, mpf_mul, mpf_sqrt, round_ceiling

    bound = fone
    for row in m[c:]:
        s = ComplexBall.exact(0, prec).re
        for x in row[c:]:
            s = s + x.abs2()
        bound = mpf_mul(bound, mpf_sqrt(s.upper, 64, round_ceiling), 64, round_ceiling)
    return ComplexBall(Ball(fzero, bound, prec), Ball(fzero, bound, prec))


def dedekind_determinant(
    q: int,
    F: Callable[[int], object] | Mapping[int, object],
    prec: int = DEFAULT_PREC,
) -> tuple[ComplexBall, ComplexBall]:
    """(det[F(x y^-1)], prod_chi sum_x chi(x) F(x)) over the units x, y mod q.

    F is called (or indexed) with unit residues in 1..q.
    """
    us = units(q)
    get = F.__getitem__ if isinstance(F, Mapping) else F
    vals = {a % q: ComplexBall.exact(get(a), prec) for a in us}
    matrix = [[vals[x * pow(y, -1, q) % q] for y in us] for x in us]
    det = complex_determinant(matrix)
    prod = ComplexBall.exact(1, prec)
    for chi in enumerate_characters(q):
        s = ComplexBall.exact(0, prec)
        for a in us:
            s = s + chi.complex_value(a, prec) * vals[a % q]
        prod = prod * s
    return det, prod
