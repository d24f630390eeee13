"""Deterministic random test functions.

A corpus mixes four families so that both decisions are well represented:

* ``kernel``  - random rational combinations of the vanishing-space basis;
* ``units_a`` - random members of the larger space cut out by the zero-mean
  and unit-dilation conditions alone (these usually fail only the
  prime-weighted condition, the hard case);
* ``random``  - random zero-mean functions;
* ``shifted`` - a kernel member plus a random zero-mean function.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .core import PeriodicFunction, nullspace, prime_divisors
from .okada import kernel_basis, vanishing_conditions

FAMILIES = ("kernel", "units_a", "random", "shifted")


def random_rational(rng: random.Random, height: int = 9) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_zero_mean(q: int, rng: random.Random, height: int = 9) -> PeriodicFunction:
    vals = [random_rational(rng, height) for _ in range(q - 1)]
    vals.append(-sum(vals, Fraction(0)))
    return PeriodicFunction(q, tuple(vals))


def _combination(q: int, basis, rng: random.Random, height: int) -> PeriodicFunction:
    out = PeriodicFunction.zero(q)
    for v in basis:
        out = out + v * random_rational(rng, height)
    return out


@lru_cache(maxsize=64)
def _units_a_basis(q: int) -> tuple[PeriodicFunction, ...]:
    rows = vanishing_conditions(q)
    rows = rows[: len(rows) - len(prime_divisors(q))]
    return tuple(PeriodicFunction(q, tuple(v)) for v in nullspace(rows, q))


def random_member(q: int, family: str, rng: random.Random, height: int = 9) -> PeriodicFunction:
    # kernel coefficients stay small: vanishing members force the product
    # criterion through its exact (and size-sensitive) branch
    if family == "kernel":
        return _combination(q, kernel_basis(q), rng, 3)
    if family == "units_a":
        return _combination(q, _units_a_basis(q), rng, height)
    if family == "random":
        return random_zero_mean(q, rng, height)
    if family == "shifted":
        return _combination(q, kernel_basis(q), rng, 3) + random_zero_mean(q, rng, height)
    raise ValueError(f"unknown family {family!r}")


def random_corpus(q: int, count: int, seed: int = 0, height: int = 9) -> list[PeriodicFunction]:
    """``count`` functions mod q cycling through :data:`FAMILIES`."""
    rng = random.Random(f"{seed}:{q}")
    return [random_member(q, FAMILIES[i % len(FAMILIES)], rng, height) for i in range(count)]


def random_unit_supported(q: int, rng: random.Random, height: int = 9) -> PeriodicFunction:
    """Nonzero zero-mean f supported on the units and the residue 0 (q >= 2)."""
    if q < 2:
        raise ValueError("needs q >= 2")
    while True:
        vals = [
            random_rational(rng, height) if gcd(a, q) == 1 else Fraction(0)
            for a in range(1, q + 1)
        ]
        vals[-1] = -sum(vals[:-1], Fraction(0))
        f = PeriodicFunction(q, tuple(vals))
        if not f.is_zero():
            return f
