from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lseries_vanish.core import (
    PeriodicFunction,
    as_fraction,
    check_modulus,
    dilate,
    divisors,
    euler_phi,
    even_odd_split,
    factorize,
    inner_product,
    is_prime,
    mobius,
    multiplicative_order,
    nullspace,
    prime_divisors,
    units,
    v_p,
)
from lseries_vanish.errors import ModulusTooLarge, PreconditionError

from .helpers import periodic_functions


def _trial_division(n):
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def test_factorize_examples():
    assert list(factorize(12)) == [(2, 2), (3, 1)]
    assert list(factorize(1)) == []
    assert list(factorize(97)) == [(97, 1)]


@given(st.integers(1, 10**6))
def test_factorize_matches_trial_division(n):
    assert list(factorize(n)) == _trial_division(n)


def test_arithmetic_examples():
    assert euler_phi(12) == 4
    assert v_p(12, 2) == 2
    assert multiplicative_order(2, 3) == 2
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert prime_divisors(360) == (2, 3, 5)


@given(st.integers(1, 3000))
def test_phi_counts_units(n):
    assert euler_phi(n) == len(units(n))
    assert sum(euler_phi(d) for d in divisors(n)) == n


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(1)
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_multiplicative_order_needs_unit():
    with pytest.raises(PreconditionError):
        multiplicative_order(2, 4)


def test_modulus_checks():
    with pytest.raises(PreconditionError):
        check_modulus(0)
    with pytest.raises(ModulusTooLarge):
        check_modulus(10**6 + 1)


def test_as_fraction_rejects_floats():
    assert as_fraction("-7/12") == Fraction(-7, 12)
    assert as_fraction(3) == 3
    with pytest.raises((TypeError, ValueError, PreconditionError)):
        as_fraction(0.5)


def test_dilate_examples(kernel4, log2_half):
    assert dilate(kernel4, 3) == kernel4
    assert dilate(log2_half, 3) == log2_half
    assert dilate(log2_half, 1) == log2_half
    with pytest.raises(PreconditionError):
        dilate(kernel4, 2)


def test_even_odd_examples(log2_half):
    fe, fo = even_odd_split(log2_half)
    assert fe == log2_half and fo.is_zero()
    f = PeriodicFunction.from_values([1, 0, -1, 0])
    fe, fo = even_odd_split(f)
    assert fe.is_zero() and fo == f
    z = PeriodicFunction.zero(5)
    assert even_odd_split(z) == (z, z)


def test_inner_product_examples(kernel4):
    ind = PeriodicFunction.indicator(4, 1)
    assert inner_product(ind, ind) == Fraction(1, 2)
    principal = PeriodicFunction.from_values([1, 0, 1, 0])
    assert inner_product(kernel4, principal) == 2


@given(periodic_functions(qmin=2), st.data())
def test_dilation_composes(f, data):
    q = f.modulus
    us = units(q)
    a = data.draw(st.sampled_from(us))
    b = data.draw(st.sampled_from(us))
    assert dilate(dilate(f, a), b) == dilate(f, a * b % q)


@given(periodic_functions())
def test_even_odd_reassembles(f):
    fe, fo = even_odd_split(f)
    assert fe + fo == f
    for a in range(1, f.modulus + 1):
        assert fe(-a) == fe(a)
        assert fo(-a) == -fo(a)


@given(periodic_functions(qmin=2, zero_mean=True), st.data())
def test_zero_mean_preserved(f, data):
    a = data.draw(st.sampled_from(units(f.modulus)))
    assert dilate(f, a).zero_mean
    assert all(g.zero_mean for g in even_odd_split(f))


@given(periodic_functions())
def test_integer_primitive(f):
    c, g = f.integer_primitive()
    assert g * c == f
    assert all(v.denominator == 1 for v in g.values)


def test_nullspace_small():
    rows = [[1, 1, 1], [1, -1, 0]]
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    v = basis[0]
    assert all(sum(Fraction(r) * x for r, x in zip(row, v)) == 0 for row in rows)
    assert nullspace([[1, 0], [0, 1]], 2) == []
    assert len(nullspace([], 3)) == 3


def test_values_length_checked():
    with pytest.raises(PreconditionError):
        PeriodicFunction(3, (1, 2))
