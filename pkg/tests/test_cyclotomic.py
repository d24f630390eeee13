from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lseries_vanish.core import PeriodicFunction, dilate, euler_phi, units
from lseries_vanish.cyclotomic import (
    CyclotomicElement,
    FourierCoefficients,
    coefficient_matrix,
    cyc_add,
    cyc_invert,
    cyc_mul,
    cyc_pow,
    cyclotomic_polynomial,
    fourier_inverse,
    fourier_transform,
    galois_apply,
    theorem1_decide,
)
from lseries_vanish.errors import PoleError
from lseries_vanish.okada import decide_vanishing, kernel_basis

from .helpers import periodic_functions, rationals

Z = CyclotomicElement.zeta


def _poly_divide_oracle(q):
    """Phi_q by dividing x^q - 1 by Phi_d for the proper divisors d (sympy-free)."""
    num = [-1] + [0] * (q - 1) + [1]
    for d in range(1, q):
        if q % d == 0:
            den = list(_poly_divide_oracle(d))
            out = [0] * (len(num) - len(den) + 1)
            rem = num[:]
            for i in range(len(out) - 1, -1, -1):
                c = rem[i + len(den) - 1] // den[-1]
                out[i] = c
                for j, dj in enumerate(den):
                    rem[i + j] -= c * dj
            assert not any(rem)
            num = out
    return tuple(num)


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("q", range(1, 41))
def test_cyclotomic_polynomial_against_division(q):
    phi = cyclotomic_polynomial(q)
    assert phi == _poly_divide_oracle(q)
    assert len(phi) - 1 == euler_phi(q)


def test_arithmetic_examples():
    assert cyc_mul(Z(4), Z(4)) == CyclotomicElement(4, (Fraction(-1), Fraction(0)))
    assert cyc_pow(Z(7), 7) == 1
    assert (1 - Z(4)) * (1 - Z(4, 3)) == 2
    assert galois_apply(Z(4), 3) == CyclotomicElement(4, (Fraction(0), Fraction(-1)))
    assert cyc_add(Z(3), Z(3, 2)) == -1


@st.composite
def field_elements(draw, q):
    n = euler_phi(q)
    return CyclotomicElement(q, tuple(draw(st.lists(rationals, min_size=n, max_size=n))))


@given(st.integers(1, 30).flatmap(lambda q: st.tuples(field_elements(q), field_elements(q), field_elements(q))))
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) * z == x * z + y * z
    assert x * (y * z) == (x * y) * z
    if not x.is_zero():
        assert cyc_mul(x, cyc_invert(x)) == 1


@given(st.integers(1, 24).flatmap(lambda q: st.tuples(st.just(q), field_elements(q), field_elements(q))))
def test_galois_is_a_ring_map(data):
    q, x, y = data
    for a in units(q):
        assert galois_apply(x * y, a) == galois_apply(x, a) * galois_apply(y, a)
        assert galois_apply(x + y, a) == galois_apply(x, a) + galois_apply(y, a)


@given(st.integers(1, 24).flatmap(lambda q: field_elements(q)))
def test_complex_embedding_matches_mpmath(x):
    q = x.modulus
    ball = x.to_complex_ball(128)
    with mpmath.workdps(40):
        expected = sum(c * mpmath.exp(2j * mpmath.pi * j / q) for j, c in enumerate(x.coeffs))
        got = mpmath.mpc(mpmath.mp.make_mpf(ball.re.mid), mpmath.mp.make_mpf(ball.im.mid))
        assert abs(got - expected) < mpmath.mpf(10) ** -30


@pytest.mark.parametrize("q", range(2, 31))
def test_norm_of_one_minus_zeta(q):
    prod = CyclotomicElement.one(q)
    for b in range(1, q):
        prod = prod * (1 - Z(q, b))
    assert prod == q


def test_fourier_examples():
    hat = fourier_transform(PeriodicFunction.from_values([1] * 5))
    assert [h.is_zero() for h in hat] == [True] * 4 + [False]
    assert hat(5) == 1
    hat = fourier_transform(PeriodicFunction.from_values([1, -1]))
    assert hat(1) == -1 and hat(2) == 0
    zero = FourierCoefficients(6, tuple(CyclotomicElement.zero(6) for _ in range(6)))
    assert fourier_inverse(zero).is_zero()
    delta = PeriodicFunction.indicator(7, 7)
    hat = fourier_transform(delta)
    assert all(h == Fraction(1, 7) for h in hat)
    assert fourier_inverse(hat) == delta


@given(periodic_functions(qmax=30))
def test_fourier_round_trip(f):
    assert fourier_inverse(fourier_transform(f)) == f


@given(periodic_functions(qmax=12))
def test_fourier_against_direct_complex_sum(f):
    q = f.modulus
    hat = fourier_transform(f)
    with mpmath.workdps(40):
        for b in range(1, q + 1):
            direct = sum(f(a) * mpmath.exp(-2j * mpmath.pi * a * b / q) for a in range(1, q + 1)) / q
            ball = hat(b).to_complex_ball(128)
            got = mpmath.mpc(mpmath.mp.make_mpf(ball.re.mid), mpmath.mp.make_mpf(ball.im.mid))
            assert abs(got - direct) < mpmath.mpf(10) ** -30


@given(periodic_functions(qmin=2, qmax=16, zero_mean=True))
def test_coefficient_matrix_rebuilds_fourier(f):
    q = f.modulus
    c = coefficient_matrix(f)
    hat = fourier_transform(f)
    assert len(c) == q - 1 and all(len(row) == euler_phi(q) for row in c)
    for b in range(1, q):
        assert CyclotomicElement(q, tuple(c[b - 1])) == hat(b)
    # for integer-valued f the denominators divide q
    _, g = f.integer_primitive()
    assert all((x * q).denominator == 1 for row in coefficient_matrix(g) for x in row)


def test_coefficient_matrix_edge_cases():
    assert all(x == 0 for row in coefficient_matrix(PeriodicFunction.zero(6)) for x in row)
    with pytest.raises(PoleError):
        coefficient_matrix(PeriodicFunction.from_values([1, 1, 1]))


def test_product_route_examples(kernel4, log2_half):
    assert theorem1_decide(kernel4).vanishing
    res = theorem1_decide(log2_half)
    assert not res.vanishing
    assert not all(res.products_are_one)
    z = theorem1_decide(PeriodicFunction.zero(9))
    assert z.vanishing
    assert all(p == 1 for p in z.exact_products)


def test_product_route_exact_products_consistent(log2_half, kernel4):
    res = theorem1_decide(log2_half)
    assert [p == 1 for p in res.exact_products] == res.products_are_one
    res = theorem1_decide(kernel4)
    assert all(p == 1 for p in res.exact_products)
    assert all(k is not None for k in res.root_of_unity_indices)
    assert res.modulus % res.exponent_scale == 0


@pytest.mark.parametrize("q", range(1, 37))
def test_product_route_on_kernel_basis(q):
    for f in kernel_basis(q):
        assert theorem1_decide(f).vanishing


@given(periodic_functions(qmin=2, qmax=18, zero_mean=True))
def test_product_route_agrees_with_linear_criterion(f):
    assert theorem1_decide(f).vanishing == decide_vanishing(f).decision


@given(periodic_functions(qmin=3, qmax=15, zero_mean=True), st.data())
def test_product_route_dilation_invariant(f, data):
    a = data.draw(st.sampled_from(units(f.modulus)))
    assert theorem1_decide(dilate(f, a)).vanishing == theorem1_decide(f).vanishing


def test_product_route_on_kernel_plus_noise():
    f = kernel_basis(12)[0] * 5 - kernel_basis(12)[-1] * Fraction(2, 3)
    assert theorem1_decide(f).vanishing
    g = f + PeriodicFunction.from_values([1, -1] + [0] * 10)
    assert not theorem1_decide(g).vanishing
