import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lseries_vanish.characters import enumerate_characters
from lseries_vanish.core import (
    PeriodicFunction,
    dilate,
    euler_phi,
    even_odd_split,
    inner_product,
    prime_divisors,
    units,
)
from lseries_vanish.corpus import random_unit_supported, random_zero_mean
from lseries_vanish.cyclotomic import CyclotomicElement
from lseries_vanish.errors import PoleError, PreconditionError, RouteDisagreement
from lseries_vanish.okada import (
    condition_A,
    condition_B,
    decide,
    decide_vanishing,
    epsilon,
    epsilon_table,
    kernel_basis,
    lemma1_bruteforce,
    residue_weight_system,
    theorem3_log_condition,
    theorem4_equivalence_check,
)

from .helpers import periodic_functions


def _smooth_numbers(primes, bound):
    out = [1]
    for p in primes:
        nxt = []
        for m in out:
            while m <= bound:
                nxt.append(m)
                m *= p
        out = nxt
    return out


def test_epsilon_examples():
    assert epsilon(2, 2, 4) == 1
    assert epsilon(4, 2, 4) == 3
    assert epsilon(3, 3, 12) == Fraction(3, 2)
    with pytest.raises(PreconditionError):
        epsilon(2, 5, 12)
    with pytest.raises(PreconditionError):
        epsilon(2, 4, 12)


def test_bruteforce_examples():
    partial, tail = lemma1_bruteforce(2, 2, 4, 10)
    assert partial == 1 and tail == Fraction(4 * 2, 2**10)
    partial, tail = lemma1_bruteforce(4, 2, 4, 20)
    assert abs(partial - 3) <= tail


@pytest.mark.parametrize("q", range(2, 31))
def test_epsilon_within_bruteforce_tail(q):
    for p in prime_divisors(q):
        for r in range(1, q + 1):
            partial, tail = lemma1_bruteforce(r, p, q, 40)
            assert abs(epsilon(r, p, q) - partial) <= tail
            if r % p:
                # the first case is a finite sum: exact once J passes the preperiod
                assert partial == epsilon(r, p, q)


def test_epsilon_table_covers_non_units():
    table = epsilon_table(12)
    assert set(table) == {(r, p) for r in range(1, 13) if gcd(r, 12) > 1 for p in (2, 3)}


def test_weight_examples():
    assert residue_weight_system(4).S == (1, Fraction(1, 2), 0, Fraction(1, 2))
    assert residue_weight_system(6).S == tuple(map(Fraction, ("1", "2/3", "1/2", "1/3", "0", "1/2")))


@pytest.mark.parametrize("q", [4, 6, 10, 12, 15, 18, 20, 21])
def test_weights_against_truncated_enumeration(q):
    bound = 10**12
    partial = [Fraction(0)] * q
    for m in _smooth_numbers(prime_divisors(q), bound):
        partial[(m - 1) % q] += Fraction(1, m)
    S = residue_weight_system(q).S
    for exact, approx in zip(S, partial):
        assert 0 <= exact - approx < Fraction(1, 10**8)


@pytest.mark.parametrize("q", [4, 6, 12, 18])
def test_log_weights_against_truncated_enumeration(q):
    bound = 10**12
    rws = residue_weight_system(q)
    for p in prime_divisors(q):
        partial = [Fraction(0)] * q
        for m in _smooth_numbers(prime_divisors(q), bound):
            k, n = 0, m
            while n % p == 0:
                n //= p
                k += 1
            partial[(m - 1) % q] += Fraction(k, m)
        for exact, approx in zip(rws.log_weights[p], partial):
            assert 0 <= exact - approx < Fraction(1, 10**6)


@pytest.mark.parametrize("q", range(1, 61))
def test_weight_sums(q):
    S = residue_weight_system(q).S
    assert sum(S, Fraction(0)) == Fraction(q, euler_phi(q))
    for r in range(1, q + 1):
        hits = sum(w * sum(1 for a in units(q) if (a * rho - r) % q == 0) for rho, w in enumerate(S, 1))
        assert hits == 1


def test_condition_examples(kernel4, log2_half):
    assert condition_A(kernel4, 1) == 0
    assert condition_A(kernel4, 3) == 0
    assert condition_A(log2_half, 1) == 0
    assert condition_B(kernel4, 2) == 0
    assert condition_B(log2_half, 2) == -2
    f = PeriodicFunction.from_values([1, 0, 0, 0, -1, 0])
    assert condition_B(f, 2) == 0 and condition_B(f, 3) == 0
    with pytest.raises(PoleError):
        condition_A(PeriodicFunction.from_values([1, 1, 1]), 1)
    with pytest.raises(PreconditionError):
        condition_A(kernel4, 2)


@given(periodic_functions(qmin=1, qmax=36, zero_mean=True))
def test_unit_average_of_condition_A(f):
    assert sum((condition_A(f, a) for a in units(f.modulus)), Fraction(0)) == 0


def test_log_condition_examples(kernel4, log2_half):
    assert theorem3_log_condition(kernel4) == {2: 0}
    assert theorem3_log_condition(log2_half) == {2: -1}
    assert theorem3_log_condition(PeriodicFunction.zero(30)) == {2: 0, 3: 0, 5: 0}


def test_equivalence_examples(log2_half):
    assert theorem4_equivalence_check(log2_half)
    assert theorem4_equivalence_check(PeriodicFunction.zero(12))
    assert condition_B(log2_half, 2) / euler_phi(4) == -1


@pytest.mark.parametrize("q", [4, 6, 8, 9, 12, 18, 30])
def test_log_coefficient_equals_prime_condition(q):
    # T_p = phi(q)^-1 * condition_B(f, p) exactly
    rng = random.Random(q)
    for _ in range(50):
        assert theorem4_equivalence_check(random_zero_mean(q, rng), scale="one")


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_cofactor_form_on_prime_powers(q):
    # with a single prime the cofactor is 1 and both forms coincide
    rng = random.Random(q)
    for _ in range(50):
        assert theorem4_equivalence_check(random_zero_mean(q, rng), scale="cofactor")


def test_cofactor_form_fails_with_two_primes():
    # q = 6, p = 2: T_2 = phi(6)^-1 B(2), not (3/2) phi(6)^-1 B(2)
    f = PeriodicFunction.from_values([1, 1, 0, 0, 0, -2])
    B = condition_B(f, 2)
    assert B != 0
    assert theorem3_log_condition(f)[2] == B / 2
    assert not theorem4_equivalence_check(f, scale="cofactor")
    assert theorem4_equivalence_check(f, scale="one")


def test_decide_examples(kernel4, log2_half):
    cert = decide_vanishing(kernel4)
    assert cert.decision and not cert.failing_units and not cert.failing_primes
    cert = decide_vanishing(log2_half)
    assert not cert.decision and cert.condition_b_residuals == {2: -2}
    assert cert.failing_primes == [2]
    for q in (3, 5, 7, 8, 12):
        for chi in enumerate_characters(q)[1:]:
            if chi.is_real():
                vals = chi.rational_values()
                assert not decide_vanishing(vals).decision
    with pytest.raises(PoleError) as exc:
        decide_vanishing(PeriodicFunction.from_values([1, 1, 1]))
    assert exc.value.residue == 1


def test_decide_routes(kernel4, log2_half):
    assert decide(kernel4).decision
    assert decide(kernel4, route="theorem1").decision
    assert not decide(log2_half, route="okada").decision
    assert decide(log2_half).theorem1 is not None
    with pytest.raises(PreconditionError):
        decide(kernel4, route="neither")
    assert issubclass(RouteDisagreement, Exception)


def test_degenerate_modulus_one():
    assert decide_vanishing(PeriodicFunction.zero(1)).decision
    assert kernel_basis(1) == []


def test_kernel_examples():
    assert [list(f.values) for f in kernel_basis(4)] == [[1, -3, 1, 1]]
    for p in (2, 3, 5, 7, 11, 13):
        assert kernel_basis(p) == []


@pytest.mark.parametrize("q", range(1, 37))
def test_kernel_basis_shape(q):
    basis = kernel_basis(q)
    # observed dimension q - phi(q) - omega(q)
    assert len(basis) == max(0, q - euler_phi(q) - len(prime_divisors(q)))
    for f in basis:
        assert decide_vanishing(f).decision
        assert all(v.denominator == 1 for v in f.values)
        _, g = f.integer_primitive()
        assert g == f
        assert next(v for v in f.values if v) > 0


@given(periodic_functions(qmin=1, qmax=16, zero_mean=True))
def test_even_odd_split_decision(f):
    fe, fo = even_odd_split(f)
    assert decide_vanishing(f).decision == (decide_vanishing(fe).decision and decide_vanishing(fo).decision)


@given(periodic_functions(qmin=2, qmax=16, zero_mean=True), st.data())
def test_dilation_decision(f, data):
    a = data.draw(st.sampled_from(units(f.modulus)))
    assert decide_vanishing(dilate(f, a)).decision == decide_vanishing(f).decision


@pytest.mark.parametrize("q", [4, 6, 8, 9, 12, 15])
def test_character_weighted_sums_vanish_on_kernel(q):
    S = residue_weight_system(q).S
    chars = enumerate_characters(q)
    for f in kernel_basis(q):
        for chi in chars:
            total = CyclotomicElement.zero(chi.value_modulus)
            for rho, w in enumerate(S, 1):
                if w:
                    f_rho = PeriodicFunction(q, tuple(f(a * rho) for a in range(1, q + 1)))
                    total = total + inner_product(f_rho, chi) * w
            assert total == 0


@pytest.mark.parametrize("q", [6, 8, 12, 15])
def test_unit_supported_never_vanishes(q):
    rng = random.Random(q)
    for _ in range(100):
        assert not decide_vanishing(random_unit_supported(q, rng)).decision


def test_weight_modulus_cap():
    from lseries_vanish.errors import ModulusTooLarge

    with pytest.raises(ModulusTooLarge):
        residue_weight_system(10**4 + 1)
