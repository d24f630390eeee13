"""
When does L(1, f) vanish?
=========================

A periodic rational function f mod q has a Dirichlet series
sum f(n)/n that converges at s = 1 as soon as the values of f sum to zero.
This walk-through builds a few such functions, decides exactly whether the
value is zero, and checks the answer against certified numerics.
"""

from fractions import Fraction

from lseries_vanish import (
    L1,
    PeriodicFunction,
    condition_A,
    condition_B,
    decide_vanishing,
    kernel_basis,
)

# %%
# Start with f = (1, -2, 1, 0) mod 4.  Summing the series by hand gives
# (1 - 2/2 + 1/3) + (1/5 - 2/6 + 1/7) + ... = (log 2) / 2.

f = PeriodicFunction.from_values([1, -2, 1, 0])
print(f, "mean", f.mean)
print("L(1, f) =", L1(f, 128).value)

# %%
# The exact decision looks at two kinds of rational conditions.  The unit
# conditions weight f(a m) by 1/m over every m built from primes dividing q;
# the prime conditions sum f over the non-units with rational weights eps.

for a in (1, 3):
    print(f"unit condition a={a}:", condition_A(f, a))
print("prime condition p=2:", condition_B(f, 2))

# %%
# The prime condition is -2, not 0, so L(1, f) is not zero.  The certificate
# records every residual exactly.

cert = decide_vanishing(f)
print(cert.decision, cert.failing_primes)

# %%
# Functions that do vanish form a rational vector space.  For q = 4 it is
# one-dimensional:

(g,) = kernel_basis(4)
print("basis:", g)
value = L1(g, 256).value
print("L(1, g) =", value, "contains zero:", value.contains_zero())

# %%
# Prime moduli never give a nonzero vanishing function.

for p in (2, 3, 5, 7, 11, 13):
    print(p, len(kernel_basis(p)))

# %%
# Composite moduli do, and the dimension grows with the number of non-units.

for q in (6, 12, 30):
    basis = kernel_basis(q)
    print(q, len(basis), basis[0])

# %%
# Any rational combination of basis vectors is again in the kernel.

h = kernel_basis(12)[0] * Fraction(3, 5) - kernel_basis(12)[2] * 2
print(decide_vanishing(h).decision, L1(h).value)
