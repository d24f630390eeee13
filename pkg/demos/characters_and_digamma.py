"""
Characters, digamma values and a determinant
============================================

For a function supported on the units, vanishing of L(1, f) forces a linear
system whose matrix has entries psi((x / y mod q) / q).  Its determinant
factors over the Dirichlet characters mod q, and every factor is nonzero,
which is why such functions never vanish.
"""

from fractions import Fraction

from lseries_vanish import (
    L1,
    digamma,
    digamma_determinant,
    enumerate_characters,
    lemma4_check,
    unit_group,
)

q = 5
group = unit_group(q)
print("generators", group.generators, "orders", group.orders)

chars = enumerate_characters(q)
for chi in chars:
    print(chi.exponents, [chi.log_value(a) for a in range(1, q + 1)], "odd" if chi.is_odd() else "even")

# %%
# L(1, chi) for the non-principal characters, from the digamma formula.

for chi in chars[1:]:
    print(chi.exponents, L1(chi, 96).value)

# %%
# psi(a / q) for the units and their sum, which sits strictly below
# -gamma * phi(q).

for a in range(1, q):
    print(a, digamma(Fraction(a, q), 96))
total, bound, holds = lemma4_check(q, 96)
print("sum", total, "bound", bound, holds)

# %%
# The determinant equals the product over characters of sum_x chi(x) psi(x/q).
# Each non-principal factor is -q L(1, chi); note the minus sign.

d = digamma_determinant(q, 128)
print("det          ", d.determinant)
print("char product ", d.character_product)
print("with -q L    ", d.l_value_product(-q))
print("with +q L    ", d.l_value_product(q))
