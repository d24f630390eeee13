"""
Two independent ways to decide vanishing
========================================

The package decides L(1, f) = 0 in two unrelated ways and checks that they
agree:

* the linear route solves rational conditions built from weighted residue
  sums;
* the product route writes L(1, f) = -sum_b f^(b) Log(1 - zeta^b), expands
  the Fourier coefficients on the power basis of Q(zeta_q), and tests
  whether the resulting products of cyclotomic units equal 1 exactly.
"""

import time

from lseries_vanish import (
    L1,
    PeriodicFunction,
    coefficient_matrix,
    decide_vanishing,
    fourier_transform,
    kernel_basis,
    theorem1_decide,
)
from lseries_vanish.corpus import random_corpus

f = PeriodicFunction.from_values([2, -6, 2, 2])

# The Fourier coefficients are exact elements of Q(i) here.
for b, coeff in enumerate(fourier_transform(f), start=1):
    print(f"f^({b}) =", coeff)

# Rows b = 1..q-1, columns = power-basis coordinates.
for row in coefficient_matrix(f):
    print([str(c) for c in row])

res = theorem1_decide(f)
print("products equal 1:", res.products_are_one)
print("root-of-unity indices:", res.root_of_unity_indices)
print("vanishing:", res.vanishing)

# Over a random corpus the two routes never disagree.
start = time.perf_counter()
checked = 0
for q in (6, 8, 9, 12):
    for g in kernel_basis(q) + random_corpus(q, 40):
        assert theorem1_decide(g).vanishing == decide_vanishing(g).decision
        checked += 1
print(f"{checked} functions, no disagreement, {time.perf_counter() - start:.1f}s")

# Numerics only ever confirm: a ball containing zero is never taken as proof.
g = random_corpus(12, 4)[2]
print(g, decide_vanishing(g).decision, L1(g).value)
