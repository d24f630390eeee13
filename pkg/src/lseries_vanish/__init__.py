"""Exact and certified-numeric tools for L(1, f) with rational periodic f.

    >>> from lseries_vanish import PeriodicFunction, decide_vanishing, L1
    >>> f = PeriodicFunction.from_values(["1", "-3", "1", "1"])
    >>> decide_vanishing(f).decision
    True
    >>> L1(f).contains_zero()
    True

Submodules: ``core`` (periodic functions, integer helpers), ``cyclotomic``
(exact Q(zeta_q) arithmetic, Fourier transform, product criterion),
``characters`` (Dirichlet characters), ``okada`` (the exact linear
criterion and the vanishing space), ``numeric`` (ball arithmetic and
L-values) and ``cli``.
"""

from . import characters, core, cyclotomic, numeric, okada
from .characters import (
    DirichletCharacter,
    UnitGroupStructure,
    character_decompose,
    character_reconstruct,
    complex_determinant,
    dedekind_determinant,
    enumerate_characters,
    principal_character,
    unit_group,
)
from .core import (
    PeriodicFunction,
    dilate,
    euler_phi,
    even_odd_split,
    factorize,
    inner_product,
    mobius,
    nullspace,
    prime_divisors,
    units,
    v_p,
)
from .cyclotomic import (
    CyclotomicElement,
    FourierCoefficients,
    Theorem1Result,
    coefficient_matrix,
    cyclotomic_polynomial,
    fourier_inverse,
    fourier_transform,
    theorem1_decide,
)
from .errors import (
    LSeriesError,
    ModulusTooLarge,
    ParseError,
    PoleError,
    PrecisionExhausted,
    PreconditionError,
    RouteDisagreement,
)
from .numeric import (
    METHODS,
    Ball,
    ComplexBall,
    EvalReport,
    L1,
    L_s,
    digamma,
    digamma_determinant,
    euler_gamma,
    hurwitz_constant,
    hurwitz_zeta,
    lemma4_check,
    divisor_log_identity,
)
from .okada import (
    ResidueWeightSystem,
    VanishingCertificate,
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
    vanishing_conditions,
)

__version__ = "0.1.0"
