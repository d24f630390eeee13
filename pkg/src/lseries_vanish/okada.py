"""Exact vanishing decision for L(1, f) with rational periodic f.

L(1, f) = 0 exactly when two families of rational linear forms in the values
of f vanish:

* for every unit a mod q, the weighted sum  sum_{m in M(q)} f(a m) / m,
  where M(q) is the monoid of integers built from the primes dividing q;
* for every prime p | q, the sum over non-unit residues of f(r) eps(r, p).

The infinite M(q) sums are evaluated in closed form by grouping m according to
its residue class (see :func:`residue_weight_system`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .core import (
    PeriodicFunction,
    check_modulus,
    euler_phi,
    factorize,
    is_prime,
    multiplicative_order,
    nullspace,
    prime_divisors,
    units,
    v_p,
)
from .errors import PoleError, PreconditionError, RouteDisagreement

# the weight system enumerates prod_p (v_p + ord) exponent classes; raise with care
WEIGHT_MODULUS_CAP = 10**4

# --- eps(r, p) ---------------------------------------------------------------


def _check_prime_divisor(p: int, q: int):
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if q % p:
        raise PreconditionError(f"{p} does not divide {q}")


def epsilon(r: int, p: int, q: int) -> Fraction:
    """v_p(r) if v_p(r) < v_p(q), else v_p(q) + 1/(p - 1); r taken in 1..q."""
    check_modulus(q)
    _check_prime_divisor(p, q)
    if not 1 <= r <= q:
        raise PreconditionError(f"residue {r} outside 1..{q}")
    vr, vq = v_p(r, p), v_p(q, p)
    if vr < vq:
        return Fraction(vr)
    return vq + Fraction(1, p - 1)


def epsilon_table(q: int) -> dict[tuple[int, int], Fraction]:
    """eps(r, p) for every non-unit residue r and prime p | q."""
    return {
        (r, p): epsilon(r, p, q)
        for r in range(1, q + 1)
        if gcd(r, q) > 1
        for p in prime_divisors(q)
    }


def lemma1_bruteforce(r: int, p: int, q: int, J: int) -> tuple[Fraction, Fraction]:
    """Truncation of sum_{j>=1} p^-j #{t in 1..q : p^j t = r (mod q)}.

    Returns (partial sum over j <= J, bound q p^-J / (1 - 1/p) on the rest).
    Solutions are counted by scanning t, independently of :func:`epsilon`.
    """
    check_modulus(q)
    _check_prime_divisor(p, q)
    partial = Fraction(0)
    pj = 1
    for j in range(1, J + 1):
        pj *= p
        step = pj % q
        count = sum(1 for t in range(1, q + 1) if (step * t - r) % q == 0)
        if count:
            partial += Fraction(count, pj)
    tail = Fraction(q, p**J) / (1 - Fraction(1, p))
    return partial, tail


# --- residue weights ---------------------------------------------------------


@dataclass(frozen=True)
class ResidueWeightSystem:
    """S[r-1] = sum of 1/m over m in M(q) with m = r (mod q).

    ``log_weights[p][r-1]`` is the same sum with each term multiplied by
    v_p(m).  Index q stands for the residue 0.
    """

    modulus: int
    S: tuple[Fraction, ...]
    log_weights: dict[int, tuple[Fraction, ...]] = field(default_factory=dict)

    def weight(self, r: int) -> Fraction:
        return self.S[(r - 1) % self.modulus]

    def log_weight(self, p: int, r: int) -> Fraction:
        return self.log_weights[p][(r - 1) % self.modulus]

    @property
    def total(self) -> Fraction:
        return sum(self.S, Fraction(0))


def _axis_classes(p: int, v: int, q: int, with_log: bool):
    """Exponent classes of the p-axis as (residue mod q, weight, log weight).

    Exponents below v are kept individually; beyond that p^e mod q is
    periodic in e with period d = ord(p mod q / p^v) and each class sums
    to a geometric series.
    """
    X = Fraction(1, p)
    cofactor = q // p**v
    d = multiplicative_order(p, cofactor)
    Y = X**d
    out = []
    for e in range(v):
        out.append((pow(p, e, q), X**e, e * X**e))
    for s in range(d):
        e0 = v + s
        head = X**e0
        w = head / (1 - Y)
        # sum_k (e0 + k d) X^(e0 + k d)
        lw = head * (e0 / (1 - Y) + d * Y / (1 - Y) ** 2) if with_log else None
        out.append((pow(p, e0, q), w, lw))
    return out


@lru_cache(maxsize=128)
def residue_weight_system(q: int) -> ResidueWeightSystem:
    """Exact residue weights of M(q), including the v_p-weighted variants."""
    check_modulus(q, WEIGHT_MODULUS_CAP)
    fac = factorize(q)
    axes = {p: _axis_classes(p, v, q, True) for p, v in fac}

    def combine(log_prime):
        acc = {1 % q: Fraction(1)}
        for p, _ in fac:
            nxt: dict[int, Fraction] = {}
            for res, w in acc.items():
                for cres, cw, clw in axes[p]:
                    weight = clw if p == log_prime else cw
                    if weight:
                        key = res * cres % q
                        nxt[key] = nxt.get(key, Fraction(0)) + w * weight
            acc = nxt
        return tuple(acc.get(r % q, Fraction(0)) for r in range(1, q + 1))

    S = combine(None)
    logs = {p: combine(p) for p, _ in fac}
    return ResidueWeightSystem(q, S, logs)


# --- the two conditions -----------------------------------------------------


def _require_zero_mean(f: PeriodicFunction):
    if not f.zero_mean:
        raise PoleError(f.mean)


def condition_A(f: PeriodicFunction, a: int) -> Fraction:
    """sum_{m in M(q)} f(a m) / m, exactly."""
    _require_zero_mean(f)
    q = f.modulus
    if gcd(a, q) != 1:
        raise PreconditionError(f"{a} is not a unit modulo {q}")
    S = residue_weight_system(q).S
    return sum((w * f(a * rho) for rho, w in enumerate(S, start=1) if w), Fraction(0))


def condition_B(f: PeriodicFunction, p: int) -> Fraction:
    """sum over residues r with gcd(r, q) > 1 of f(r) eps(r, p)."""
    q = f.modulus
    _check_prime_divisor(p, q)
    return sum(
        (f(r) * epsilon(r, p, q) for r in range(1, q + 1) if gcd(r, q) > 1 and f(r)),
        Fraction(0),
    )


def principal_projection(f: PeriodicFunction, rho: int) -> Fraction:
    """(f_rho, chi_0) = phi(q)^-1 sum over units a of f(a rho)."""
    q = f.modulus
    return sum((f(a * rho) for a in units(q)), Fraction(0)) / euler_phi(q)


def theorem3_log_condition(f: PeriodicFunction) -> dict[int, Fraction]:
    """Coefficient T_p of log p in sum_{m in M(q)} (f_m, chi_0) log(m) / m."""
    _require_zero_mean(f)
    q = f.modulus
    rws = residue_weight_system(q)
    proj = [principal_projection(f, rho) for rho in range(1, q + 1)]
    return {
        p: sum((w * c for w, c in zip(rws.log_weights[p], proj) if w and c), Fraction(0))
        for p in prime_divisors(q)
    }


def theorem4_equivalence_check(f: PeriodicFunction, scale: str = "cofactor") -> bool:
    """Check T_p = k_p * phi(q)^-1 * condition_B(f, p) for every p | q.

    ``scale`` selects k_p: ``"cofactor"`` uses q_1 / phi(q_1) with q_1 the
    p-free part of q; ``"one"`` uses k_p = 1, which is the value produced by
    counting the solutions of m a = r (mod q) exactly.  The two agree when q
    is a prime power.
    """
    if scale not in ("cofactor", "one"):
        raise PreconditionError(f"unknown scale {scale!r}")
    q = f.modulus
    T = theorem3_log_condition(f)
    for p in prime_divisors(q):
        if scale == "cofactor":
            q1 = q // p ** v_p(q, p)
            k = Fraction(q1, euler_phi(q1))
        else:
            k = Fraction(1)
        if T[p] != k * condition_B(f, p) / euler_phi(q):
            return False
    return True


# --- decision ----------------------------------------------------------------


@dataclass
class VanishingCertificate:
    """Exact residuals behind a decision; vanishing iff every residual is 0."""

    decision: bool
    condition_a_residuals: dict[int, Fraction]
    condition_b_residuals: dict[int, Fraction]
    route: str = "okada"
    theorem1: object | None = None

    @property
    def failing_units(self) -> list[int]:
        return [a for a, v in self.condition_a_residuals.items() if v]

    @property
    def failing_primes(self) -> list[int]:
        return [p for p, v in self.condition_b_residuals.items() if v]


def decide_vanishing(f: PeriodicFunction) -> VanishingCertificate:
    """Decide L(1, f) = 0 exactly; a nonzero mean is a pole and raises PoleError."""
    _require_zero_mean(f)
    q = f.modulus
    A = {a: condition_A(f, a) for a in units(q)}
    B = {p: condition_B(f, p) for p in prime_divisors(q)}
    decision = not any(A.values()) and not any(B.values())
    return VanishingCertificate(decision, A, B)


def decide(
    f: PeriodicFunction, route: str = "both", precision_bits: int = 128
) -> VanishingCertificate:
    """Run the exact criterion, the product criterion, or both.

    With ``route="both"`` a disagreement raises RouteDisagreement.
    """
    from .cyclotomic import theorem1_decide

    if route not in ("okada", "theorem1", "both"):
        raise PreconditionError(f"unknown route {route!r}")
    if route == "theorem1":
        _require_zero_mean(f)
        t1 = theorem1_decide(f, precision_bits)
        return VanishingCertificate(t1.vanishing, {}, {}, "theorem1", t1)
    cert = decide_vanishing(f)
    if route == "both":
        t1 = theorem1_decide(f, precision_bits)
        cert.route = "both"
        cert.theorem1 = t1
        if t1.vanishing != cert.decision:
            raise RouteDisagreement(
                f"exact criterion says {cert.decision}, product criterion says {t1.vanishing} for {f}"
            )
    return cert


# --- the vanishing space ------------------------------------------------------


def vanishing_conditions(q: int) -> list[list[Fraction]]:
    """Rows of the linear system (zero mean, A(a) for units a, B(p) for p | q)."""
    check_modulus(q)
    S = residue_weight_system(q).S
    rows = [[Fraction(1)] * q]
    for a in units(q):
        row = [Fraction(0)] * q
        for rho, w in enumerate(S, start=1):
            if w:
                row[(a * rho - 1) % q] += w
        rows.append(row)
    for p in prime_divisors(q):
        row = [Fraction(0)] * q
        for r in range(1, q + 1):
            if gcd(r, q) > 1:
                row[r - 1] = epsilon(r, p, q)
        rows.append(row)
    return rows


def _normalize(vec: list[Fraction]) -> PeriodicFunction:
    f = PeriodicFunction(len(vec), tuple(vec))
    scale, g = f.integer_primitive()
    lead = next(v for v in g.values if v)
    return g if lead > 0 else -g


def kernel_basis(q: int) -> list[PeriodicFunction]:
    """Basis of {f mod q : L(1, f) = 0}, integer vectors with content 1.

    The basis comes from exact reduced row echelon form, so it is canonical;
    each vector's first nonzero entry is positive.
    """
    rows = vanishing_conditions(q)
    return [_normalize(v) for v in nullspace(rows, q)]
