"""Invariant suites, shared by ``lseries-vanish selftest`` and the test suite.

Each check returns a :class:`CheckResult`; ``level`` scales the sizes
(1 is quick, 3 is thorough).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .core import PeriodicFunction, dilate, euler_phi, even_odd_split, prime_divisors, units
from .corpus import random_corpus, random_unit_supported, random_zero_mean
from .cyclotomic import CyclotomicElement, fourier_inverse, fourier_transform, theorem1_decide
from .numeric import L1, Ball, digamma, lemma4_check
from .okada import (
    condition_A,
    decide_vanishing,
    epsilon,
    kernel_basis,
    lemma1_bruteforce,
    residue_weight_system,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _sizes(level: int):
    return {
        1: dict(qmax=16, count=12, digamma_qmax=100, prec=96),
        2: dict(qmax=24, count=40, digamma_qmax=300, prec=128),
        3: dict(qmax=36, count=100, digamma_qmax=1000, prec=128),
    }[max(1, min(level, 3))]


def check_fourier_roundtrip(qmax: int, rng: random.Random) -> tuple[bool, str]:
    for q in range(1, qmax + 1):
        f = PeriodicFunction(q, tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(q)))
        if fourier_inverse(fourier_transform(f)) != f:
            return False, f"round trip failed for q={q}"
    return True, ""


def check_norm(qmax: int) -> tuple[bool, str]:
    for q in range(2, qmax + 1):
        prod = CyclotomicElement.one(q)
        for b in range(1, q):
            prod = prod * (1 - CyclotomicElement.zeta(q, b))
        if prod != q:
            return False, f"prod (1 - zeta^b) != {q}"
    return True, ""


def check_weights(qmax: int) -> tuple[bool, str]:
    for q in range(1, qmax + 1):
        S = residue_weight_system(q).S
        if sum(S, Fraction(0)) != Fraction(q, euler_phi(q)):
            return False, f"sum of weights wrong for q={q}"
        us = units(q)
        for r in range(1, q + 1):
            total = sum(
                (w * sum(1 for a in us if (a * rho - r) % q == 0) for rho, w in enumerate(S, 1) if w),
                Fraction(0),
            )
            if total != 1:
                return False, f"weight identity fails at q={q}, r={r}"
    return True, ""


def check_unit_average(qmax: int, count: int, rng: random.Random) -> tuple[bool, str]:
    for q in range(1, qmax + 1):
        for _ in range(count):
            f = random_zero_mean(q, rng)
            if sum((condition_A(f, a) for a in units(q)), Fraction(0)) != 0:
                return False, f"unit average nonzero for {f}"
    return True, ""


def check_epsilon_bruteforce(qmax: int, J: int = 40) -> tuple[bool, str]:
    for q in range(2, qmax + 1):
        for p in prime_divisors(q):
            for r in range(1, q + 1):
                partial, tail = lemma1_bruteforce(r, p, q, J)
                if abs(epsilon(r, p, q) - partial) > tail:
                    return False, f"eps({r},{p}) mod {q} outside brute-force bound"
    return True, ""


def check_routes(qmax: int, count: int, seed: int = 0) -> tuple[bool, str]:
    for q in range(1, qmax + 1):
        corpus = list(kernel_basis(q)) + random_corpus(q, count, seed)
        for f in corpus:
            if decide_vanishing(f).decision != theorem1_decide(f).vanishing:
                return False, f"routes disagree on {f}"
    return True, ""


def check_symmetries(qmax: int, count: int, seed: int = 0) -> tuple[bool, str]:
    for q in range(1, qmax + 1):
        for f in random_corpus(q, count, seed):
            d = decide_vanishing(f).decision
            fe, fo = even_odd_split(f)
            if d != (decide_vanishing(fe).decision and decide_vanishing(fo).decision):
                return False, f"even/odd split changes the decision for {f}"
            for a in units(q):
                if decide_vanishing(dilate(f, a)).decision != d:
                    return False, f"dilation by {a} changes the decision for {f}"
    return True, ""


def check_unit_supported(count: int, rng: random.Random) -> tuple[bool, str]:
    for q in (6, 8, 12, 15):
        for _ in range(count):
            f = random_unit_supported(q, rng)
            if decide_vanishing(f).decision:
                return False, f"nonzero unit-supported f vanishes: {f}"
    return True, ""


def check_numeric(qmax: int, count: int, prec: int, seed: int = 0) -> tuple[bool, str]:
    for q in range(2, qmax + 1):
        for f in random_corpus(q, count, seed)[: max(2, count // 4)]:
            reports = [L1(f, prec, m) for m in ("digamma", "hurwitz", "fourier_log")]
            if not all(reports[0].overlaps(r) for r in reports[1:]):
                return False, f"evaluators disagree on {f}"
            if decide_vanishing(f).decision != reports[0].contains_zero():
                return False, f"numeric value inconsistent with the decision for {f}"
    return True, ""


def check_digamma_recurrence(count: int, rng: random.Random, prec: int) -> tuple[bool, str]:
    for _ in range(count):
        x = Fraction(rng.randint(1, 999), 1000)
        diff = digamma(x + 1, prec) - digamma(x, prec) - Ball.exact(1 / x, prec + 16)
        if not diff.contains_zero():
            return False, f"psi(x+1) - psi(x) != 1/x at x={x}"
    return True, ""


def check_unit_digamma_sum(qmax: int, prec: int) -> tuple[bool, str]:
    for q in range(2, qmax + 1):
        if not lemma4_check(q, prec)[2]:
            return False, f"unit digamma sum not below -gamma phi(q) at q={q}"
    return True, ""


def run_all(level: int = 1, seed: int = 0) -> list[CheckResult]:
    sz = _sizes(level)
    rng = random.Random(seed)
    qmax, count, prec = sz["qmax"], sz["count"], sz["prec"]
    suite = [
        ("fourier round trip", lambda: check_fourier_roundtrip(qmax, rng)),
        ("norm of 1 - zeta^b", lambda: check_norm(qmax)),
        ("residue weights", lambda: check_weights(qmax)),
        ("unit average of condition A", lambda: check_unit_average(qmax, count // 2 + 1, rng)),
        ("eps against brute force", lambda: check_epsilon_bruteforce(min(qmax, 30))),
        ("product criterion agrees", lambda: check_routes(qmax, count, seed)),
        ("even/odd split and dilation", lambda: check_symmetries(min(qmax, 12), count // 2 + 1, seed)),
        ("unit-supported functions never vanish", lambda: check_unit_supported(count * 2, rng)),
        ("numeric evaluators agree", lambda: check_numeric(min(qmax, 12), count, prec, seed)),
        ("digamma recurrence", lambda: check_digamma_recurrence(count, rng, prec)),
        ("unit digamma sum bound", lambda: check_unit_digamma_sum(sz["digamma_qmax"], 96)),
    ]
    out = []
    for name, fn in suite:
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, ok, detail, time.perf_counter() - t))
    return out


__all__ = ["CheckResult", "run_all"]
