"""Command-line interface: ``lseries-vanish <command> ...``.

Function files are JSON objects ``{"modulus": q, "values": ["v1", ..., "vq"]}``
where ``values[a-1]`` is f(a) for a = 1..q (the last slot is f(q) = f(0)).
Values are exact rationals written as strings ("3", "-7/12"); bare JSON
integers are accepted, floats are not.

Exit codes: 0 vanishing / success, 1 nonvanishing, 2 pole, 64 bad input,
65 precondition violated, 66 precision exhausted, 70 the two decision routes
disagree (an internal error).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from .characters import enumerate_characters, unit_group
from .core import PeriodicFunction, as_fraction
from .cyclotomic import coefficient_matrix, fourier_transform, theorem1_decide
from .errors import (
    ParseError,
    PoleError,
    PrecisionExhausted,
    PreconditionError,
    RouteDisagreement,
)
from .numeric import METHODS, L1, L_s
from .okada import decide_vanishing, epsilon, epsilon_table, kernel_basis

SCHEMA = "lseries-vanish/1"
MAX_PRECISION = 16384

EXIT_OK = 0
EXIT_NONVANISHING = 1
EXIT_POLE = 2
EXIT_PARSE = 64
EXIT_PRECONDITION = 65
EXIT_PRECISION = 66
EXIT_DISAGREEMENT = 70


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage, which would read as "pole"."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


# --- input -------------------------------------------------------------------


def parse_function_document(text: str) -> PeriodicFunction:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "modulus" not in doc or "values" not in doc:
        raise ParseError('expected an object with keys "modulus" and "values"')
    q = doc["modulus"]
    if not isinstance(q, int) or isinstance(q, bool) or q < 1:
        raise ParseError(f"modulus must be a positive integer, got {q!r}")
    values = doc["values"]
    if not isinstance(values, list) or len(values) != q:
        raise ParseError(f"values must be an array of exactly {q} entries")
    out = []
    for i, v in enumerate(values, start=1):
        if isinstance(v, bool) or not isinstance(v, (str, int)):
            raise ParseError(f"value {i} must be a rational string, got {v!r}")
        try:
            out.append(as_fraction(v))
        except (ValueError, ZeroDivisionError, TypeError):
            raise ParseError(f"value {i} is not an exact rational: {v!r}") from None
    return PeriodicFunction(q, tuple(out))


def load_function(path: str) -> PeriodicFunction:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_function_document(text)


# --- output helpers ----------------------------------------------------------


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _ball_doc(value, prec: int) -> dict[str, Any]:
    from .numeric import ComplexBall

    digits = max(10, int(prec * 0.30103))
    if isinstance(value, ComplexBall):
        return {
            "real": {"midpoint": value.re.mid_str(digits), "radius": value.re.rad_str()},
            "imag": {"midpoint": value.im.mid_str(digits), "radius": value.im.rad_str()},
        }
    return {"midpoint": value.mid_str(digits), "radius": value.rad_str()}


def _ball_text(value) -> str:
    from .numeric import ComplexBall

    if isinstance(value, ComplexBall):
        return f"({_ball_text(value.re)}) + i({_ball_text(value.im)})"
    return f"{value.mid_str(30)} +/- {value.rad_str()}"


def _emit(doc: dict, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _function_doc(f: PeriodicFunction) -> dict:
    return {"modulus": f.modulus, "values": [_q(v) for v in f.values]}


# --- commands ----------------------------------------------------------------


def cmd_decide(args) -> int:
    f = load_function(args.path)
    prec = args.precision
    doc: dict[str, Any] = {"schema": SCHEMA, "command": "decide", "input": _function_doc(f)}
    doc["mean"] = _q(f.mean)
    lines = [f"f = {f}", f"mean: {f.mean}"]
    if not f.zero_mean:
        doc["decision"] = "pole"
        doc["residue"] = _q(f.mean)
        lines.append(f"decision: pole (L(s, f) has a simple pole at s = 1 with residue {f.mean})")
        _emit(doc, args.format, "\n".join(lines))
        return EXIT_POLE

    cert = None
    t1 = None
    if args.route in ("okada", "both"):
        cert = decide_vanishing(f)
        doc["okada"] = {
            "decision": "vanishing" if cert.decision else "nonvanishing",
            "condition_a_residuals": {str(a): _q(v) for a, v in cert.condition_a_residuals.items()},
            "condition_b_residuals": {str(p): _q(v) for p, v in cert.condition_b_residuals.items()},
        }
        lines.append("unit conditions: " + ", ".join(f"a={a}: {v}" for a, v in cert.condition_a_residuals.items()))
        lines.append(
            "prime conditions: "
            + (", ".join(f"p={p}: {v}" for p, v in cert.condition_b_residuals.items()) or "(none)")
        )
    if args.route in ("theorem1", "both"):
        t1 = theorem1_decide(f, prec)
        doc["theorem1"] = {
            "decision": "vanishing" if t1.vanishing else "nonvanishing",
            "exponent_scale": t1.exponent_scale,
            "products_are_one": t1.products_are_one,
            "root_of_unity_indices": t1.root_of_unity_indices,
        }
        lines.append(
            "product criterion: " + ("vanishing" if t1.vanishing else "nonvanishing")
        )
    decision = cert.decision if cert is not None else t1.vanishing
    agree = cert is None or t1 is None or cert.decision == t1.vanishing
    doc["theorem1_agrees"] = agree if (cert is not None and t1 is not None) else None

    report = L1(f, prec)
    doc["numeric"] = {
        "method": report.method,
        "precision_bits": prec,
        "value": _ball_doc(report.value, prec),
        "contains_zero": report.value.contains_zero(),
    }
    lines.append(f"L(1, f) = {_ball_text(report.value)}  [{prec} bits, {report.method}]")
    doc["decision"] = "vanishing" if decision else "nonvanishing"
    lines.append(f"decision: {doc['decision']}")
    if not agree:
        doc["decision"] = "disagreement"
        _emit(doc, args.format, "\n".join(lines + ["ROUTES DISAGREE"]))
        return EXIT_DISAGREEMENT
    _emit(doc, args.format, "\n".join(lines))
    return EXIT_OK if decision else EXIT_NONVANISHING


def cmd_kernel(args) -> int:
    basis = kernel_basis(args.q)
    doc = {
        "schema": SCHEMA,
        "command": "kernel",
        "modulus": args.q,
        "dimension": len(basis),
        "basis": [[_q(v) for v in b.values] for b in basis],
    }
    lines = [f"modulus {args.q}: dimension {len(basis)}"]
    lines += ["[" + ", ".join(str(v) for v in b.values) + "]" for b in basis]
    _emit(doc, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_eval(args) -> int:
    f = load_function(args.path)
    try:
        s = Fraction(args.s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"s must be an exact decimal or fraction, got {args.s!r}") from None
    methods = METHODS if args.method == "all" else (args.method,)
    doc: dict[str, Any] = {"schema": SCHEMA, "command": "eval", "input": _function_doc(f), "s": _q(s)}
    lines = [f"f = {f}", f"s = {s}"]
    try:
        if s == 1:
            reports = [L1(f, args.precision, m, terms=args.terms) for m in methods]
        else:
            reports = [L_s(f, s, args.precision)]
    except PoleError as exc:
        doc["error"] = "pole"
        doc["residue"] = _q(exc.residue)
        lines.append(f"pole at s = 1 with residue {exc.residue}")
        _emit(doc, args.format, "\n".join(lines))
        return EXIT_POLE
    doc["reports"] = [
        {
            "method": r.method,
            "precision_bits": r.precision_bits,
            "terms_used": r.terms_used,
            "value": _ball_doc(r.value, r.precision_bits),
        }
        for r in reports
    ]
    for r in reports:
        lines.append(f"{r.method:>12}: {_ball_text(r.value)}  ({r.terms_used} terms)")
    _emit(doc, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_epsilon(args) -> int:
    q = args.q
    if args.r is not None and args.p is not None:
        value = epsilon(args.r, args.p, q)
        doc = {"schema": SCHEMA, "command": "epsilon", "modulus": q, "r": args.r, "p": args.p, "value": _q(value)}
        _emit(doc, args.format, str(value))
        return EXIT_OK
    table = epsilon_table(q)
    if args.p is not None:
        table = {k: v for k, v in table.items() if k[1] == args.p}
    if args.r is not None:
        table = {k: v for k, v in table.items() if k[0] == args.r}
    doc = {
        "schema": SCHEMA,
        "command": "epsilon",
        "modulus": q,
        "table": [{"r": r, "p": p, "value": _q(v)} for (r, p), v in table.items()],
    }
    lines = [f"r={r:<4} p={p:<4} {v}" for (r, p), v in table.items()]
    _emit(doc, args.format, "\n".join(lines) or "(no non-unit residues)")
    return EXIT_OK


def cmd_fourier(args) -> int:
    f = load_function(args.path)
    hat = fourier_transform(f)
    doc: dict[str, Any] = {
        "schema": SCHEMA,
        "command": "fourier",
        "input": _function_doc(f),
        "basis": "powers of zeta_q, constant first",
        "hat": [[_q(c) for c in h.coeffs] for h in hat],
    }
    lines = [f"f^({b}) = {h}" for b, h in enumerate(hat, start=1)]
    if f.zero_mean:
        doc["coefficient_matrix"] = [[_q(c) for c in row] for row in coefficient_matrix(f)]
    _emit(doc, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_characters(args) -> int:
    q = args.q
    group = unit_group(q)
    chars = enumerate_characters(q)
    L = group.exponent
    doc = {
        "schema": SCHEMA,
        "command": "characters",
        "modulus": q,
        "generators": list(group.generators),
        "orders": list(group.orders),
        "value_modulus": L,
        "characters": [
            {
                "exponents": list(c.exponents),
                "principal": c.is_principal(),
                "log_values": [c.log_value(a) for a in range(1, q + 1)],
            }
            for c in chars
        ],
    }

    def show(c, a):
        k = c.log_value(a)
        if k is None:
            return "0"
        if k == 0:
            return "1"
        if 2 * k == L:
            return "-1"
        return f"e({Fraction(k, L)})"

    lines = [
        f"modulus {q}: generators {list(group.generators)} of orders {list(group.orders)}",
        "values chi(a) for a = 1..q, e(x) = exp(2 pi i x)",
    ]
    for c in chars:
        tag = " (principal)" if c.is_principal() else ""
        lines.append(f"{list(c.exponents)}{tag}: " + " ".join(show(c, a) for a in range(1, q + 1)))
    _emit(doc, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .checks import run_all

    results = run_all(args.level, args.seed)
    doc = {
        "schema": SCHEMA,
        "command": "selftest",
        "level": args.level,
        "passed": all(r.passed for r in results),
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.seconds:.2f}s){'  ' + r.detail if r.detail else ''}"
        for r in results
    ]
    _emit(doc, args.format, "\n".join(lines))
    return EXIT_OK if doc["passed"] else EXIT_PRECONDITION


# --- entry point ---------------------------------------------------------------


def _precision(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 16 <= p <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must lie in 16..{MAX_PRECISION}")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lseries-vanish", description="Decide and evaluate L(1, f) for periodic rational f.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", parents=[fmt], help="decide whether L(1, f) = 0")
    p.add_argument("path", help="function file ('-' for stdin)")
    p.add_argument("--precision", type=_precision, default=128)
    p.add_argument("--route", choices=("okada", "theorem1", "both"), default="both")
    p.set_defaults(run=cmd_decide)

    p = sub.add_parser("kernel", parents=[fmt], help="basis of the functions mod q with L(1, f) = 0")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(run=cmd_kernel)

    p = sub.add_parser("eval", parents=[fmt], help="certified value of L(s, f)")
    p.add_argument("path")
    p.add_argument("--s", default="1")
    p.add_argument("--precision", type=_precision, default=128)
    p.add_argument("--method", choices=METHODS + ("all",), default="digamma")
    p.add_argument("--terms", type=int, default=100000, help="terms for the partial_sum method")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("epsilon", parents=[fmt], help="the prime weights eps(r, p)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=int)
    p.set_defaults(run=cmd_epsilon)

    p = sub.add_parser("fourier", parents=[fmt], help="exact finite Fourier transform")
    p.add_argument("path")
    p.set_defaults(run=cmd_fourier)

    p = sub.add_parser("characters", parents=[fmt], help="Dirichlet characters mod q")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(run=cmd_characters)

    p = sub.add_parser("selftest", parents=[fmt], help="run the invariant suites")
    p.add_argument("--level", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_POLE
    except RouteDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
