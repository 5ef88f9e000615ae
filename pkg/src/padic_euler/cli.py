"""Command-line front end: compute values, list characters, run the suites.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
3 unsupported embedding or exhausted precision.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .characters import enumerate_characters
from .errors import DomainError, PrecisionError, UnsupportedEmbedding
from .euler import euler_number_multi
from .lpadic import PadicLQuery, derivative_report, l_derivative_at_0, l_padic
from .lvalues import (
    LNegQuery,
    generalized_euler_number,
    generalized_euler_numbers_gf,
    l_value_neg,
)
from .ntheory import euler_phi, is_prime
from .padic import PadicContext, PadicNum
from .serialize import (
    character_to_json,
    cyc_to_json,
    padic_to_json,
    rational_to_json,
)
from .verify import run_suites


def _positive_odd(text: str) -> int:
    v = int(text)
    if v < 1 or v % 2 == 0:
        raise argparse.ArgumentTypeError(f"expected a positive odd integer, got {text}")
    return v


def _odd_prime(text: str) -> int:
    v = int(text)
    if v == 2 or not is_prime(v):
        raise argparse.ArgumentTypeError(f"expected an odd prime, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def parse_s(text: str, p: int, prec: int):
    """Evaluation point: decimal integer, fraction a/b, or base-p digits d0,d1,..."""
    if "," in text:
        digits = [int(d) for d in text.split(",")]
        if any(not 0 <= d < p for d in digits):
            raise DomainError(f"digits must lie in 0..{p - 1}")
        value = 0
        for d in reversed(digits):
            value = value * p + d
        return PadicNum.from_int(value, p, min(len(digits), prec))
    if "/" in text:
        return Fraction(text)
    return int(text)


def _guard_from_env() -> int:
    raw = os.environ.get("PADIC_EULER_GUARD")
    if raw is None:
        return 10
    guard = int(raw)
    if guard < 0:
        raise DomainError(f"PADIC_EULER_GUARD must be >= 0, got {raw}")
    return guard


def _pick_character(f: int, index: int):
    if index >= euler_phi(f):
        raise DomainError(f"chi index {index} out of range: phi({f}) = {euler_phi(f)}")
    return enumerate_characters(f)[index]


def _emit(args, payload, table_lines):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in table_lines:
            print(line)


def _rational_str(x: Fraction) -> str:
    return str(x)


def cmd_euler(args) -> int:
    value = euler_number_multi(args.n, args.r)
    _emit(args, rational_to_json(value), [f"E_{args.n}^({args.r}) = {_rational_str(value)}"])
    return 0


def cmd_chars(args) -> int:
    chars = enumerate_characters(args.f, primitive_only=args.primitive_only)
    if args.format == "json":
        print(json.dumps([character_to_json(c) for c in chars], sort_keys=True))
    else:
        print(f"{'index':>5}  {'exponents':<16} {'order':>5}  {'conductor':>9}  primitive")
        for c in chars:
            print(
                f"{c.index:>5}  {str(list(c.exponents)):<16} {c.order:>5}  "
                f"{c.conductor:>9}  {'yes' if c.is_primitive else 'no'}"
            )
    return 0


def cmd_lneg(args) -> int:
    chi = _pick_character(args.f, args.chi)
    F = args.F_mult * chi.modulus
    value = l_value_neg(LNegQuery(args.n, args.r, chi, F))
    _emit(
        args,
        cyc_to_json(value),
        [f"l_{args.r}(-{args.n}, chi_{args.f}#{args.chi}) = {value}  (F = {F})"],
    )
    return 0


def cmd_gfcheck(args) -> int:
    chi = _pick_character(args.f, args.chi)
    oracle = generalized_euler_numbers_gf(args.nmax, args.r, chi)
    rows = []
    all_ok = True
    for n in range(args.nmax + 1):
        fin = generalized_euler_number(n, args.r, chi, chi.modulus)
        ok = fin == oracle[n]
        all_ok = all_ok and ok
        rows.append((n, oracle[n], fin, ok))
    if args.format == "json":
        for n, orc, fin, ok in rows:
            print(
                json.dumps(
                    {"n": n, "series": cyc_to_json(orc), "finite_sum": cyc_to_json(fin), "match": ok},
                    sort_keys=True,
                )
            )
    else:
        print(f"{'n':>3}  {'series':<24} {'finite sum':<24} match")
        for n, orc, fin, ok in rows:
            print(f"{n:>3}  {str(orc):<24} {str(fin):<24} {'ok' if ok else 'MISMATCH'}")
    return 0 if all_ok else 1


def _build_query(args) -> PadicLQuery:
    chi = _pick_character(args.f, args.chi)
    ctx = PadicContext(args.p, args.prec, _guard_from_env())
    F = args.F_mult * args.p * chi.modulus
    return PadicLQuery(args.p, args.r, chi, F, ctx)


def cmd_plval(args) -> int:
    q = _build_query(args)
    s = parse_s(args.s, args.p, args.prec)
    value = l_padic(s, q)
    _emit(args, padic_to_json(value), [f"l_(p={args.p}),{args.r}({args.s}, chi) = {value}"])
    return 0


def cmd_pderiv(args) -> int:
    q = _build_query(args)
    if args.method == "fd":
        value = l_derivative_at_0(q, "fd", fd_k=args.fd_k)
    else:
        value = l_derivative_at_0(q, args.method)
    if args.format == "json":
        print(json.dumps(padic_to_json(value), sort_keys=True))
        return 0
    report = derivative_report(q, fd_k=args.fd_k)
    print(f"d/ds l_(p={args.p}),{args.r}(0, chi)  [method={args.method}]")
    print(f"  value       = {value}")
    print(f"  direct      = {report['direct']}")
    print(f"  corollary2  = {report['corollary2']}")
    print(f"  fd (k={args.fd_k})   = {report['fd']}")
    print(f"  direct vs fd agree on {report['direct_vs_fd_digits']} digits")
    print(f"  corollary2 - direct = {report['corollary2_minus_direct']}")
    return 0


def cmd_verify(args) -> int:
    results = run_suites([args.suite], p=args.p, f=args.f, prec=args.prec)
    failures = 0
    for res in results:
        if args.format == "json":
            print(
                json.dumps(
                    {"suite": res.suite, "name": res.name, "pass": res.passed, "detail": res.detail},
                    sort_keys=True,
                )
            )
        else:
            mark = "ok  " if res.passed else "FAIL"
            extra = f"  [{res.detail}]" if res.detail else ""
            print(f"{mark} {res.suite} :: {res.name}{extra}")
        failures += 0 if res.passed else 1
    if args.format != "json":
        print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-euler",
        description="Multiple Euler numbers, twisted l-values, and p-adic interpolation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=("json", "table"), default="json")

    sp = sub.add_parser("euler", help="order-r Euler number E_n^{(r)}")
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--r", type=_positive, default=1)
    add_format(sp)
    sp.set_defaults(func=cmd_euler)

    sp = sub.add_parser("chars", help="list Dirichlet characters mod f")
    sp.add_argument("--f", type=_positive_odd, required=True)
    sp.add_argument("--primitive-only", action="store_true")
    add_format(sp)
    sp.set_defaults(func=cmd_chars)

    sp = sub.add_parser("lneg", help="l_r(-n, chi) as an exact cyclotomic value")
    sp.add_argument("--f", type=_positive_odd, required=True)
    sp.add_argument("--chi", type=_nonneg, required=True, help="character index mod f")
    sp.add_argument("--r", type=_positive, default=1)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--F-mult", dest="F_mult", type=_positive_odd, default=1)
    add_format(sp)
    sp.set_defaults(func=cmd_lneg)

    sp = sub.add_parser("gfcheck", help="generating-function oracle vs finite sum")
    sp.add_argument("--f", type=_positive_odd, required=True)
    sp.add_argument("--chi", type=_nonneg, required=True)
    sp.add_argument("--r", type=_positive, default=1)
    sp.add_argument("--nmax", type=_nonneg, required=True)
    add_format(sp)
    sp.set_defaults(func=cmd_gfcheck)

    sp = sub.add_parser("plval", help="p-adic l-function value")
    sp.add_argument("--p", type=_odd_prime, required=True)
    sp.add_argument("--f", type=_positive_odd, required=True)
    sp.add_argument("--chi", type=_nonneg, required=True)
    sp.add_argument("--r", type=_positive, default=1)
    sp.add_argument("--s", required=True, help="integer, fraction a/b, or base-p digits d0,d1,...")
    sp.add_argument("--prec", type=_positive, required=True)
    sp.add_argument("--F-mult", dest="F_mult", type=_positive_odd, default=1)
    add_format(sp)
    sp.set_defaults(func=cmd_plval)

    sp = sub.add_parser("pderiv", help="derivative of the p-adic l-function at s=0")
    sp.add_argument("--p", type=_odd_prime, required=True)
    sp.add_argument("--f", type=_positive_odd, required=True)
    sp.add_argument("--chi", type=_nonneg, required=True)
    sp.add_argument("--r", type=_positive, default=1)
    sp.add_argument("--prec", type=_positive, required=True)
    sp.add_argument("--method", choices=("corollary2", "direct", "fd"), default="direct")
    sp.add_argument("--fd-k", dest="fd_k", type=_positive, default=5)
    sp.add_argument("--F-mult", dest="F_mult", type=_positive_odd, default=1)
    add_format(sp)
    sp.set_defaults(func=cmd_pderiv)

    sp = sub.add_parser("verify", help="run the identity suites")
    sp.add_argument("--suite", choices=("euler", "complex", "padic", "derivative", "all"), required=True)
    sp.add_argument("--p", type=_odd_prime, default=None)
    sp.add_argument("--f", type=_positive_odd, default=None)
    sp.add_argument("--prec", type=_positive, default=None)
    add_format(sp)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnsupportedEmbedding, PrecisionError) as exc:
        print(f"error: {exc}  (args: {vars(args)})", file=sys.stderr)
        return 3
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
