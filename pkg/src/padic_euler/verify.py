"""Machine-checkable identity suites, shared by the CLI and the test suite.

Each check is deterministic and exact: no tolerances beyond the stated
number of guaranteed p-adic digits.  Suites: euler, complex, padic,
derivative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .characters import enumerate_characters
from .euler import (
    euler_number,
    euler_number_multi,
    euler_number_multi_recurrence,
    euler_polynomial_multi,
    series_expand_multi,
)
from .lpadic import PadicLQuery, l_derivative_at_0, l_padic, l_padic_interp
from .lvalues import (
    LNegQuery,
    generalized_euler_number,
    generalized_euler_numbers_gf,
    l_value_neg,
    partial_zeta_neg,
    partial_zeta_neg_binomial,
)
from .padic import PadicContext, PadicNum, angle, angle_pow_neg_s, iwasawa_log, teichmuller


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _check(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, bool(passed), detail)


# -- euler -------------------------------------------------------------------


def suite_euler() -> list[CheckResult]:
    out = []
    constants = {0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(0), 3: Fraction(1, 4)}
    ok = all(euler_number(n) == v for n, v in constants.items())
    out.append(_check("euler", "base values E_0..E_3", ok))
    ok = all(euler_number(2 * k) == 0 for k in range(1, 7))
    out.append(_check("euler", "E_{2k} = 0 for k <= 6", ok))

    for r in range(1, 5):
        conv = [euler_number_multi(n, r) for n in range(13)]
        rec = [euler_number_multi_recurrence(n, r) for n in range(13)]
        ser = series_expand_multi(12, r, 0)
        out.append(_check("euler", f"three routes agree, r={r}, n<=12", conv == rec == ser))

    xs = [Fraction(0), Fraction(1), Fraction(1, 3), Fraction(2, 3), Fraction(-1, 2)]
    ok = True
    for r in range(1, 4):
        for x in xs:
            ser = series_expand_multi(10, r, x)
            if any(euler_polynomial_multi(n, r, x) != ser[n] for n in range(11)):
                ok = False
    out.append(_check("euler", "polynomial route = series route on x grid", ok))

    ok = True
    pairs = [(Fraction(1, 3), Fraction(1)), (Fraction(-1, 2), Fraction(2, 5)), (Fraction(0), Fraction(7, 3))]
    for r in (1, 2, 3):
        for x, y in pairs:
            for n in range(9):
                lhs = euler_polynomial_multi(n, r, x + y)
                rhs = sum(
                    comb(n, k) * euler_polynomial_multi(k, r, x) * y ** (n - k)
                    for k in range(n + 1)
                )
                if lhs != rhs:
                    ok = False
    out.append(_check("euler", "addition identity E_n^{(r)}(x+y)", ok))
    return out


# -- complex -----------------------------------------------------------------


def suite_complex(fs=(1, 3, 5), n_max: int = 8, r_max: int = 3) -> list[CheckResult]:
    out = []
    for f in fs:
        for chi in enumerate_characters(f, primitive_only=True):
            for r in range(1, r_max + 1):
                oracle = generalized_euler_numbers_gf(n_max, r, chi)
                ok_routes = True
                ok_findep = True
                for n in range(n_max + 1):
                    for F in (f, 3 * f, 5 * f):
                        fin = generalized_euler_number(n, r, chi, F)
                        lv = l_value_neg(LNegQuery(n, r, chi, F))
                        lvb = l_value_neg(LNegQuery(n, r, chi, F), route="binomial")
                        if not (fin == lv == lvb):
                            ok_routes = False
                        if fin != oracle[n]:
                            ok_findep = False
                tag = f"f={f} chi#{chi.index} r={r}"
                out.append(_check("complex", f"oracle = finite sum = l-value [{tag}]", ok_routes))
                out.append(_check("complex", f"F-independence over F in (f,3f,5f) [{tag}]", ok_findep))

    ok = True
    for F in range(1, 16, 2):
        for r in (1, 2):
            tuples = [(a,) for a in range(1, F + 1)] if r == 1 else [
                (a, b) for a in range(1, F + 1) for b in range(1, F + 1)
            ]
            for n in range(7):
                for tup in tuples:
                    if partial_zeta_neg(n, tup, F, r) != partial_zeta_neg_binomial(n, tup, F, r):
                        ok = False
    out.append(_check("complex", "partial zeta: direct = truncated binomial (F<=15, r<=2, n<=6)", ok))
    return out


# -- padic -------------------------------------------------------------------


def _theorem_grid(ps):
    grid = []
    if 5 in ps:
        grid.append((5, 3, enumerate_characters(3)[1]))
        grid.append((5, 1, enumerate_characters(1)[0]))
    if 7 in ps:
        grid.append((7, 5, enumerate_characters(5)[2]))
    return grid


def suite_padic(ps=(5, 7), prec: int = 15, core_prec: int = 20) -> list[CheckResult]:
    out = []
    for p in ps:
        ctx = PadicContext(p, core_prec)
        units = [a for a in range(1, 201) if a % p]
        w = {a: teichmuller(a, ctx) for a in units}
        ok = all((w[a] ** (p - 1)).residue() == 1 for a in units)
        out.append(_check("padic", f"omega(a)^(p-1) = 1 mod p^{core_prec} [p={p}]", ok))
        ok = all(w[a].residue(1) == a % p for a in units)
        out.append(_check("padic", f"omega(a) = a mod p [p={p}]", ok))
        ok = all(
            (w[a] * w[b]).cap(core_prec) == teichmuller(a * b, ctx)
            for a in units
            for b in units
        )
        out.append(_check("padic", f"omega multiplicative on units <= 200 [p={p}]", ok))
        ang = {a: angle(a, ctx) for a in units}
        ok = all(
            (ang[a] * ang[b]).cap(core_prec) == angle(a * b, ctx)
            for a in units
            for b in units
        )
        out.append(_check("padic", f"<ab> = <a><b> on units <= 200 [p={p}]", ok))
        logs = {a: iwasawa_log(PadicNum.from_int(a, p, ctx.work_prec), ctx) for a in units}
        mults = [b for b in (2, 3, 11, 13, 199) if b % p]
        ok = True
        for a in units:
            for b in mults:
                lhs = iwasawa_log(PadicNum.from_int(a * b, p, ctx.work_prec), ctx)
                if (logs[a] + logs[b]).cap(core_prec) != lhs:
                    ok = False
        out.append(_check("padic", f"log(ab) = log(a) + log(b), a <= 200 [p={p}]", ok))
        ok = True
        for a in (2, 3, p + 2):
            for n in range(4):
                via_series = angle_pow_neg_s(a, PadicNum.from_int(-n, p, ctx.work_prec), ctx)
                exact = (angle(a, ctx) ** n).cap(core_prec)
                if via_series != exact:
                    ok = False
        out.append(_check("padic", f"angle power series = integer powers [p={p}]", ok))

    for p, f, chi in _theorem_grid(ps):
        ctx = PadicContext(p, prec)
        for r in (1, 2):
            q = PadicLQuery(p, r, chi, p * f, ctx)
            for n in range(6):
                lhs = l_padic(-n, q)
                rhs = l_padic_interp(n, q)
                d = lhs.agree_digits(rhs)
                out.append(
                    _check(
                        "padic",
                        f"series l(-n) = twisted-sum value [p={p} f={f} r={r} n={n}]",
                        d >= prec - 3,
                        f"{d} digits",
                    )
                )
            # stability under 10 extra guard digits
            qg = PadicLQuery(p, r, chi, p * f, ctx.with_guard(ctx.guard + 10))
            ok = all(
                l_padic(-n, q) == l_padic(-n, qg)
                and l_padic_interp(n, q) == l_padic_interp(n, qg)
                for n in range(6)
            )
            out.append(_check("padic", f"guard stability [p={p} f={f} r={r}]", ok))
    return out


# -- derivative --------------------------------------------------------------


def suite_derivative(ps=(5, 7), prec: int = 20) -> list[CheckResult]:
    out = []
    for p, f, chi in _theorem_grid(ps):
        ctx = PadicContext(p, prec)
        for r in (1, 2):
            q = PadicLQuery(p, r, chi, p * f, ctx)
            direct = l_derivative_at_0(q, "direct")
            printed = l_derivative_at_0(q, "corollary2")
            ok = True
            details = []
            for k in range(3, 9):
                fd = l_derivative_at_0(q, "fd", fd_k=k)
                d = direct.agree_digits(fd)
                details.append(f"k={k}:{d}")
                if d < k - 3:
                    ok = False
            out.append(
                _check(
                    "derivative",
                    f"|direct - fd(k)| <= p^-(k-3), k=3..8 [p={p} f={f} r={r}]",
                    ok,
                    " ".join(details),
                )
            )
            disc = printed - direct
            q3 = PadicLQuery(p, r, chi, 3 * p * f, ctx)
            disc_f = l_derivative_at_0(q3, "corollary2") - l_derivative_at_0(q3, "direct")
            ctx10 = PadicContext(p, prec + 10)
            q10 = PadicLQuery(p, r, chi, p * f, ctx10)
            disc_n = (
                l_derivative_at_0(q10, "corollary2") - l_derivative_at_0(q10, "direct")
            ).cap(prec)
            out.append(
                _check(
                    "derivative",
                    f"printed-vs-direct discrepancy stable under F->3F, N->N+10 [p={p} f={f} r={r}]",
                    disc == disc_f == disc_n,
                    str(disc),
                )
            )
            qg = PadicLQuery(p, r, chi, p * f, ctx.with_guard(ctx.guard + 10))
            ok = (
                l_derivative_at_0(qg, "direct") == direct
                and l_derivative_at_0(qg, "corollary2") == printed
                and l_derivative_at_0(qg, "fd", fd_k=5) == l_derivative_at_0(q, "fd", fd_k=5)
            )
            out.append(_check("derivative", f"guard stability [p={p} f={f} r={r}]", ok))
    return out


SUITES = {
    "euler": lambda p, f, prec: suite_euler(),
    "complex": lambda p, f, prec: suite_complex(fs=(f,) if f else (1, 3, 5)),
    "padic": lambda p, f, prec: suite_padic(ps=(p,) if p else (5, 7), prec=prec or 15),
    "derivative": lambda p, f, prec: suite_derivative(ps=(p,) if p else (5, 7), prec=prec or 20),
}


def run_suites(names, p: int | None = None, f: int | None = None, prec: int | None = None):
    if "all" in names:
        names = list(SUITES)
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        results.extend(SUITES[name](p, f, prec))
    return results
