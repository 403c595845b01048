"""Self-checks runnable from the command line.

Every suite returns a list of :class:`CheckResult`; nothing here raises on
a mismatch, so a single run reports every failure at once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from .algebra import Polynomial, PowerSeries
from .errors import DomainError, VerificationError
from .genfun import (
    DEFAULT_ORDER,
    k1_assembled,
    k1_closed,
    k2_assembled,
    k2_closed,
    series_D,
)
from .moduli import chi_m0_open, chi_m1_open, chi_m2_open
from .oracle import (
    PermutationGroupAction,
    action_for_spec,
    burnside_polynomial,
    tree_contribution_sum,
)
from .quotients import QuotientKind, QuotientSpec, evaluate
from .strata import chi_m1_recursive, chi_m1_via_strata, chi_m2_recursive, chi_m2_via_strata

__all__ = ["CheckResult", "SUITES", "run_suite", "run_suites", "genus0_specs"]

POINT_COUNT_FIELDS = (2, 3, 4, 5, 7, 8, 9)
MAX_ORACLE_SIZE = 9


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    expected: str = ""
    actual: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.suite}: {self.name}"
        if not self.passed:
            out += f" (expected {self.expected}, got {self.actual})"
        return out


def _eq(suite: str, name: str, expected, actual) -> CheckResult:
    return CheckResult(suite, name, expected == actual, str(expected), str(actual))


# --------------------------------------------------------------------------
# series-algebra
# --------------------------------------------------------------------------


def _rand_frac(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


def _rand_series(rng: random.Random, order: int, zero_constant: bool = False) -> PowerSeries:
    cs = [_rand_frac(rng) for _ in range(order)]
    if zero_constant:
        cs[0] = Fraction(0)
    return PowerSeries(cs, order)


def _rand_poly(rng: random.Random, max_degree: int = 5) -> Polynomial:
    return Polynomial([_rand_frac(rng) for _ in range(rng.randint(0, max_degree) + 1)])


def _series_algebra(cases: int = 500, seed: int = 20240601) -> list[CheckResult]:
    rng = random.Random(seed)
    tallies: dict[str, list[int]] = {}

    def record(name: str, ok: bool) -> None:
        t = tallies.setdefault(name, [0, 0])
        t[0] += 1
        t[1] += ok

    for _ in range(cases):
        order = rng.randint(2, 8)
        a, b, c = (_rand_series(rng, order) for _ in range(3))
        record("series ring axioms", a + b == b + a and a * b == b * a
               and (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
               and a * (b + c) == a * b + a * c)
        p, r, s = (_rand_poly(rng) for _ in range(3))
        record("polynomial ring axioms", p + r == r + p and p * r == r * p
               and (p * r) * s == p * (r * s) and p * (r + s) == p * r + p * s)
        f = _rand_series(rng, order, zero_constant=True)
        record("exp/log1p inversion", f.log1p().exp() == 1 + f and (f.exp() - 1).log1p() == f)
        record("product rule", (a * b).derivative() == a.derivative() * b + a * b.derivative())
        den = _rand_poly(rng)
        if den.is_zero():
            den = Polynomial([1, 1])
        record("exact polynomial division", (p * den).exact_div(den) == p)
        x, y = _rand_frac(rng), _rand_frac(rng)
        record("rational exactness", (x + y) - x == y)

    return [
        CheckResult("series-algebra", f"{name} ({ok}/{n} cases)", ok == n, str(n), str(ok))
        for name, (n, ok) in tallies.items()
    ]


# --------------------------------------------------------------------------
# quotients-vs-oracle
# --------------------------------------------------------------------------


def genus0_specs(max_size: int = MAX_ORACLE_SIZE) -> Iterator[QuotientSpec]:
    """Every in-range genus-0 quotient with all sizes at most ``max_size``."""
    sizes = range(3, max_size + 1)
    for n in sizes:
        for j in range(n + 1):
            yield QuotientSpec(QuotientKind.M0ModSj, (n,), j)
    for kind in (QuotientKind.M0ModKlein, QuotientKind.M0ModD4):
        for n in range(4, max_size + 1):
            yield QuotientSpec(kind, (n,))
    for kind in (QuotientKind.Prod2ModS2, QuotientKind.Prod2ModS3, QuotientKind.Prod2ModKlein):
        for n1 in sizes:
            for n2 in range(n1, max_size + 1):
                yield QuotientSpec(kind, (n1, n2))
    for n1 in sizes:
        for n2 in range(n1, max_size + 1):
            for n3 in range(4, max_size + 1):
                yield QuotientSpec(QuotientKind.Prod3ModKlein, (n1, n2, n3))


def _spec_label(spec: QuotientSpec) -> str:
    args = ",".join(map(str, spec.sizes))
    if spec.j is not None:
        args += f"; j={spec.j}"
    return f"{spec.kind.value}({args})"


def _quotients_vs_oracle() -> list[CheckResult]:
    suite = "quotients-vs-oracle"
    out = []
    for spec in genus0_specs():
        try:
            table = evaluate(spec)
        except DomainError:
            continue  # outside the tabulated range
        label = _spec_label(spec)
        try:
            P = burnside_polynomial(action_for_spec(spec))
        except VerificationError as exc:
            out.append(CheckResult(suite, f"{label} exact division", False, "exact", str(exc)))
            continue
        out.append(_eq(suite, f"{label} table vs oracle", table, P(1)))
        counts = [P(q) for q in POINT_COUNT_FIELDS]
        ok = all(c.denominator == 1 and c >= 0 for c in counts)
        out.append(CheckResult(suite, f"{label} point counts", ok,
                               "nonnegative integers", ", ".join(map(str, counts))))
    for n in range(3, 11):
        trivial = PermutationGroupAction.generated((n,), [])
        out.append(_eq(suite, f"trivial group on M_0,{n}", chi_m0_open(n),
                       burnside_polynomial(trivial)(1)))
    return out


# --------------------------------------------------------------------------
# strata, k1, k2, trees
# --------------------------------------------------------------------------


def _strata() -> list[CheckResult]:
    suite = "strata"
    out = []
    for n in range(7):
        out.append(_eq(suite, f"chi(M_2,{n}) via strata", chi_m2_open(n), chi_m2_via_strata(n)))
    for n in range(7, 16):
        out.append(_eq(suite, f"chi(M_2,{n}) via recursion", chi_m2_open(n), chi_m2_recursive(n)))
    for n in range(1, 5):
        out.append(_eq(suite, f"chi(M_1,{n}) via strata", chi_m1_open(n), chi_m1_via_strata(n)))
    for n in range(5, 13):
        out.append(_eq(suite, f"chi(M_1,{n}) via recursion", chi_m1_open(n), chi_m1_recursive(n)))
    return out


def _guarded(suite: str, name: str, fn: Callable[[], list[CheckResult]]) -> list[CheckResult]:
    try:
        return fn()
    except VerificationError as exc:
        return [CheckResult(suite, name, False, "internal cross-checks agree", str(exc))]


def _k1(order: int = DEFAULT_ORDER) -> list[CheckResult]:
    suite = "k1"

    def run():
        closed, assembled = k1_closed(order), k1_assembled(order)
        values = closed.egf_values()
        return [
            _eq(suite, f"assembled == closed through order {order}", closed, assembled),
            CheckResult(suite, f"n! [t^n] K1 integral for n < {order}",
                        all(v.denominator == 1 for v in values), "integers",
                        ", ".join(map(str, values))),
        ]

    return _guarded(suite, "K1 computation", run)


K2_EXPANSION = ("6", "13", "21", "181/6", "251/6", "6853/120", "27971/360", "177673/1680")
K2_TABLE = (6, 13, 42, 181, 1004, 6853, 55942, 533019)


def _k2(order: int = DEFAULT_ORDER) -> list[CheckResult]:
    suite = "k2"

    def run():
        closed, assembled = k2_closed(order), k2_assembled(order)
        values = closed.egf_values()
        return [
            _eq(suite, f"assembled == closed through order {order}", closed, assembled),
            _eq(suite, "expansion through t^7", list(K2_EXPANSION), closed.to_strings()[:8]),
            _eq(suite, "chi(Mbar_2,n) for n = 0..7", list(K2_TABLE), [int(v) for v in values[:8]]),
            CheckResult(suite, f"n! [t^n] K2 integral for n < {order}",
                        all(v.denominator == 1 for v in values), "integers",
                        ", ".join(map(str, values))),
        ]

    return _guarded(suite, "K2 computation", run)


def _trees(max_n: int = 8) -> list[CheckResult]:
    D = series_D(max(DEFAULT_ORDER, max_n + 1))
    return [
        _eq("trees", f"tree sum n={n} vs n! [t^n] D", D[n] * factorial(n), tree_contribution_sum(n))
        for n in range(2, max_n + 1)
    ]


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "series-algebra": _series_algebra,
    "quotients-vs-oracle": _quotients_vs_oracle,
    "strata": _strata,
    "k1": _k1,
    "k2": _k2,
    "trees": _trees,
}


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return sorted(SUITES[name](), key=lambda r: r.name)


def run_suites(names: list[str]) -> list[CheckResult]:
    if "all" in names:
        names = list(SUITES)
    out = []
    for name in names:
        out.extend(run_suite(name))
    return out
