"""Generating functions for chi of the compactified moduli spaces.

Everything is a truncated power series in ``t``.  ``D`` is the exponential
generating function of stable rooted trees and ``E = log(1 + D)``; every
genus-1 and genus-2 contribution is an expression in ``D`` and ``E``
obtained by substituting the truncated series, so no two-variable algebra
is ever needed.

Each contribution is computed from its closed expression and, where an
independent route exists (a direct sum over open moduli spaces, or a
derivative of ``K_1``), checked against it.  A disagreement raises
:class:`~eulermgn.errors.VerificationError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .algebra import PowerSeries
from .errors import DomainError, VerificationError
from .moduli import chi_m0_open, chi_m1_open, chi_m2_open
from .quotients import chi_m0_mod_Sj, chi_prod2_mod_S2

__all__ = [
    "DEFAULT_ORDER",
    "SERIES_NAMES",
    "NamedSeries",
    "Corrections",
    "Substitution",
    "substitution",
    "series_D",
    "series_E",
    "egf_sum",
    "k1_vertex_contribution",
    "k1_loop_contribution",
    "k1_closed",
    "k1_assembled",
    "k2_generic",
    "k2_corrections",
    "k2_contribution",
    "k2_closed",
    "k2_assembled",
    "named_series",
    "chibar_table",
]

DEFAULT_ORDER = 12
K2_TYPES = (1, 234, 5, 6, 7)
SERIES_NAMES = (
    "D", "E", "K1", "K2", "K1_vertex", "K1_loop",
    "K2_type1", "K2_type234", "K2_type5", "K2_type6", "K2_type7",
)

F = Fraction


@dataclass(frozen=True)
class NamedSeries:
    name: str
    series: PowerSeries

    def __post_init__(self):
        if self.name not in SERIES_NAMES:
            raise DomainError(f"unknown series {self.name!r}")

    @property
    def order(self) -> int:
        return self.series.order


def _check_order(order: int) -> None:
    if order < 2:
        raise DomainError(f"truncation order must be at least 2, got {order}")


@lru_cache(maxsize=None)
def series_D(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Solve ``D' (1 - log(1 + D)) = 1``, ``D(0) = 0``, one coefficient at a time.

    With ``E = log(1 + D)`` the equation reads ``D' = 1 + E D'`` and
    ``E' (1 + D) = D'``.  Writing ``d, e`` for the coefficients of ``D, E``
    and ``dp, ep`` for those of their derivatives, coefficient ``k`` of
    ``D'`` only involves ``e_1..e_k`` and earlier ``dp``, so both series
    can be advanced in lockstep.
    """
    _check_order(order)
    d = [F(0)] * order
    e = [F(0)] * order
    dp: list[Fraction] = []
    ep: list[Fraction] = []
    for k in range(order - 1):
        dp.append((1 if k == 0 else 0) + sum((e[i] * dp[k - i] for i in range(1, k + 1)), F(0)))
        d[k + 1] = dp[k] / (k + 1)
        ep.append(dp[k] - sum((d[i] * ep[k - i] for i in range(1, k + 1)), F(0)))
        e[k + 1] = ep[k] / (k + 1)
    return PowerSeries(d, order)


@lru_cache(maxsize=None)
def series_E(order: int = DEFAULT_ORDER) -> PowerSeries:
    return series_D(order).log1p()


def egf_sum(coefficient: Callable[[int], Fraction], start: int, x: PowerSeries) -> PowerSeries:
    """``sum_{n >= start} coefficient(n) x^n / n!`` for ``x`` without constant term."""
    total = PowerSeries.zero(x.order)
    power = x**start
    for n in range(start, x.order):
        c = coefficient(n)
        if c:
            total = total + power * F(c, factorial(n))
        power = power * x
    return total


def _poly(x: PowerSeries, *coeffs) -> PowerSeries:
    """``sum coeffs[i] x^i`` with Horner evaluation."""
    acc = PowerSeries.zero(x.order)
    for c in reversed(coeffs):
        acc = acc * x + F(c)
    return acc


@dataclass(frozen=True)
class Substitution:
    """The series substituted into every genus-1 and genus-2 expression."""

    D: PowerSeries
    E: PowerSeries
    inv_1pD: PowerSeries  # 1/(1+D)
    inv_1mE: PowerSeries  # 1/(1-E), which is also D'

    def P(self, *coeffs) -> PowerSeries:
        return _poly(self.D, *coeffs)


@lru_cache(maxsize=None)
def substitution(order: int) -> Substitution:
    _check_order(order)
    D, E = series_D(order), series_E(order)
    return Substitution(D, E, (1 + D).reciprocal(), (1 - E).reciprocal())


def _require(name: str, lhs: PowerSeries, rhs: PowerSeries) -> None:
    if not lhs.agrees_with(rhs):
        n = min(lhs.order, rhs.order)
        bad = next(k for k in range(n) if lhs[k] != rhs[k])
        raise VerificationError(f"{name}: coefficient of t^{bad} is {lhs[bad]} vs {rhs[bad]}")


# --------------------------------------------------------------------------
# genus 1
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def k1_vertex_contribution(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Graphs whose genus-1 vertex carries all the genus."""
    v = substitution(order)
    closed = v.P(0, F(13, 12), F(11, 24), F(1, 36), F(-1, 48)) - v.E / 12
    _require("K1 vertex", closed, egf_sum(chi_m1_open, 1, v.D))
    return closed


def _k1_loop_from_tables(v: Substitution) -> PowerSeries:
    # cycles of three or more rational vertices
    long_cycles = ((-v.E).log1p() * -1 - v.E - v.E * v.E / 2) / 2
    # one vertex with a self-loop, S_2 swapping its two ends
    one_vertex = egf_sum(lambda n: chi_m0_mod_Sj(n + 2, 2), 1, v.D)
    # two vertices joined by a double edge
    two_vertices = PowerSeries.zero(v.D.order)
    for n in range(1, v.D.order):
        for m in range(1, v.D.order - n):
            c = chi_prod2_mod_S2(*sorted((n + 2, m + 2)))
            two_vertices = two_vertices + v.D ** (n + m) * F(c, 2 * factorial(n) * factorial(m))
    return long_cycles + one_vertex + two_vertices


@lru_cache(maxsize=None)
def k1_loop_contribution(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Graphs with a cycle of rational vertices."""
    v = substitution(order)
    closed = (-v.E).log1p() * F(-1, 2) + v.P(0, F(1, 2), F(1, 2), F(1, 4), F(1, 16))
    _require("K1 loop", closed, _k1_loop_from_tables(v))
    return closed


@lru_cache(maxsize=None)
def k1_closed(order: int = DEFAULT_ORDER) -> PowerSeries:
    v = substitution(order)
    return (
        v.P(0, F(19, 12), F(23, 24), F(5, 18), F(1, 24))
        - v.E / 12
        - (-v.E).log1p() / 2
    )


def k1_assembled(order: int = DEFAULT_ORDER) -> PowerSeries:
    return k1_vertex_contribution(order) + k1_loop_contribution(order)


def _k1_in_x(order: int) -> PowerSeries:
    """K_1 with D replaced by a free variable x (so E becomes log(1+x))."""
    x = PowerSeries.variable(order)
    e = x.log1p()
    return _poly(x, 0, F(19, 12), F(23, 24), F(5, 18), F(1, 24)) - e / 12 - (-e).log1p() / 2


# --------------------------------------------------------------------------
# genus 2
# --------------------------------------------------------------------------

Term = Callable[[Substitution], PowerSeries]


@dataclass(frozen=True)
class Corrections:
    """Low-valence graphs where the generic count is wrong.

    ``pairs`` holds ``(actual, generic)`` for each family of exceptional
    graphs; the contribution adds ``actual - generic``.
    """

    pairs: tuple[tuple[Term, Term], ...]

    def total(self, v: Substitution) -> PowerSeries:
        out = PowerSeries.zero(v.D.order)
        for actual, generic in self.pairs:
            out = out + actual(v) - generic(v)
        return out


def _g234(v: Substitution) -> PowerSeries:
    A = v.P(19, 23, 10, 2)
    iE, iD = v.inv_1mE, v.inv_1pD
    return (
        v.P(361, 874, 909, 536, 192, 40, 4) * iE / 288
        - A * iE * iD / 144
        + A * iE * iE * iD / 24
        - iE * iE * iD * iD / 24
        + iE * iD * iD / 288
        + iE**3 * iD * iD / 8
    )


def _g5(v: Substitution) -> PowerSeries:
    return v.inv_1mE * v.inv_1pD**2 / 24 + v.P(11, 2, -3) * v.inv_1mE / 24


def _g6(v: Substitution) -> PowerSeries:
    return v.inv_1pD**2 * v.inv_1mE**2 * F(-1, 8)


def _g7(v: Substitution) -> PowerSeries:
    return v.inv_1pD**2 * v.inv_1mE**3 / 12


def _g234_check(v: Substitution) -> PowerSeries:
    # half the square of dK_1/dD, times D'
    dK = _k1_in_x(v.D.order).derivative().compose(v.D)
    return dK * dK * v.D.derivative() / 2


def _g5_check(v: Substitution) -> PowerSeries:
    return egf_sum(lambda n: chi_m1_open(n + 2), 0, v.D) * v.D.derivative() / 2


def _g6_check(v: Substitution) -> PowerSeries:
    Dp = v.D.derivative()
    return egf_sum(lambda n: chi_m0_open(n + 4), 0, v.D) * Dp * Dp / 8


def _g7_check(v: Substitution) -> PowerSeries:
    s = egf_sum(lambda n: chi_m0_open(n + 3), 0, v.D)
    return s * s * v.D.derivative() ** 3 / 12


# generic part: (closed expression, independent expression)
_GENERIC: dict[int, tuple[Term, Term]] = {
    234: (_g234, _g234_check),
    5: (_g5, _g5_check),
    6: (_g6, _g6_check),
    7: (_g7, _g7_check),
}


def _E2_over(v: Substitution) -> PowerSeries:
    return v.E * v.E * v.inv_1mE


# Each pair is (actual value on the exceptional graphs, what the generic term
# assigns to the same graphs).  Types 234 and 5 only ever appear through their
# combined polynomial, so they are kept as a single pair against zero.
_CORRECTIONS: dict[int, Corrections] = {
    1: Corrections(()),
    234: Corrections(((lambda v: v.P(1, 1, F(1, 2)), lambda v: v.P()),)),
    5: Corrections((
        (lambda v: v.P(F(1, 2), F(3, 2), F(7, 4), F(7, 6), F(11, 24), F(-1, 8), F(1, 48)),
         lambda v: v.P()),
    )),
    6: Corrections((
        (lambda v: v.P(0, 0, F(-1, 2)),
         lambda v: v.P(F(-1, 8), F(1, 4), F(-3, 8))),
        (lambda v: v.P(0, 0, 0, F(-3, 2), F(1, 4)),
         lambda v: -v.E / 4 + v.P(0, 0, F(1, 2), -1, F(3, 8))),
        (lambda v: v.P(0, 0, 0, 0, F(-9, 8), F(1, 4), F(-1, 8)),
         lambda v: v.P(0, 0, F(-1, 8), F(3, 8), F(-21, 32), F(7, 16), F(-3, 32))),
        (lambda v: v.E * v.P(0, 0, F(1, 4)) + v.P(0, 0, 0, F(-1, 4), F(1, 8)),
         lambda v: v.E * v.P(0, F(-1, 4), F(1, 8)) + v.P(0, 0, F(1, 4), F(-1, 4), F(1, 16))),
        (lambda v: v.P(),
         lambda v: _E2_over(v) * F(-1, 4)),
        (lambda v: _E2_over(v) * v.P(0, 0, F(1, 4)),
         lambda v: _E2_over(v) * v.P(0, F(-1, 4), F(1, 8))),
    )),
    7: Corrections((
        (lambda v: v.P(1),
         lambda v: v.P(F(1, 12))),
        (lambda v: v.E / 2 + v.P(0, F(1, 2), F(1, 4)),
         lambda v: v.E / 4),
        (lambda v: v.P(0, 0, F(1, 2), 0, F(1, 8)),
         lambda v: v.P(0, 0, F(1, 4), F(-1, 4), F(1, 16))),
        (lambda v: v.P(0, 0, 0, F(1, 6), 0, F(1, 8)),
         lambda v: v.P(0, 0, 0, F(1, 12), F(-1, 8), F(1, 16), F(-1, 96))),
        (lambda v: v.P(0, 1, F(3, 2), F(1, 2), F(1, 4)),
         lambda v: v.P(0, F(-1, 6), F(1, 4), F(-1, 6), F(1, 12))),
        (lambda v: v.E * v.inv_1mE * v.P(0, 0, F(1, 2)),
         lambda v: v.E * v.inv_1mE * v.P(0, F(-1, 2), F(1, 4))),
        (lambda v: _E2_over(v) / 2,
         lambda v: _E2_over(v) / 4),
    )),
}


def _k2_type1(v: Substitution) -> PowerSeries:
    closed = v.inv_1pD**2 * F(-1, 240) + v.P(
        F(241, 240), F(239, 120), F(81, 80), F(-1, 60), F(-7, 48), F(-1, 40), F(-1, 240)
    )
    _require("K2 type 1", closed, egf_sum(lambda n: chi_m2_open(n), 0, v.D))
    return closed


def _graph_type(graph_type: int) -> int:
    if graph_type not in K2_TYPES:
        raise DomainError(f"graph type must be one of {K2_TYPES}, got {graph_type}")
    return graph_type


def k2_generic(graph_type: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Generic part of a genus-2 contribution, checked against its second derivation."""
    graph_type = _graph_type(graph_type)
    v = substitution(order)
    if graph_type == 1:
        return _k2_type1(v)
    closed, check = _GENERIC[graph_type]
    value = closed(v)
    _require(f"K2 type {graph_type} generic part", value, check(v))
    return value


def k2_corrections(graph_type: int, order: int = DEFAULT_ORDER) -> Corrections:
    return _CORRECTIONS[_graph_type(graph_type)]


@lru_cache(maxsize=None)
def k2_contribution(graph_type: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    v = substitution(order)
    return k2_generic(graph_type, order) + k2_corrections(graph_type).total(v)


@lru_cache(maxsize=None)
def k2_closed(order: int = DEFAULT_ORDER) -> PowerSeries:
    v = substitution(order)
    D, E = v.D, v.E
    Em1 = E - 1
    Em1_sq = Em1 * Em1

    def inE(*cs):
        return _poly(E, *cs)

    numerator = (
        D**8 * Em1_sq * inE(7, 3) * -2
        + D**7 * Em1_sq * inE(-7, 17) * -24
        + D**6 * Em1_sq * inE(259, 201) * -3
        + D**5 * Em1_sq * inE(-221, 61) * 30
        + D**4 * inE(-1386, 3395, -2640, 631) * 15
        + D**3 * inE(-652, 1633, -1322, 341) * 60
        + D**2 * inE(-254, 635, -519, 138) * 180
        + D * inE(-84, 206, -167, 45) * 360
        + inE(-144, 336, -270, 73) * 60
    )
    # (E - 1)^-3 = -(1 - E)^-3
    return numerator * v.inv_1pD**2 * v.inv_1mE**3 * F(-1, 1440)


def k2_assembled(order: int = DEFAULT_ORDER) -> PowerSeries:
    total = PowerSeries.zero(order)
    for graph_type in K2_TYPES:
        total = total + k2_contribution(graph_type, order)
    return total


_NAMED: dict[str, Callable[[int], PowerSeries]] = {
    "D": series_D,
    "E": series_E,
    "K1": k1_closed,
    "K2": k2_closed,
    "K1_vertex": k1_vertex_contribution,
    "K1_loop": k1_loop_contribution,
    "K2_type1": lambda order: k2_contribution(1, order),
    "K2_type234": lambda order: k2_contribution(234, order),
    "K2_type5": lambda order: k2_contribution(5, order),
    "K2_type6": lambda order: k2_contribution(6, order),
    "K2_type7": lambda order: k2_contribution(7, order),
}


def named_series(name: str, order: int = DEFAULT_ORDER) -> NamedSeries:
    """Look up a series by name.  ``K1`` and ``K2`` are checked against their assemblies."""
    if name not in _NAMED:
        raise DomainError(f"unknown series {name!r}; choose from {', '.join(SERIES_NAMES)}")
    series = _NAMED[name](order)
    if name == "K1":
        _require("K1 assembled vs closed", k1_assembled(order), series)
    elif name == "K2":
        _require("K2 assembled vs closed", k2_assembled(order), series)
    return NamedSeries(name, series)


def chibar_table(genus: int, max_n: int, order: int = DEFAULT_ORDER) -> list[tuple[int, Fraction]]:
    """``(n, chi(Mbar_{g,n}))`` for the stable range ``2g - 2 + n > 0`` up to ``max_n``."""
    if genus not in (1, 2):
        raise DomainError(f"genus must be 1 or 2, got {genus}")
    if max_n >= order:
        raise DomainError(f"max_n = {max_n} needs truncation order at least {max_n + 1}")
    K = named_series("K1" if genus == 1 else "K2", order).series
    start = 1 if genus == 1 else 0
    values = K.egf_values()
    out = []
    for n in range(start, max_n + 1):
        if values[n].denominator != 1:
            raise VerificationError(f"chi(Mbar_{genus},{n}) = {values[n]} is not an integer")
        out.append((n, values[n]))
    return out
