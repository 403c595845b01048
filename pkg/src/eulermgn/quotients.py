"""Euler characteristics of quotients of M_{0,n}, M_{1,n} and their products.

Each function covers one group action and enforces the range where a value is
actually known.  Low-n exceptions, where the quotient map is ramified, live in
explicit tables; the generic branch is the unramified ``chi / |G|`` formula.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError
from .moduli import chi_m0_open as chi_m0
from .moduli import chi_m1_open as chi_m1

__all__ = [
    "DomainError",
    "QuotientKind",
    "QuotientSpec",
    "chi_m0",
    "chi_m1",
    "chi_m0_mod_Sj",
    "chi_m0_mod_klein",
    "chi_m0_mod_D4",
    "chi_prod2_mod_S2",
    "chi_prod2_mod_S3",
    "chi_prod2_mod_klein",
    "chi_prod3_mod_klein",
    "chi_m1_mod_S2",
    "chi_m1_cross_m0_mod_S2",
    "evaluate",
]


def chi_m0_mod_Sj(n: int, j: int) -> Fraction:
    """chi(M_{0,n} / S_j), S_j permuting j of the n markings."""
    if n < 3:
        raise DomainError(f"M_0,{n} is not defined (need n >= 3)")
    if not 0 <= j <= n:
        raise DomainError(f"need 0 <= j <= n, got n={n}, j={j}")
    free = n - j
    if free >= 3:
        # three fixed markings rigidify P^1, so S_j acts freely
        return Fraction((-1) ** (n - 3) * factorial(n - 3), factorial(j))
    if free == 2:
        return Fraction(0) if n % 2 == 0 else Fraction(1)
    return Fraction(1)


# Klein group swapping markings (n-3, n-2) and (n-1, n).  For n = 6 the
# 4:1 cover is ramified over [P^1; 0, inf, 1, -1, b, -b], chi = -1.
_KLEIN_LOW = {4: 0, 5: 0, 6: -2}


def chi_m0_mod_klein(n: int) -> Fraction:
    if n < 4:
        raise DomainError(f"Klein action needs n >= 4, got {n}")
    if n in _KLEIN_LOW:
        return Fraction(_KLEIN_LOW[n])
    return chi_m0(n) / 4


# D_4 = <(1 2), (1 3)(2 4)> on the first four markings; same branch locus as Klein
_D4_LOW = {4: 0, 5: 0, 6: -1}


def chi_m0_mod_D4(n: int) -> Fraction:
    if n < 4:
        raise DomainError(f"D4 action needs n >= 4, got {n}")
    if n in _D4_LOW:
        return Fraction(_D4_LOW[n])
    return chi_m0(n) / 8


def _check_pair(n1: int, n2: int) -> None:
    if not 3 <= n1 <= n2:
        raise DomainError(f"need 3 <= n1 <= n2, got ({n1}, {n2})")


def chi_prod2_mod_S2(n1: int, n2: int) -> Fraction:
    """Diagonal S_2 swapping the last two markings of both factors."""
    _check_pair(n1, n2)
    if n1 == 3:
        return chi_m0_mod_Sj(n2, 2)
    if n1 == 4:
        # the only fixed point on M_{0,4} is [P^1; 0, inf, 1, -1]
        return chi_m0_mod_Sj(n2, 2) - chi_m0(n2)
    return chi_m0(n1) * chi_m0(n2) / 2


# diagonal S_3 on the last three markings, both factors of size 4 or 5
_PROD2_S3_LOW = {(4, 4): 2, (4, 5): 1, (5, 5): 2}


def chi_prod2_mod_S3(n1: int, n2: int) -> Fraction:
    """Diagonal S_3 permuting the last three markings of both factors."""
    _check_pair(n1, n2)
    if n1 == 3:
        return chi_m0_mod_Sj(n2, 3)
    if (n1, n2) in _PROD2_S3_LOW:
        return Fraction(_PROD2_S3_LOW[(n1, n2)])
    return chi_m0(n1) * chi_m0(n2) / 6


# first factor M_{0,4}; (4, n2 >= 7) is not covered by any known table
_PROD2_KLEIN_N1_4 = {4: 0, 5: -1, 6: 1}


def chi_prod2_mod_klein(n1: int, n2: int) -> Fraction:
    """S_2 x S_2 generated by sigma_1, sigma_2 on M_{0,n1} x M_{0,n2}.

    sigma_1 swaps the last two markings of the first factor together with
    markings (n2-3, n2-2) of the second; sigma_2 swaps (n2-1, n2) of the
    second factor only.
    """
    _check_pair(n1, n2)
    if n2 < 4:
        raise DomainError(f"second factor needs two marked pairs, got n2={n2}")
    if n1 == 3:
        return chi_m0_mod_klein(n2)
    if n1 == 4:
        if n2 not in _PROD2_KLEIN_N1_4:
            raise DomainError(f"outside the known table: (4, {n2}) has no stated value")
        return Fraction(_PROD2_KLEIN_N1_4[n2])
    return chi_m0(n1) * chi_m0_mod_Sj(n2, 2) / 2


_PROD3_KLEIN_44 = {4: -1, 5: 0, 6: -2}


def chi_prod3_mod_klein(n1: int, n2: int, n3: int) -> Fraction:
    """S_2 x S_2 on M_{0,n1} x M_{0,n2} x M_{0,n3}.

    One generator swaps the last two markings of factor 1 and markings
    (n3-3, n3-2) of factor 3; the other swaps the last two markings of
    factor 2 and of factor 3.
    """
    if not (3 <= n1 <= n2 and n3 >= 4):
        raise DomainError(f"need 3 <= n1 <= n2 and n3 >= 4, got ({n1}, {n2}, {n3})")
    if n1 == 3:
        return chi_prod2_mod_klein(n2, n3)
    if n1 == 4 and n2 == 4:
        if n3 in _PROD3_KLEIN_44:
            return Fraction(_PROD3_KLEIN_44[n3])
        return chi_m0(n3) / 4
    if n1 == 4:
        return chi_prod2_mod_S2(4, n3) * chi_m0(n2) / 2
    return chi_prod2_mod_S2(*sorted((n2, n3))) * chi_m0(n1) / 2


# M_{1,n}/S_2 (last two markings swapped); below n = 7 the action has fixed points
_M1_S2_LOW = {2: 1, 3: 1, 4: 1, 5: 0, 6: 6}


def chi_m1_mod_S2(n: int) -> Fraction:
    if n < 2:
        raise DomainError(f"S_2 on M_1,{n} needs n >= 2")
    if n in _M1_S2_LOW:
        return Fraction(_M1_S2_LOW[n])
    return chi_m1(n) / 2


def chi_m1_cross_m0_mod_S2(n1: int, n2: int) -> Fraction:
    """S_2 swapping the last two markings of both M_{1,n1} and M_{0,n2}."""
    if n1 < 1 or n2 < 3:
        raise DomainError(f"need n1 >= 1 and n2 >= 3, got ({n1}, {n2})")
    if n2 == 3:
        return chi_m1_mod_S2(n1)
    if n2 == 4:
        return chi_m1_mod_S2(n1) - chi_m1(n1)
    # free on the genus-0 factor; the elliptic factor is M_{1,n1}
    return chi_m0(n2) * chi_m1(n1) / 2


class QuotientKind(str, enum.Enum):
    M0ModSj = "M0ModSj"
    M0ModKlein = "M0ModKlein"
    M0ModD4 = "M0ModD4"
    Prod2ModS2 = "Prod2ModS2"
    Prod2ModS3 = "Prod2ModS3"
    Prod2ModKlein = "Prod2ModKlein"
    Prod3ModKlein = "Prod3ModKlein"
    M1ModS2 = "M1ModS2"
    M1CrossM0ModS2 = "M1CrossM0ModS2"

    @classmethod
    def parse(cls, text: str) -> QuotientKind:
        for kind in cls:
            if kind.value.lower() == text.lower():
                return kind
        raise DomainError(f"unknown quotient kind {text!r}")

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def genus0(self) -> bool:
        return self not in (QuotientKind.M1ModS2, QuotientKind.M1CrossM0ModS2)


_ARITY = {
    QuotientKind.M0ModSj: 1,
    QuotientKind.M0ModKlein: 1,
    QuotientKind.M0ModD4: 1,
    QuotientKind.Prod2ModS2: 2,
    QuotientKind.Prod2ModS3: 2,
    QuotientKind.Prod2ModKlein: 2,
    QuotientKind.Prod3ModKlein: 3,
    QuotientKind.M1ModS2: 1,
    QuotientKind.M1CrossM0ModS2: 2,
}


@dataclass(frozen=True)
class QuotientSpec:
    kind: QuotientKind
    sizes: tuple[int, ...]
    j: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if len(self.sizes) != self.kind.arity:
            raise DomainError(
                f"{self.kind.value} takes {self.kind.arity} size(s), got {len(self.sizes)}"
            )
        if (self.kind is QuotientKind.M0ModSj) != (self.j is not None):
            raise DomainError("j is required for M0ModSj and only for it")


def evaluate(spec: QuotientSpec) -> Fraction:
    k, s = spec.kind, spec.sizes
    if k is QuotientKind.M0ModSj:
        return chi_m0_mod_Sj(s[0], spec.j)
    if k is QuotientKind.M0ModKlein:
        return chi_m0_mod_klein(*s)
    if k is QuotientKind.M0ModD4:
        return chi_m0_mod_D4(*s)
    if k is QuotientKind.Prod2ModS2:
        return chi_prod2_mod_S2(*s)
    if k is QuotientKind.Prod2ModS3:
        return chi_prod2_mod_S3(*s)
    if k is QuotientKind.Prod2ModKlein:
        return chi_prod2_mod_klein(*s)
    if k is QuotientKind.Prod3ModKlein:
        return chi_prod3_mod_klein(*s)
    if k is QuotientKind.M1ModS2:
        return chi_m1_mod_S2(*s)
    return chi_m1_cross_m0_mod_S2(*s)
