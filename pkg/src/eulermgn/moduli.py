"""Closed forms for chi(M_{0,n}), chi(M_{1,n}) and chi(M_{2,n})."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DomainError

__all__ = ["chi_m0_open", "chi_m1_open", "chi_m2_open", "chi_open"]


def chi_m0_open(n: int) -> Fraction:
    """(-1)^(n-3) (n-3)!, from the fibration M_{0,n+1} -> M_{0,n}."""
    if n < 3:
        raise DomainError(f"M_0,{n} is not defined (need n >= 3)")
    return Fraction((-1) ** (n - 3) * factorial(n - 3))


_M1_LOW = {1: 1, 2: 1, 3: 0, 4: 0}


def chi_m1_open(n: int) -> Fraction:
    if n < 1:
        raise DomainError(f"M_1,{n} is not defined (need n >= 1)")
    if n in _M1_LOW:
        return Fraction(_M1_LOW[n])
    return Fraction((-1) ** n * factorial(n - 1), 12)


_M2_LOW = {0: 1, 1: 2, 2: 2, 3: 0, 4: -4, 5: 0, 6: -24}


def chi_m2_open(n: int) -> Fraction:
    if n < 0:
        raise DomainError(f"M_2,{n} is not defined (need n >= 0)")
    if n in _M2_LOW:
        return Fraction(_M2_LOW[n])
    return Fraction((-1) ** (n + 1) * factorial(n + 1), 240)


def chi_open(genus: int, n: int) -> Fraction:
    if genus == 0:
        return chi_m0_open(n)
    if genus == 1:
        return chi_m1_open(n)
    if genus == 2:
        return chi_m2_open(n)
    raise DomainError(f"genus {genus} is not supported (0, 1 or 2)")
