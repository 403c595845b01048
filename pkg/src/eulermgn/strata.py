"""chi(M_{1,n}) and chi(M_{2,n}) recomputed from the hyperelliptic stratification.

A genus-2 curve (or a pointed elliptic curve, with the involution centred at
the last marking) splits its markings into ``j`` points fixed by the
involution, ``r`` conjugate pairs, and the rest.  Each stratum ``U_{j,r}``
covers a quotient of a genus-0 configuration space, so its Euler
characteristic is a covering degree times a value from
:mod:`eulermgn.quotients`.  For larger ``n`` the universal curve gives a
fibration recursion instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import DomainError
from .moduli import chi_m0_open
from .quotients import chi_m0_mod_Sj

__all__ = [
    "StratumSpec",
    "a_jr",
    "chi_U_jr",
    "strata_g2",
    "chi_m2_via_strata",
    "chi_m2_recursive",
    "chi_m1_via_strata",
    "chi_m1_recursive",
]

# (n, j, r) where the covering U_{j,r} -> M_{0,8}/S_6 ramifies along a copy of M_{0,5}/S_3
RAMIFIED_STRATA = frozenset({(2, 0, 0), (3, 0, 1), (4, 0, 2)})


@dataclass(frozen=True)
class StratumSpec:
    genus: int
    n: int
    j: int
    r: int

    def __post_init__(self):
        g, n, j, r = self.genus, self.n, self.j, self.r
        if g == 2:
            ok = n >= 0 and 0 <= j <= min(n, 6) and 0 <= r <= (n - j) // 2
        elif g == 1:
            ok = n >= 1 and 0 <= j <= n - 1 and 0 <= r <= (n - 1 - j) // 2
        else:
            ok = False
        if not ok:
            raise DomainError(f"invalid stratum genus={g}, n={n}, j={j}, r={r}")


def a_jr(n: int, j: int, r: int) -> Fraction:
    """Number of strata of type {j, r} in M_{2,n} (relabelings of U_{j,r})."""
    StratumSpec(2, n, j, r)
    return Fraction(comb(n, j) * factorial(n - j), 2**r * factorial(n - j - 2 * r) * factorial(r))


def chi_U_jr(spec: StratumSpec) -> Fraction:
    """Euler characteristic of one genus-2 stratum U_{j,r}."""
    if spec.genus != 2:
        raise DomainError("chi_U_jr is the genus-2 stratum; use chi_m1_via_strata for genus 1")
    n, j, r = spec.n, spec.j, spec.r
    base = chi_m0_mod_Sj(n + 6 - r - j, 6 - j)
    if j == n and r == 0:
        return base
    if (n, j, r) in RAMIFIED_STRATA:
        return 2 * base - chi_m0_mod_Sj(5, 3)
    return 2 ** (n - j - r - 1) * base


def strata_g2(n: int):
    """Yield ``(j, r, a_jr, chi(U_jr))`` over the genus-2 stratification of M_{2,n}."""
    for j in range(min(n, 6) + 1):
        for r in range((n - j) // 2 + 1):
            yield j, r, a_jr(n, j, r), chi_U_jr(StratumSpec(2, n, j, r))


def chi_m2_via_strata(n: int) -> Fraction:
    if not 0 <= n <= 6:
        raise DomainError(f"stratification is used for 0 <= n <= 6; use chi_m2_recursive for n={n}")
    return sum((a * chi for _, _, a, chi in strata_g2(n)), Fraction(0))


def chi_m2_recursive(n: int) -> Fraction:
    """Universal-curve recursion started from the stratified value at n = 6."""
    if n < 7:
        raise DomainError(f"recursion starts at n = 7, got {n}")
    chi6 = chi_m2_via_strata(6)
    # over U_{6,0} (six Weierstrass markings) the fibre is P^1 minus 6 points
    u60 = chi_U_jr(StratumSpec(2, 6, 6, 0))
    chi = -8 * (chi6 - u60) - 4 * u60
    for h in range(7, n):
        # fibre over M_{2,h}: genus-2 curve minus h points
        chi *= -(2 + h)
    return chi


def _genus1_term(m: int, j: int, r: int) -> Fraction:
    """Contribution of type {j, r} to chi(M_{1,m+1}), m = markings besides the centre."""
    weight = Fraction(comb(m, j) * factorial(m - j), factorial(m - j - 2 * r) * factorial(r))
    weight *= Fraction(2) ** (m - j - 2 * r - 1)
    return weight * chi_m0_mod_Sj(m - r + 4 - j, 3 - j)


def chi_m1_via_strata(n: int) -> Fraction:
    if not 1 <= n <= 4:
        raise DomainError(f"genus-1 stratification is used for 1 <= n <= 4, got {n}")
    m = n - 1
    total = Fraction(0)
    for j in range(m + 1):
        for r in range((m - j) // 2 + 1):
            StratumSpec(1, n, j, r)
            total += _genus1_term(m, j, r)
    return total + chi_m0_mod_Sj(4, 3 - m) / 2


def chi_m1_recursive(n: int) -> Fraction:
    if n < 5:
        raise DomainError(f"recursion starts at n = 5, got {n}")
    chi4 = chi_m1_via_strata(4)
    # U_{3,0} in M_{1,4}: all three 2-torsion points marked, a copy of M_{0,4};
    # there the fibre is a genus-0 curve minus 4 points
    u30 = chi_m0_open(4)
    chi = -4 * (chi4 - u30) - 2 * u30
    for h in range(5, n):
        chi *= -h
    return chi
