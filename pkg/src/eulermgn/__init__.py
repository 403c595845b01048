"""Exact Euler characteristics of moduli spaces of pointed curves in genus 0, 1 and 2."""

from .algebra import Polynomial, PowerSeries
from .errors import DomainError, VerificationError
from .genfun import chibar_table, k1_closed, k2_closed, series_D, series_E
from .moduli import chi_m0_open, chi_m1_open, chi_m2_open, chi_open
from .quotients import QuotientKind, QuotientSpec, evaluate

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "PowerSeries",
    "DomainError",
    "VerificationError",
    "chibar_table",
    "k1_closed",
    "k2_closed",
    "series_D",
    "series_E",
    "chi_m0_open",
    "chi_m1_open",
    "chi_m2_open",
    "chi_open",
    "QuotientKind",
    "QuotientSpec",
    "evaluate",
]
