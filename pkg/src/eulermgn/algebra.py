"""Exact scalars, dense polynomials in ``q`` and truncated power series in ``t``.

Scalars are :class:`fractions.Fraction`.  A :class:`PowerSeries` knows the
coefficients of ``t**k`` for ``k < order`` and nothing beyond; reading past the
order raises :class:`TruncationError` instead of returning zero.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

__all__ = [
    "Scalar",
    "TruncationError",
    "NotDivisibleError",
    "to_fraction",
    "format_rational",
    "parse_rational",
    "Polynomial",
    "PowerSeries",
]

Scalar = Union[int, Fraction]


class TruncationError(IndexError):
    """A coefficient at or beyond the truncation order was requested."""


class NotDivisibleError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


def to_fraction(x: Scalar | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, _RationalABC, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def format_rational(x: Scalar) -> str:
    """Serialize as ``"p/q"``, dropping ``/1`` for integers."""
    return str(to_fraction(x))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


# --------------------------------------------------------------------------
# Polynomials
# --------------------------------------------------------------------------


def _strip(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Dense univariate polynomial over Q; ``coeffs[k]`` multiplies ``q**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip([to_fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def q(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = format_rational(abs(c)) + ("*" + mono if mono else "")
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(to_fraction(other))

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        x = to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, den: Polynomial) -> tuple[Polynomial, Polynomial]:
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(den.coeffs) + 1, 0)
        lead = den.coeffs[-1]
        dd = den.degree
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(den.coeffs):
                    rem[k + i] -= c * b
        return Polynomial(quot), Polynomial(rem)

    def exact_div(self, den: Polynomial) -> Polynomial:
        """Quotient ``self / den``; raises :class:`NotDivisibleError` on a remainder."""
        quot, rem = self.divmod(den)
        if not rem.is_zero():
            raise NotDivisibleError(f"not divisible: ({self}) / ({den}) leaves {rem}")
        return quot

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


# --------------------------------------------------------------------------
# Truncated power series
# --------------------------------------------------------------------------


class PowerSeries:
    """Truncated power series ``sum c_k t**k`` known for ``k < order``.

    Binary operations truncate to the smaller operand order.  Plain ints and
    Fractions act as constant series of matching order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [to_fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("truncation order must be positive")
        if len(cs) > order:
            cs = cs[:order]
        else:
            cs.extend([Fraction(0)] * (order - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # construction ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls((), order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> PowerSeries:
        return cls([c], order)

    @classmethod
    def variable(cls, order: int) -> PowerSeries:
        """The series ``t``."""
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Scalar = 1) -> PowerSeries:
        return cls([0] * k + [c], order)

    # access --------------------------------------------------------------

    def __getitem__(self, k: int) -> Fraction:
        if not isinstance(k, int):
            raise TypeError("series coefficients are indexed by int")
        if k < 0:
            raise IndexError("negative power")
        if k >= self.order:
            raise TruncationError(f"coefficient of t^{k} is unknown (order {self.order})")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        cs = ", ".join(format_rational(c) for c in self.coeffs)
        return f"PowerSeries([{cs}], order={self.order})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(f"{format_rational(c)}{'*' + mono if mono else ''}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def agrees_with(self, other: PowerSeries) -> bool:
        """Equality on the common known range of coefficients."""
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.coeffs[:order], order)

    def egf_values(self) -> list[Fraction]:
        """``k! * [t^k]`` for every known ``k``."""
        out, fact = [], 1
        for k, c in enumerate(self.coeffs):
            if k:
                fact *= k
            out.append(c * fact)
        return out

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(to_fraction(other), self.order)

    def __add__(self, other) -> PowerSeries:
        if not isinstance(other, (PowerSeries, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> PowerSeries:
        if not isinstance(other, (PowerSeries, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> PowerSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            c = to_fraction(other)
            return PowerSeries([c * a for a in self.coeffs], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        c = to_fraction(other)
        return PowerSeries([a / c for a in self.coeffs], self.order)

    def __rtruediv__(self, other) -> PowerSeries:
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            return self.reciprocal() ** (-k)
        result, base = PowerSeries.constant(1, self.order), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # formal operations --------------------------------------------------

    def _require_zero_constant(self, what: str) -> None:
        if self.coeffs[0] != 0:
            raise ValueError(f"{what} requires zero constant term, got {self.coeffs[0]}")

    def derivative(self) -> PowerSeries:
        if self.order == 1:
            raise TruncationError("derivative of an order-1 series carries no information")
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.order)], self.order - 1)

    def integral(self) -> PowerSeries:
        """Antiderivative with zero constant term; order grows by one."""
        return PowerSeries([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.order + 1)

    def reciprocal(self) -> PowerSeries:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("reciprocal requires a nonzero constant term")
        n = self.order
        inv0 = 1 / a[0]
        b = [inv0] + [Fraction(0)] * (n - 1)
        for m in range(1, n):
            s = sum((a[k] * b[m - k] for k in range(1, m + 1)), Fraction(0))
            b[m] = -s * inv0
        return PowerSeries(b, n)

    def log1p(self) -> PowerSeries:
        """``log(1 + f)`` for ``f`` with zero constant term."""
        self._require_zero_constant("log1p")
        if self.order == 1:
            return PowerSeries.zero(1)
        # (log(1+f))' = f' / (1+f), then integrate back up to the original order
        return (self.derivative() / (1 + self)).integral()

    def exp(self) -> PowerSeries:
        """``exp(f)`` for ``f`` with zero constant term."""
        self._require_zero_constant("exp")
        n = self.order
        a = self.coeffs
        # g' = f' g  =>  m g_m = sum_k k a_k g_{m-k}
        g = [Fraction(1)] + [Fraction(0)] * (n - 1)
        for m in range(1, n):
            s = sum((k * a[k] * g[m - k] for k in range(1, m + 1)), Fraction(0))
            g[m] = s / m
        return PowerSeries(g, n)

    def compose(self, inner: PowerSeries) -> PowerSeries:
        """``self(inner(t))`` by Horner's scheme; ``inner`` must vanish at 0."""
        inner._require_zero_constant("composition")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = PowerSeries.constant(self.coeffs[n - 1], n)
        for k in range(n - 2, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]
