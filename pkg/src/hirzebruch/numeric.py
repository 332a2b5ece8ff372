"""Exact scalars, Bernoulli numbers and truncated power series.

Every quantity is a :class:`fractions.Fraction`; nothing in this package
touches floating point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "Genus",
    "TruncatedSeries",
    "format_rational",
    "parse_rational",
    "bernoulli",
    "unsigned_bernoulli",
    "series_product",
    "series_reciprocal",
    "series_log",
    "series_exp",
    "char_series",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class Genus(str, enum.Enum):
    """Built-in genera, keyed by their conventional names."""

    L = "L"
    AHAT = "Ahat"

    @classmethod
    def parse(cls, name: "str | Genus") -> "Genus":
        if isinstance(name, Genus):
            return name
        key = name.strip().lower().replace("-", "").replace("_", "")
        for member in cls:
            if member.value.lower() == key:
                return member
        if key in ("a", "ahat", "â"):
            return cls.AHAT
        raise ValueError(f"unknown genus {name!r}; expected 'L' or 'Ahat'")


def format_rational(x: RationalLike) -> str:
    """Canonical wire form: reduced ``num/den``, denominator omitted when 1."""
    return str(Fraction(x))


def parse_rational(text: RationalLike) -> Fraction:
    if isinstance(text, str):
        text = text.strip().replace("−", "-")
        if not text:
            raise ValueError("empty rational")
    return Fraction(text)


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa yields B_1 = +1/2; flipped below.
    work = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        work[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            work[j - 1] = j * (work[j - 1] - work[j])
        out.append(work[0])
    if n >= 1:
        out[1] = -out[1]
    return tuple(out)


def bernoulli(n: int) -> Fraction:
    """Signed Bernoulli number ``B_n`` with ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("bernoulli index must be >= 0")
    if n > 1 and n % 2:
        return Fraction(0)
    return _bernoulli_table(n)[n]


def unsigned_bernoulli(n: int) -> Fraction:
    """``|B_n|``; for even ``n`` this is Hirzebruch's ``B_{n/2}``."""
    return abs(bernoulli(n))


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``c_0 + c_1 z + ... + c_N z^N`` modulo ``z^(N+1)``."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "TruncatedSeries":
        return cls.from_coefficients([value], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self.coefficients[k] + other.coefficients[k] for k in range(n + 1))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_product(self, other)
        c = Fraction(other)
        return TruncatedSeries(tuple(c * x for x in self.coefficients))

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(z^{self.order + 1})"


def series_product(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return TruncatedSeries(tuple(out))


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be 1."""
    if a[0] != 1:
        raise ValueError(f"reciprocal requires constant term 1, got {a[0]}")
    ac = a.coefficients
    out = [Fraction(1)]
    for k in range(1, a.order + 1):
        out.append(-sum((ac[i] * out[k - i] for i in range(1, k + 1)), Fraction(0)))
    return TruncatedSeries(tuple(out))


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    if a[0] != 1:
        raise ValueError(f"log requires constant term 1, got {a[0]}")
    # z * d/dz log a = z a' / a
    ac = a.coefficients
    out = [Fraction(0)]
    for k in range(1, a.order + 1):
        s = k * ac[k] - sum((j * out[j] * ac[k - j] for j in range(1, k)), Fraction(0))
        out.append(s / k)
    return TruncatedSeries(tuple(out))


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    if a[0] != 0:
        raise ValueError(f"exp requires constant term 0, got {a[0]}")
    ac = a.coefficients
    out = [Fraction(1)]
    for k in range(1, a.order + 1):
        s = sum((j * ac[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(s / k)
    return TruncatedSeries(tuple(out))


def _factorial_series(offset: int, scale: int, order: int) -> TruncatedSeries:
    # sum_k z^k / (scale^k * (2k + offset)!)
    return TruncatedSeries(
        tuple(Fraction(1, scale**k * factorial(2 * k + offset)) for k in range(order + 1))
    )


def char_series(genus: "Genus | str", order: int) -> TruncatedSeries:
    """Characteristic series of a built-in genus as a series in ``z = x^2``.

    L uses ``sqrt(z)/tanh(sqrt(z))`` and Ahat uses
    ``(sqrt(z)/2)/sinh(sqrt(z)/2)``; both are assembled from the factorial
    series of cosh and sinh(t)/t.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    genus = Genus.parse(genus)
    if genus is Genus.L:
        cosh = _factorial_series(0, 1, order)
        sinhc = _factorial_series(1, 1, order)
        return series_reciprocal(series_product(sinhc, series_reciprocal(cosh)))
    sinhc_half = _factorial_series(1, 4, order)
    return series_reciprocal(sinhc_half)


def as_series(coeffs: Sequence[RationalLike], order: int | None = None) -> TruncatedSeries:
    return TruncatedSeries.from_coefficients(coeffs, order)
