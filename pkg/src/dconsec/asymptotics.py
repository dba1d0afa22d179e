"""Asymptotic laws for a(n, d) / n! and empirical checks against exact counts.

Everything irrational goes through one constant, e**2, computed from its
Taylor series with an explicit remainder bound.  Exact ratios a(n, d) / n!
are multiplied by it, never divided, and every result carries a rigorous
absolute error bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .counts import count_exact

DEFAULT_DIGITS = 30

# bracket coefficients c_0..c_5 of a(n, d)/n! ~ e^-2 * sum_j c_j n^-j
SERIES_COEFFS: dict[int, tuple[Fraction, ...]] = {
    0: tuple(Fraction(x) for x in (1, -4, 0, Fraction(20, 3), Fraction(58, 3), Fraction(736, 15))),
    1: tuple(Fraction(x) for x in (1, 0, -2, Fraction(-10, 3), -6, Fraction(-154, 15))),
}

# The published d = 0 coefficient of n^-5 (736/15) leaves an n^-5 remainder
# against exact counts; extrapolating exact values to n = 800 gives 796/15.
CORRECTED_COEFFS: dict[int, tuple[Fraction, ...]] = {
    0: SERIES_COEFFS[0][:5] + (Fraction(796, 15),),
    1: SERIES_COEFFS[1],
}


def _pow10(e: int) -> Fraction:
    return Fraction(10) ** e


class HighPrecisionReal:
    """A decimal value ``mantissa * 10**exponent`` with a guaranteed absolute error bound.

    The mantissa keeps ``digits`` significant digits; every operation rounds
    its exact result to that many digits and adds the rounding error to the
    bound, on top of the propagated input errors.
    """

    __slots__ = ("mantissa", "exponent", "error", "digits")

    def __init__(self, mantissa: int, exponent: int, error: Fraction, digits: int):
        self.mantissa = mantissa
        self.exponent = exponent
        self.error = Fraction(error)
        self.digits = digits

    @classmethod
    def from_fraction(cls, q, digits: int = DEFAULT_DIGITS, error=0) -> HighPrecisionReal:
        q = Fraction(q)
        if q == 0:
            return cls(0, 0, Fraction(error), digits)
        # exponent so that |q| / 10**e has exactly `digits` integer digits
        e = len(str(abs(q.numerator))) - len(str(q.denominator)) - digits
        while abs(q) >= _pow10(e + digits):
            e += 1
        while abs(q) < _pow10(e + digits - 1):
            e -= 1
        m = round(q / _pow10(e))
        return cls(m, e, Fraction(error) + abs(q - m * _pow10(e)), digits)

    @property
    def value(self) -> Fraction:
        return self.mantissa * _pow10(self.exponent)

    def interval(self) -> tuple[Fraction, Fraction]:
        return self.value - self.error, self.value + self.error

    def contains(self, q) -> bool:
        return abs(Fraction(q) - self.value) <= self.error

    def _coerce(self, other) -> HighPrecisionReal:
        if isinstance(other, HighPrecisionReal):
            return other
        if isinstance(other, (int, Fraction)):
            return HighPrecisionReal.from_fraction(other, self.digits)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HighPrecisionReal.from_fraction(
            self.value + other.value, min(self.digits, other.digits), self.error + other.error
        )

    __radd__ = __add__

    def __neg__(self):
        return HighPrecisionReal(-self.mantissa, self.exponent, self.error, self.digits)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        x, y = self.value, other.value
        err = abs(x) * other.error + abs(y) * self.error + self.error * other.error
        return HighPrecisionReal.from_fraction(x * y, min(self.digits, other.digits), err)

    __rmul__ = __mul__

    def __abs__(self):
        return HighPrecisionReal(abs(self.mantissa), self.exponent, self.error, self.digits)

    def __float__(self):
        return float(self.value)

    def __lt__(self, other):
        """True only when the two error intervals are strictly ordered."""
        other = self._coerce(other)
        return self.value + self.error < other.value - other.error

    def __gt__(self, other):
        other = self._coerce(other)
        return other < self

    def to_string(self, sig: int | None = None) -> str:
        sig = sig or self.digits
        if self.mantissa == 0:
            return "0"
        r = HighPrecisionReal.from_fraction(self.value, sig)
        s = str(abs(r.mantissa))
        point = len(s) + r.exponent  # digits before the decimal point
        if point <= 0:
            body = "0." + "0" * -point + s
        elif point >= len(s):
            body = s + "0" * (point - len(s))
        else:
            body = s[:point] + "." + s[point:]
        return ("-" if r.mantissa < 0 else "") + body

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"HighPrecisionReal({self.to_string()} +/- {float(self.error):.3g})"


@lru_cache(maxsize=None)
def e_squared(digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """e**2 from sum 2**k / k!, truncated once the tail bound drops below 10**-(digits+5)."""
    target = Fraction(1, 10 ** (digits + 5))
    partial = Fraction(0)
    term = Fraction(1)
    k = 0
    while True:
        partial += term
        k += 1
        term = term * 2 / k
        # geometric tail bound, ratio 2/(k+1) <= 2/3 from k = 2 on
        tail = term / (1 - Fraction(2, k + 1)) if k >= 2 else None
        if tail is not None and tail < target:
            break
    return HighPrecisionReal.from_fraction(partial, digits, tail)


@dataclass(frozen=True)
class SeriesExpansion:
    """Bracket B(n) = sum_j coeffs[j] * n**-j; the expansion of a(n, d)/n! is e**-2 * B(n)."""

    d_tag: int | str
    coeffs: tuple[Fraction, ...]

    def evaluate(self, n: int, order: int) -> Fraction:
        if not 0 <= order < len(self.coeffs):
            raise ValueError(f"order must be in 0..{len(self.coeffs) - 1}, got {order}")
        return sum((c / Fraction(n) ** j for j, c in enumerate(self.coeffs[: order + 1])), Fraction(0))


def expansion(d_tag: int | str, d: int | None = None, corrected: bool = False) -> SeriesExpansion:
    """Known bracket for d_tag 0 or 1; ``"general"`` gives the first-order law 1 + 4(d-1)/n."""
    if d_tag in SERIES_COEFFS:
        table = CORRECTED_COEFFS if corrected else SERIES_COEFFS
        return SeriesExpansion(d_tag, table[d_tag])
    if d_tag == "general":
        if d is None:
            raise ValueError("general expansion needs d")
        return SeriesExpansion("general", (Fraction(1), Fraction(4 * (d - 1))))
    raise ValueError(f"unknown d_tag {d_tag!r}")


def series_bracket(d_tag: int, n: int, order: int, corrected: bool = False) -> Fraction:
    """Truncated bracket sum_{j <= order} c_j n^-j, exact.

    ``corrected=True`` swaps in 796/15 for the d = 0 coefficient of n^-5.
    """
    if d_tag not in SERIES_COEFFS:
        raise ValueError(f"series known only for d_tag 0 or 1, got {d_tag!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return expansion(d_tag, corrected=corrected).evaluate(n, order)


def exact_ratio(n: int, d: int) -> Fraction:
    return Fraction(count_exact(n, d), factorial(n))


def exact_ratio_scaled(n: int, d: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """(a(n, d) / n!) * e**2, which tends to 1."""
    return e_squared(digits) * exact_ratio(n, d)


def empirical_first_order(n: int, d: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """n * (a(n, d) e**2 / n! - 1); converges to 4(d - 1)."""
    return n * (exact_ratio_scaled(n, d, digits) - 1)


def first_order_target(d: int) -> int:
    return 4 * (d - 1)


def convergence_report(d: int, n_list, digits: int = DEFAULT_DIGITS):
    """Rows ``(n, e_n, |e_n - 4(d-1)|)`` in increasing n."""
    target = first_order_target(d)
    rows = []
    for n in sorted(n_list):
        e_n = empirical_first_order(n, d, digits)
        rows.append((n, e_n, abs(e_n - target)))
    return rows
