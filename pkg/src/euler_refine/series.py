"""Exact truncated exponential generating functions.

A counting series F(x) = sum_n a_n x^n/n! is stored through its plain
power-series coefficients c_n = a_n/n!, kept as exact rationals.  With
that convention a product of two series is an ordinary Cauchy
convolution and no factorial bookkeeping is needed until the counts are
read back out with :func:`extract_counts`.

Everything here is exact: equality of series means equality of the
coefficient vectors, with no tolerance anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class TruncatedEGF:
    """A series truncated at x^N, holding exact [x^n] coefficients c_0..c_N."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "TruncatedEGF") -> "TruncatedEGF":
        return egf_add(self, other)

    def __mul__(self, other) -> "TruncatedEGF":
        if isinstance(other, TruncatedEGF):
            return egf_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "TruncatedEGF":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Rational) -> "TruncatedEGF":
        c = Fraction(c)
        return TruncatedEGF(tuple(c * x for x in self.coeffs))

    def to_json_dict(self) -> dict:
        """JSON form {"order": N, "a": [...]} with a_n as decimal strings."""
        return {"order": self.order, "a": [str(a) for a in extract_counts(self)]}


def zero_egf(order: int) -> TruncatedEGF:
    return TruncatedEGF((Fraction(0),) * (order + 1))


def one_egf(order: int) -> TruncatedEGF:
    return TruncatedEGF((Fraction(1),) + (Fraction(0),) * order)


def egf_from_coeffs(coeffs: Iterable[Rational]) -> TruncatedEGF:
    return TruncatedEGF(tuple(Fraction(c) for c in coeffs))


def egf_from_counts(counts: Sequence[int]) -> TruncatedEGF:
    """Build the series with a_n = counts[n], i.e. c_n = counts[n]/n!."""
    return TruncatedEGF(tuple(Fraction(a, factorial(n)) for n, a in enumerate(counts)))


def egf_add(f: TruncatedEGF, g: TruncatedEGF) -> TruncatedEGF:
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} != {g.order}")
    return TruncatedEGF(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def egf_mul(f: TruncatedEGF, g: TruncatedEGF) -> TruncatedEGF:
    """Cauchy product truncated at the common order."""
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} != {g.order}")
    n = f.order
    fc, gc = f.coeffs, g.coeffs
    out = []
    for m in range(n + 1):
        out.append(sum((fc[i] * gc[m - i] for i in range(m + 1)), Fraction(0)))
    return TruncatedEGF(tuple(out))


def egf_reciprocal(f: TruncatedEGF) -> TruncatedEGF:
    """Multiplicative inverse up to the truncation order.

    Uses the triangular recurrence g_0 = 1/f_0,
    g_n = -(sum_{i=1..n} f_i g_{n-i}) / f_0.
    """
    if f.coeffs[0] == 0:
        raise ValueError("series with zero constant term has no reciprocal")
    f0 = f.coeffs[0]
    inv = [1 / f0]
    for m in range(1, f.order + 1):
        acc = sum((f.coeffs[i] * inv[m - i] for i in range(1, m + 1)), Fraction(0))
        inv.append(-acc / f0)
    return TruncatedEGF(tuple(inv))


def sin_egf(order: int) -> TruncatedEGF:
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [Fraction(0)] * (order + 1)
    for m in range(1, order + 1, 2):
        coeffs[m] = Fraction((-1) ** ((m - 1) // 2), factorial(m))
    return TruncatedEGF(tuple(coeffs))


def cos_egf(order: int) -> TruncatedEGF:
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [Fraction(0)] * (order + 1)
    for m in range(0, order + 1, 2):
        coeffs[m] = Fraction((-1) ** (m // 2), factorial(m))
    return TruncatedEGF(tuple(coeffs))


def sec_egf(order: int) -> TruncatedEGF:
    return egf_reciprocal(cos_egf(order))


def tan_egf(order: int) -> TruncatedEGF:
    return egf_mul(sin_egf(order), sec_egf(order))


def extract_counts(f: TruncatedEGF) -> list[int]:
    """Read off (a_0, ..., a_N) with a_n = n! * c_n, requiring each to be integral."""
    counts = []
    for n, c in enumerate(f.coeffs):
        a = c * factorial(n)
        if a.denominator != 1:
            raise ValueError(f"coefficient of x^{n} gives non-integral count {a}")
        counts.append(a.numerator)
    return counts


# Named series for the refined counting sequences, each shifted two steps:
# the [x^n] coefficient carries the count at degree n + 2.

def ene_egf(order: int) -> TruncatedEGF:
    """Series for min-max counts: sec(x)^2 (sec(x) + tan(x))."""
    sec, tan = sec_egf(order), tan_egf(order)
    return sec * sec * (sec + tan)


def enw_egf(order: int) -> TruncatedEGF:
    """Series for max-min counts: sec(x) tan(x) (sec(x) + tan(x))."""
    sec, tan = sec_egf(order), tan_egf(order)
    return sec * tan * (sec + tan)


def eup_egf(order: int) -> TruncatedEGF:
    """Series for second-max-upper counts: 2 tan(x)^2 (sec(x) + tan(x))."""
    sec, tan = sec_egf(order), tan_egf(order)
    return 2 * tan * tan * (sec + tan)


def edown_egf(order: int) -> TruncatedEGF:
    """Series for second-max-lower counts: sec(x) + 2 tan(x)."""
    return sec_egf(order) + 2 * tan_egf(order)
