"""Exact univariate polynomials and truncated power series over the rationals.

Polynomials are plain coefficient lists, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def poly_trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return poly_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_sub(p: Sequence, q: Sequence) -> list:
    return poly_add(p, [-c for c in q])


def poly_mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divexact(p: Sequence, q: Sequence) -> list:
    """Quotient of p by q, raising if the division leaves a remainder."""
    q = poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [_q(c) for c in poly_trim(p)]
    lead = _q(q[-1])
    quot = [Fraction(0)] * max(len(rem) - len(q) + 1, 0)
    while len(rem) >= len(q):
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem.pop()
        rem = poly_trim(rem)
    if rem:
        raise ArithmeticError("polynomial division is not exact")
    return poly_trim(_normalise(quot))


def _normalise(coeffs: Sequence) -> list:
    return [c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c for c in coeffs]


@dataclass(frozen=True)
class RationalSeries:
    """Power series ``sum c_k t**k`` known exactly up to ``t**order``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(_q(c) for c in self.coeffs))

    @classmethod
    def from_polynomial(cls, p: Sequence, order: int) -> RationalSeries:
        p = list(p)[: order + 1]
        return cls(tuple(p + [0] * (order + 1 - len(p))))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _common(self, other: RationalSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: RationalSeries) -> RationalSeries:
        m = self._common(other)
        return RationalSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(m + 1)))

    def __sub__(self, other: RationalSeries) -> RationalSeries:
        m = self._common(other)
        return RationalSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(m + 1)))

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        m = self._common(other)
        a, b = self.coeffs, other.coeffs
        return RationalSeries(tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(m + 1)))

    def reciprocal(self) -> RationalSeries:
        c = self.coeffs
        if c[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv0 = 1 / c[0]
        out = [inv0]
        for n in range(1, len(c)):
            out.append(-inv0 * sum(c[k] * out[n - k] for k in range(1, n + 1)))
        return RationalSeries(tuple(out))

    def __truediv__(self, other: RationalSeries) -> RationalSeries:
        return self * other.reciprocal()

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t^{k}")
        return (" + ".join(terms) or "0") + f" + O(t^{self.order + 1})"
