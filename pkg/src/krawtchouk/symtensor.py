"""Symmetric tensor powers of a linear operator.

A d x d matrix ``A`` acts on the variables by ``y_i = sum_j A[i, j] x_j``.
In degree N the row labelled by the multi-index ``m`` of the symmetric
representation holds the coefficients of ``prod_i y_i**m_i`` expanded in the
monomials ``x**n`` (the component, or dual, convention).  Multi-indices are
ordered lexicographically descending, so for d = 2 the k-th basis monomial
is ``x0**(N-k) * x1**k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .core import binomial
from .matrix import ExactMatrix
from .series import RationalSeries, poly_add, poly_divexact, poly_mul, poly_sub, poly_trim


@dataclass(frozen=True, order=False)
class MultiIndex:
    """Occupancy vector ``(n_0, ..., n_delta)`` of a degree-N monomial."""

    occupancy: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.occupancy)

    def monomial(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i}" for i in range(len(self.occupancy))]
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, self.occupancy) if e]
        return "*".join(parts) or "1"


def _occupancies(d: int, N: int):
    if d == 1:
        yield (N,)
        return
    for first in range(N, -1, -1):
        for rest in _occupancies(d - 1, N - first):
            yield (first,) + rest


def enumerate_multi_indices(d: int, N: int) -> list[MultiIndex]:
    """All degree-N multi-indices in d variables, lexicographically descending."""
    if d < 1 or N < 0:
        raise ValueError(f"need d >= 1 and N >= 0, got d={d}, N={N}")
    return [MultiIndex(o) for o in _occupancies(d, N)]


def symmetric_dimension(d: int, N: int) -> int:
    return binomial(N + d - 1, d - 1)


def _exact(x):
    if isinstance(x, (int, Fraction)):
        return x
    return Fraction(x)


def _square_rows(A) -> list[list]:
    rows = A.to_rows() if isinstance(A, ExactMatrix) else [list(r) for r in A]
    d = len(rows)
    if d == 0 or any(len(r) != d for r in rows):
        raise ValueError("symmetric representation needs a non-empty square matrix")
    return [[_exact(x) for x in r] for r in rows]


# multivariate polynomials as {exponent tuple: coefficient}

def _mpoly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for ea, a in p.items():
        for eb, b in q.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + a * b
    return {e: c for e, c in out.items() if c}


def symmetric_representation(A, N: int) -> ExactMatrix:
    """Matrix of the induced action of ``A`` on degree-N homogeneous polynomials."""
    if N < 0:
        raise ValueError(f"degree must be >= 0, got {N}")
    return _symmetric_power(_square_rows(A), N)


def _symmetric_power(rows: list[list], N: int) -> ExactMatrix:
    # entries only need + and *, so non-rational rings (dual numbers) work too
    d = len(rows)
    basis = [m.occupancy for m in enumerate_multi_indices(d, N)]
    position = {m: k for k, m in enumerate(basis)}
    unit = tuple([0] * d)

    linear = []
    for i in range(d):
        form = {}
        for j, a in enumerate(rows[i]):
            if a:
                e = [0] * d
                e[j] = 1
                form[tuple(e)] = a
        linear.append(form)

    # powers[i][p] = y_i ** p
    powers = []
    for i in range(d):
        seq = [{unit: 1}]
        for _ in range(N):
            seq.append(_mpoly_mul(seq[-1], linear[i]))
        powers.append(seq)

    size = len(basis)
    entries = [0] * (size * size)
    for r, m in enumerate(basis):
        prod = {unit: 1}
        for i, e in enumerate(m):
            if e:
                prod = _mpoly_mul(prod, powers[i][e])
        for mono, c in prod.items():
            entries[r * size + position[mono]] = c
    return ExactMatrix(size, size, entries)


def symmetric_trace(A, N: int) -> Rational:
    """Trace of the degree-N symmetric representation."""
    return symmetric_representation(A, N).trace()


# ---------------------------------------------------------------------------
# det(I - tA) and its reciprocal series


def _char_entries(A) -> list[list[list]]:
    rows = _square_rows(A)
    d = len(rows)
    return [
        [poly_trim([1 if i == j else 0, -rows[i][j]]) for j in range(d)]
        for i in range(d)
    ]


def det_polynomial_bareiss(M: list[list[list]]) -> list:
    """Determinant of a square matrix of polynomials by fraction-free elimination."""
    n = len(M)
    if n == 0:
        return [1]
    M = [[list(p) for p in row] for row in M]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if M[r][k]), None)
        if pivot_row is None:
            return []
        if pivot_row != k:
            M[k], M[pivot_row] = M[pivot_row], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(M[k][k], M[i][j]), poly_mul(M[i][k], M[k][j]))
                M[i][j] = poly_divexact(num, prev)
            M[i][k] = []
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return [sign * c for c in det] if sign < 0 else det


def det_polynomial_cofactor(M: list[list[list]]) -> list:
    """Determinant by Laplace expansion along the first row."""
    n = len(M)
    if n == 0:
        return [1]
    if n == 1:
        return poly_trim(M[0][0])
    total: list = []
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = poly_mul(M[0][j], det_polynomial_cofactor(minor))
        total = poly_sub(total, term) if j % 2 else poly_add(total, term)
    return total


def char_det_polynomial(A, method: str = "bareiss") -> list:
    """Coefficients of ``det(I - tA)`` in increasing powers of t."""
    M = _char_entries(A)
    if method == "bareiss":
        return det_polynomial_bareiss(M)
    if method == "cofactor":
        return det_polynomial_cofactor(M)
    raise ValueError(f"unknown determinant method {method!r}")


def char_reciprocal_series(A, M: int, method: str = "bareiss") -> RationalSeries:
    """``1 / det(I - tA)`` as an exact power series through ``t**M``."""
    det = char_det_polynomial(A, method)
    return RationalSeries.from_polynomial(det, M).reciprocal()


@dataclass(frozen=True)
class TraceTheoremResult:
    passed: bool
    checked: int
    mismatch: tuple[int, Fraction, Fraction] | None = None  # (N, expected, got)

    def __bool__(self) -> bool:
        return self.passed


def verify_symmetric_trace_theorem(A, M: int) -> TraceTheoremResult:
    """Compare the t**N coefficient of 1/det(I - tA) with the degree-N
    symmetric trace for every N <= M."""
    series = char_reciprocal_series(A, M)
    for N in range(M + 1):
        got = Fraction(symmetric_trace(A, N))
        if series[N] != got:
            return TraceTheoremResult(False, N + 1, (N, series[N], got))
    return TraceTheoremResult(True, M + 1)
