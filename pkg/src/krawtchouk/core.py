"""Krawtchouk matrices, their symmetric variants, and the identities they satisfy.

Column ``j`` of the order-``N`` Krawtchouk matrix holds the coefficients of
``(1+v)**(N-j) * (1-v)**j``.  Three constructions are provided (closed-form
sum, polynomial expansion, square-identity fill) so they can check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .matrix import ExactMatrix

DEFAULT_MAX_ORDER = 64


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_order(N: int) -> None:
    if not isinstance(N, int) or N < 0:
        raise ValueError(f"Krawtchouk order must be a non-negative integer, got {N!r}")


def kraw_entry(N: int, i: int, j: int) -> int:
    """Entry (i, j) of K^(N) from the alternating binomial sum."""
    _check_order(N)
    if not (0 <= i <= N and 0 <= j <= N):
        raise IndexError(f"index ({i}, {j}) out of range for order {N}")
    return sum((-1) ** k * binomial(j, k) * binomial(N - j, i - k) for k in range(0, min(i, j) + 1))


def _poly_mul_linear(coeffs: list[int], sign: int) -> list[int]:
    # coeffs * (1 + sign*v)
    out = coeffs + [0]
    for n in range(len(coeffs)):
        out[n + 1] += sign * coeffs[n]
    return out


def kraw_column(N: int, j: int) -> list[int]:
    """Coefficients of (1+v)^(N-j) (1-v)^j in increasing powers of v."""
    coeffs = [1]
    for _ in range(N - j):
        coeffs = _poly_mul_linear(coeffs, 1)
    for _ in range(j):
        coeffs = _poly_mul_linear(coeffs, -1)
    return coeffs


def kraw_matrix(N: int) -> ExactMatrix:
    """The Krawtchouk matrix K^(N), built column by column from its generating function."""
    _check_order(N)
    columns = [kraw_column(N, j) for j in range(N + 1)]
    return ExactMatrix(N + 1, N + 1, (columns[j][i] for i in range(N + 1) for j in range(N + 1)))


def kraw_matrix_square_fill(N: int) -> ExactMatrix:
    """K^(N) rebuilt from its top row and rightmost column using only
    ``K[i, j] = K[i-1, j] + K[i-1, j+1] + K[i, j+1]``.

    Rows are filled top to bottom, each row right to left.
    """
    _check_order(N)
    n = N + 1
    K = [[0] * n for _ in range(n)]
    for j in range(n):
        K[0][j] = 1
    for i in range(n):
        K[i][N] = (-1) ** i * binomial(N, i)
    for i in range(1, n):
        for j in range(N - 1, -1, -1):
            K[i][j] = K[i - 1][j] + K[i - 1][j + 1] + K[i][j + 1]
    return ExactMatrix.from_rows(K)


def binomial_diagonal(N: int) -> ExactMatrix:
    """Diagonal matrix B^(N) with B_ii = C(N, i)."""
    _check_order(N)
    return ExactMatrix.diagonal([binomial(N, i) for i in range(N + 1)])


def sym_kraw_matrix(N: int) -> ExactMatrix:
    """Symmetric Krawtchouk matrix S^(N) = K^(N) B^(N)."""
    S = kraw_matrix(N) @ binomial_diagonal(N)
    if not S.is_symmetric():
        raise ArithmeticError(f"S^({N}) came out asymmetric")
    return S


# ---------------------------------------------------------------------------
# identity suite


@dataclass
class IdentityCheck:
    """Outcome of one identity swept over many instances.

    Exact checks keep ``tolerance = 0``; floating-point checks record a
    relative error and fail once it exceeds the tolerance.
    """

    name: str
    instances: int = 0
    max_defect: int | float = 0
    counterexample: dict | None = None
    tolerance: float = 0

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, lhs, rhs, **where) -> None:
        self.record_defect(abs(lhs - rhs), expected=rhs, got=lhs, **where)

    def record_defect(self, defect, **where) -> None:
        self.instances += 1
        if defect > self.max_defect:
            self.max_defect = defect
        if defect > self.tolerance and self.counterexample is None:
            self.counterexample = dict(where)


@dataclass
class IdentityReport:
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_identities(max_order: int = 12) -> IdentityReport:
    """Sweep every basic Krawtchouk identity for orders 0..max_order."""
    mats = {N: kraw_matrix(N) for N in range(max_order + 2)}

    involution = IdentityCheck("involution K^2 = 2^N I")
    boundary = IdentityCheck("boundary rows and columns")
    fourfold = IdentityCheck("four-fold symmetry of |K|")
    cross = IdentityCheck("cross identities (i)-(iv)")
    square = IdentityCheck("square identity")
    symmetric = IdentityCheck("S^(N) symmetric")
    methods = IdentityCheck("construction methods agree")

    for N in range(max_order + 1):
        K = mats[N]
        n = N + 1
        sq = K @ K
        for i in range(n):
            for j in range(n):
                involution.record(sq[i, j], (1 << N) if i == j else 0, N=N, i=i, j=j)

        for j in range(n):
            boundary.record(K[0, j], 1, N=N, row=0, j=j)
            boundary.record(K[N, j], (-1) ** j, N=N, row=N, j=j)
        for i in range(n):
            boundary.record(K[i, 0], binomial(N, i), N=N, i=i, col=0)
            boundary.record(K[i, N], (-1) ** i * binomial(N, i), N=N, i=i, col=N)

        for i in range(n):
            for j in range(n):
                a = abs(K[i, j])
                for other in (K[N - i, j], K[i, N - j], K[N - i, N - j]):
                    fourfold.record(abs(other), a, N=N, i=i, j=j)

        # cross identities, out-of-range entries taken as zero
        def k(M, i, j):
            return M[i, j] if 0 <= i < M.rows and 0 <= j < M.cols else 0

        up = mats[N + 1]
        for i in range(n + 1):
            for j in range(n):
                cross.record(k(K, i - 1, j) + k(K, i, j), up[i, j], N=N, i=i, j=j, identity="i")
                cross.record(k(K, i, j) - k(K, i - 1, j), up[i, j + 1], N=N, i=i, j=j, identity="iii")
        if N >= 1:
            down = mats[N - 1]
            for i in range(N):
                for j in range(N):
                    cross.record(K[i, j] + K[i, j + 1], 2 * down[i, j], N=N, i=i, j=j, identity="ii")
                    cross.record(K[i + 1, j] - K[i + 1, j + 1], 2 * down[i, j], N=N, i=i + 1, j=j,
                                 identity="iv")

        for i in range(1, n):
            for j in range(N):
                square.record(K[i, j], K[i - 1, j] + K[i - 1, j + 1] + K[i, j + 1], N=N, i=i, j=j)

        S = K @ binomial_diagonal(N)
        for i in range(n):
            for j in range(i + 1, n):
                symmetric.record(S[i, j], S[j, i], N=N, i=i, j=j)

        F = kraw_matrix_square_fill(N)
        for i in range(n):
            for j in range(n):
                methods.record(F[i, j], K[i, j], N=N, i=i, j=j, method="square-fill")
                methods.record(kraw_entry(N, i, j), K[i, j], N=N, i=i, j=j, method="closed-form")

    return IdentityReport([involution, boundary, fourfold, cross, square, symmetric, methods])
