"""Independent reference computations used only by the tests."""

from __future__ import annotations

import itertools

import numpy as np
import sympy


def pascal_binomial(n: int, k: int) -> int:
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k] if 0 <= k <= n else 0


def dense(M) -> np.ndarray:
    return np.array(M.to_rows(), dtype=object)


def flip_operator_by_index(N: int, k: int) -> np.ndarray:
    """f_k on 2**N labels: 1 where y is x with tensor position k (1-based, most
    significant first) flipped."""
    dim = 1 << N
    out = np.zeros((dim, dim), dtype=np.int64)
    bit = 1 << (N - k)
    for x in range(dim):
        out[x ^ bit, x] = 1
    return out


def symmetric_representation_sympy(A, N: int):
    """Coefficient table of prod_i (sum_j A_ij x_j)**m_i via sympy expansion,
    rows and columns in lexicographically descending multi-index order."""
    rows = A if isinstance(A, list) else A.to_rows()
    d = len(rows)
    xs = sympy.symbols(f"x0:{d}")
    ys = [sum(sympy.Rational(str(a)) * x for a, x in zip(r, xs)) for r in rows]
    basis = sorted(
        (m for m in itertools.product(range(N + 1), repeat=d) if sum(m) == N), reverse=True
    )
    table = []
    for m in basis:
        poly = sympy.Poly(sympy.expand(sympy.prod([y ** e for y, e in zip(ys, m)])), *xs) if d else None
        table.append([sympy.Rational(poly.coeff_monomial(sympy.prod([x ** e for x, e in zip(xs, n)])))
                      for n in basis])
    return table


def det_char_sympy(A) -> list:
    rows = A if isinstance(A, list) else A.to_rows()
    t = sympy.symbols("t")
    M = sympy.eye(len(rows)) - t * sympy.Matrix([[sympy.Rational(str(a)) for a in r] for r in rows])
    return [sympy.Rational(c) for c in reversed(sympy.Poly(M.det(), t).all_coeffs())]


def expm_taylor_squaring(A: np.ndarray, squarings: int = 10, terms: int = 30) -> np.ndarray:
    """exp(A) by scaling by 2**-squarings, a truncated Taylor series, then squaring."""
    B = A / float(1 << squarings)
    out = np.eye(A.shape[0])
    term = np.eye(A.shape[0])
    for k in range(1, terms):
        term = term @ B / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out
