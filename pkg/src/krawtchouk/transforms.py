"""Kronecker products, Sylvester-Hadamard matrices and fast transforms.

Basis labels on the N-fold tensor space follow the usual positional
convention: ``|n_1 n_2 ... n_N>`` gets label ``sum n_k * d**(N-k)``, so the
first tensor factor is the most significant digit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from .core import kraw_matrix
from .matrix import ExactMatrix

log = logging.getLogger(__name__)

DEFAULT_HADAMARD_CAP = 12
_INT64_LIMIT = 2**63 - 1

H1 = ExactMatrix.from_rows([[1, 1], [1, -1]])


class CeilingExceeded(ValueError):
    """Raised when a dense construction would exceed its configured size cap."""


def kronecker(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Kronecker product in block form ``[a_ij * B]``."""
    entries = []
    for i in range(A.rows):
        arow = A.row(i)
        for k in range(B.rows):
            brow = B.row(k)
            for a in arow:
                entries.extend(a * b for b in brow)
    return ExactMatrix(A.rows * B.rows, A.cols * B.cols, entries)


def kronecker_all(*factors: ExactMatrix) -> ExactMatrix:
    """``A_1 (x) A_2 (x) ... (x) A_n`` associated from the left."""
    if not factors:
        return ExactMatrix.identity(1)
    return reduce(kronecker, factors)


def kronecker_power(A: ExactMatrix, N: int) -> ExactMatrix:
    return kronecker_all(*([A] * N))


def hadamard_matrix(N: int, cap: int = DEFAULT_HADAMARD_CAP) -> ExactMatrix:
    """Sylvester-Hadamard matrix ``H (x) ... (x) H`` (N factors)."""
    if N < 1:
        raise ValueError(f"Hadamard tensor power must be >= 1, got {N}")
    if N > cap:
        raise CeilingExceeded(
            f"dense Hadamard matrix of power {N} exceeds the cap of {cap} "
            f"(raise it with --hadamard-cap)"
        )
    return kronecker_power(H1, N)


# ---------------------------------------------------------------------------
# fast Walsh-Hadamard transform


@dataclass(frozen=True)
class TransformPlan:
    """Butterfly schedule for a length-2**N Walsh-Hadamard transform.

    Stage ``s`` combines entries whose labels differ in bit ``s``; the
    stride doubles from stage to stage.
    """

    n: int
    length: int
    strides: tuple[int, ...]

    @classmethod
    def for_length(cls, length: int) -> TransformPlan:
        n = _log2_exact(length)
        return cls(n, length, tuple(1 << s for s in range(n)))

    @classmethod
    def for_power(cls, n: int) -> TransformPlan:
        return cls(n, 1 << n, tuple(1 << s for s in range(n)))


def _log2_exact(length: int) -> int:
    if length < 1 or length & (length - 1):
        raise ValueError(f"length {length} is not a power of two")
    return length.bit_length() - 1


def _as_array(v) -> np.ndarray:
    """Integer array for ``v``: int64 when every entry fits, else Python ints."""
    if isinstance(v, np.ndarray):
        if v.dtype.kind in "iu" and v.dtype.itemsize <= 8 and v.dtype != np.uint64:
            return v.astype(np.int64, copy=True)
        values = v.tolist()
    else:
        values = list(v)
    for x in values:
        if not isinstance(x, (int, np.integer)) or isinstance(x, bool):
            raise TypeError(f"expected integer entries, got {type(x).__name__}")
    try:
        return np.array(values, dtype=np.int64).reshape(len(values))
    except OverflowError:
        return np.array([int(x) for x in values], dtype=object)


def _peak(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return max(abs(int(a.max())), abs(int(a.min())))


def _to_working(a: np.ndarray, growth: int) -> np.ndarray:
    """int64 copy of ``a`` if ``max|a| * growth`` cannot overflow, else an object array."""
    if _peak(a) * growth <= _INT64_LIMIT:
        return a.astype(np.int64)
    log.info("entries times %d-fold growth exceed int64; using arbitrary-precision path", growth)
    return a.astype(object)


def _butterflies(a: np.ndarray, plan: TransformPlan) -> np.ndarray:
    # operates on the last axis; leading axes are independent vectors
    lead = a.shape[:-1]
    for stride in plan.strides:
        blocks = a.reshape(*lead, plan.length // (2 * stride), 2, stride)
        lo = blocks[..., 0, :]
        hi = blocks[..., 1, :]
        out = np.empty_like(blocks)
        out[..., 0, :] = lo + hi
        out[..., 1, :] = lo - hi
        a = out.reshape(*lead, plan.length)
    return a


def fwht_array(a: np.ndarray, plan: TransformPlan | None = None) -> np.ndarray:
    """Walsh-Hadamard transform along the last axis of an integer array.

    Stays in int64 only when ``max|a| * 2**N`` fits; otherwise switches to
    Python integers.  Never wraps.
    """
    plan = plan or TransformPlan.for_length(a.shape[-1])
    if a.shape[-1] != plan.length:
        raise ValueError(f"last axis has length {a.shape[-1]}, plan expects {plan.length}")
    return _butterflies(_to_working(a, 1 << plan.n), plan)


def fwht(v: Sequence[int], plan: TransformPlan | None = None) -> list[int]:
    """H_N v for a length-2**N integer vector, computed with N butterfly passes."""
    a = _as_array(v)
    plan = plan or TransformPlan.for_length(len(a))
    if len(a) != plan.length:
        raise ValueError(f"vector has length {len(a)}, plan expects {plan.length}")
    return [int(x) for x in fwht_array(a, plan).tolist()]


# ---------------------------------------------------------------------------
# Krawtchouk transform


def _check_kraw_length(v, N: int) -> None:
    if len(v) != N + 1:
        raise ValueError(f"Krawtchouk transform of order {N} needs length {N + 1}, got {len(v)}")


def kraw_transform(v: Sequence[int], N: int) -> list[int]:
    """Forward Krawtchouk transform ``K^(N) v``."""
    _check_kraw_length(v, N)
    return kraw_matrix(N).matvec(list(v))


def kraw_inverse(v: Sequence, N: int) -> list[Fraction]:
    """Inverse transform ``K^(N) v / 2**N`` (K squares to 2**N I)."""
    _check_kraw_length(v, N)
    scale = Fraction(1, 1 << N)
    return [Fraction(x) * scale for x in kraw_matrix(N).matvec(list(v))]
