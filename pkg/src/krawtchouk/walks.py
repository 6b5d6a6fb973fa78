"""Classical Bernoulli walk and its quantum counterpart.

Classical side: the elementary symmetric functions of the +-1 steps are
Krawtchouk entries, and ``K^(N)[i, j_N]`` is a martingale in N.

Quantum side: ``X_F = f_1 + ... + f_N`` (f_k flips tensor position k) and
``X_G = g_1 + ... + g_N`` act on the 2**N-dimensional tensor space; their
reductions to degree-N symmetric tensors are tridiagonal / diagonal
(N+1) x (N+1) matrices intertwined by the transposed Krawtchouk matrix.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .core import binomial, kraw_matrix
from .matrix import ExactMatrix
from .symtensor import _symmetric_power, char_reciprocal_series
from .transforms import TransformPlan, _as_array, _to_working, fwht_array

DEFAULT_FULL_SPACE_CAP = 16
MC_BLOCK_SIZE = 1 << 16

# ---------------------------------------------------------------------------
# classical walk


@dataclass(frozen=True)
class WalkState:
    """Walk after ``N`` steps, ``j`` of which were -1."""

    N: int
    j: int

    def __post_init__(self):
        if not 0 <= self.j <= self.N:
            raise ValueError(f"need 0 <= j <= N, got N={self.N}, j={self.j}")

    @property
    def position(self) -> int:
        return self.N - 2 * self.j

    @classmethod
    def from_position(cls, N: int, x: int) -> WalkState:
        if (N - x) % 2:
            raise ValueError(f"position {x} unreachable in {N} steps")
        return cls(N, (N - x) // 2)

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> WalkState:
        _check_signs(signs)
        return cls(len(signs), sum(1 for s in signs if s == -1))


def _check_signs(signs: Iterable[int]) -> None:
    for s in signs:
        if s not in (1, -1):
            raise ValueError(f"steps must be +1 or -1, got {s!r}")


def elementary_symmetric(signs: Sequence[int]) -> list[int]:
    """``(alpha_0, ..., alpha_N)`` from expanding ``prod (1 + v * xi_i)``."""
    signs = list(signs)
    _check_signs(signs)
    alpha = [1]
    for xi in signs:
        nxt = alpha + [0]
        for k in range(len(alpha)):
            nxt[k + 1] += xi * alpha[k]
        alpha = nxt
    return alpha


def path_conditional_means(N: int) -> list[list[Fraction]]:
    """``means[j][i]``: average of ``alpha_i`` over all length-(N+1) sign paths
    whose first N steps contain j minus signs."""
    sums = [[0] * (N + 1) for _ in range(N + 1)]
    counts = [0] * (N + 1)
    for path in itertools.product((1, -1), repeat=N + 1):
        j_now = path[:N].count(-1)
        alpha = elementary_symmetric(path)
        counts[j_now] += 1
        row = sums[j_now]
        for i in range(N + 1):
            row[i] += alpha[i]
    return [[Fraction(sums[j][i], counts[j]) for i in range(N + 1)] for j in range(N + 1)]


@dataclass
class MartingaleReport:
    N: int
    instances: int
    max_defect: Fraction
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.passed


def martingale_check_exact(N: int) -> MartingaleReport:
    """Check ``E[K^(N+1)[i, j_{N+1}] | past] = K^(N)[i, j_N]`` two ways.

    First through the one-step identity ``2 K^(N)_ij = K^(N+1)_ij + K^(N+1)_{i,j+1}``,
    then by enumerating every sign path of length N+1, evaluating the
    elementary symmetric functions of the path and averaging them over the
    paths that share ``j_N``.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    K, K1 = kraw_matrix(N), kraw_matrix(N + 1)
    instances = 0
    worst = Fraction(0)
    counterexample = None

    def record(expected, got, **where):
        nonlocal instances, worst, counterexample
        instances += 1
        defect = abs(Fraction(got) - Fraction(expected))
        worst = max(worst, defect)
        if defect and counterexample is None:
            counterexample = dict(where, expected=expected, got=got)

    for i in range(N + 1):
        for j in range(N + 1):
            record(2 * K[i, j], K1[i, j] + K1[i, j + 1], check="one-step", i=i, j=j)

    means = path_conditional_means(N)
    for j in range(N + 1):
        for i in range(N + 1):
            record(K[i, j], means[j][i], check="enumeration", i=i, j=j)

    return MartingaleReport(N, instances, worst, counterexample)


@dataclass(frozen=True)
class MonteCarloResult:
    mean: float
    stderr: float
    trials: int


def simulate_steps(N: int, trials: int, seed: int, block: int = 0) -> np.ndarray:
    """+-1 steps for one block of trials, shape ``(trials, N)``.

    Block ``b`` draws from ``numpy.random.default_rng([seed, b])`` (PCG64), so a
    run is reproducible regardless of how blocks are distributed over workers.
    """
    rng = np.random.default_rng([seed, block])
    return 1 - 2 * rng.integers(0, 2, size=(trials, N), dtype=np.int8)


def monte_carlo_martingale(N: int, i: int, trials: int, seed: int, workers: int = 1) -> MonteCarloResult:
    """Sample mean and standard error of ``K^(N)[i, j_N]`` over simulated walks."""
    if not 0 <= i <= N:
        raise ValueError(f"need 0 <= i <= N, got N={N}, i={i}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    column = np.array(kraw_matrix(N).row(i), dtype=np.float64)
    sizes = [min(MC_BLOCK_SIZE, trials - start) for start in range(0, trials, MC_BLOCK_SIZE)]

    def run(b: int) -> tuple[float, float]:
        steps = simulate_steps(N, sizes[b], seed, b)
        j = np.count_nonzero(steps == -1, axis=1)
        values = column[j]
        return float(values.sum()), float((values * values).sum())

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run, range(len(sizes))))
    else:
        parts = [run(b) for b in range(len(sizes))]

    total = math.fsum(p[0] for p in parts)
    total_sq = math.fsum(p[1] for p in parts)
    mean = total / trials
    if trials > 1:
        var = max(total_sq - trials * mean * mean, 0.0) / (trials - 1)
        stderr = math.sqrt(var / trials)
    else:
        stderr = 0.0
    return MonteCarloResult(mean, stderr, trials)


# ---------------------------------------------------------------------------
# reduced (symmetric tensor) operators

F = ExactMatrix.from_rows([[0, 1], [1, 0]])
G = ExactMatrix.from_rows([[1, 0], [0, -1]])


def x_f_reduced(N: int) -> ExactMatrix:
    """Reduced flip sum: row k has N-k in column k+1 and k in column k-1."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    n = N + 1
    entries = [0] * (n * n)
    for k in range(n):
        if k + 1 <= N:
            entries[k * n + k + 1] = N - k
        if k >= 1:
            entries[k * n + k - 1] = k
    return ExactMatrix(n, n, entries)


def x_g_reduced(N: int) -> ExactMatrix:
    """``diag(N, N-2, ..., -N)``."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return ExactMatrix.diagonal([N - 2 * k for k in range(N + 1)])


class Dual:
    """``a + b*eps`` with ``eps**2 = 0``; the eps part of a product is a derivative."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a, self.b = a, b

    def __add__(self, other):
        other = other if isinstance(other, Dual) else Dual(other)
        return Dual(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __mul__(self, other):
        other = other if isinstance(other, Dual) else Dual(other)
        return Dual(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        other = other if isinstance(other, Dual) else Dual(other)
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Dual({self.a!r}, {self.b!r})"


def reduced_generator_derivative(A: ExactMatrix, N: int) -> ExactMatrix:
    """d/dt at t=0 of the degree-N symmetric representation of ``I + tA``.

    For ``A = F`` this recovers ``x_f_reduced(N)``; for ``A = G`` it gives
    ``x_g_reduced(N)``.
    """
    d = A.rows
    rows = [[Dual(1 if i == j else 0, A[i, j]) for j in range(d)] for i in range(d)]
    rep = _symmetric_power(rows, N)
    return ExactMatrix(rep.rows, rep.cols, (x.b if isinstance(x, Dual) else 0 for x in rep.entries))


# ---------------------------------------------------------------------------
# full tensor-space operators (matrix-free)


def _check_full(N: int, length: int, cap: int) -> None:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if N > cap:
        raise ValueError(f"full-space order {N} exceeds the cap of {cap} (raise it with --full-cap)")
    if length != 1 << N:
        raise ValueError(f"vector of length {length} does not match 2^{N} = {1 << N}")


def _flip_sum(a: np.ndarray, N: int) -> np.ndarray:
    a = _to_working(a, N)
    lead = a.shape[:-1]
    out = np.zeros_like(a)
    for k in range(N):
        stride = 1 << k
        # swapping the two halves of every 2*stride block flips bit k of the label
        pairs = a.reshape(*lead, -1, 2, stride)[..., ::-1, :]
        out += pairs.reshape(*lead, 1 << N)
    return out


def _g_weights(N: int) -> np.ndarray:
    labels = np.arange(1 << N)
    ones = np.zeros(1 << N, dtype=np.int64)
    for b in range(N):
        ones += (labels >> b) & 1
    return N - 2 * ones


def _g_apply(a: np.ndarray, N: int) -> np.ndarray:
    a = _to_working(a, N)
    w = _g_weights(N)
    return a * (w if a.dtype != object else w.astype(object))


def apply_x_f_full(N: int, v: Sequence[int], cap: int = DEFAULT_FULL_SPACE_CAP) -> list[int]:
    """``X_F v`` without forming the 2**N x 2**N matrix."""
    a = _as_array(v)
    _check_full(N, len(a), cap)
    return [int(x) for x in _flip_sum(a, N).tolist()]


def apply_x_g_full(N: int, v: Sequence[int], cap: int = DEFAULT_FULL_SPACE_CAP) -> list[int]:
    """``X_G v``: the entry at label x is scaled by ``N - 2*popcount(x)``."""
    a = _as_array(v)
    _check_full(N, len(a), cap)
    return [int(x) for x in _g_apply(a, N).tolist()]


def check_intertwine_full(
    N: int,
    mode: str = "basis",
    count: int = 16,
    seed: int = 0,
    block: int = 256,
    cap: int = DEFAULT_FULL_SPACE_CAP,
) -> bool:
    """Exact check of ``X_F H_N v == H_N X_G v``.

    ``mode="basis"`` sweeps every standard basis vector; ``mode="random"``
    uses ``count`` random integer vectors drawn from ``default_rng(seed)``.
    """
    _check_full(N, 1 << N, cap)
    plan = TransformPlan.for_power(N)
    dim = 1 << N

    def agrees(batch: np.ndarray) -> bool:
        left = _flip_sum(fwht_array(batch, plan), N)
        right = fwht_array(_g_apply(batch, N), plan)
        return bool(np.array_equal(left, right))

    if mode == "basis":
        for start in range(0, dim, block):
            stop = min(start + block, dim)
            batch = np.zeros((stop - start, dim), dtype=np.int64)
            batch[np.arange(stop - start), np.arange(start, stop)] = 1
            if not agrees(batch):
                return False
        return True
    if mode == "random":
        rng = np.random.default_rng(seed)
        batch = rng.integers(-1000, 1001, size=(count, dim), dtype=np.int64)
        return agrees(batch)
    raise ValueError(f"unknown mode {mode!r}")


def check_intertwine_reduced(N: int) -> bool:
    """Exact check of ``Xbar_F K^T == K^T Xbar_G``."""
    Kt = kraw_matrix(N).T
    return x_f_reduced(N) @ Kt == Kt @ x_g_reduced(N)


def diagonalize_reduced(N: int) -> ExactMatrix:
    """``K^T Xbar_F K^T / 2**N``, exact; equals ``x_g_reduced(N)``."""
    Kt = kraw_matrix(N).T
    return (Kt @ x_f_reduced(N) @ Kt).exact_div(1 << N)


def spectrum_reduced(N: int) -> list[int]:
    """Eigenvalues of the reduced flip sum, read off its exact diagonalization."""
    D = diagonalize_reduced(N)
    if not D.is_diagonal():
        raise ArithmeticError(f"conjugation by K^T failed to diagonalize Xbar_F for N={N}")
    values = D.diag()
    if any(not isinstance(x, int) for x in values):
        raise ArithmeticError("non-integer eigenvalue")
    return values


# ---------------------------------------------------------------------------
# expectation values


@dataclass(frozen=True)
class MgfSample:
    z: float
    value: float


def _exp_spectrum(z: float, N: int) -> list[float]:
    return [math.exp(z * (N - 2 * k)) for k in range(N + 1)]


def reduced_exp_entry(z: float, N: int, a: int, b: int) -> float:
    """Entry (a, b) of ``exp(z Xbar_F) = K^T exp(z Xbar_G) K^T / 2**N``."""
    K = kraw_matrix(N)
    e = _exp_spectrum(z, N)
    return math.fsum(K[k, a] * K[b, k] * e[k] for k in range(N + 1)) / (1 << N)


def reduced_exp_trace(z: float, N: int) -> float:
    """Trace of ``exp(z Xbar_F)``; integer weights are summed before any rounding."""
    K = kraw_matrix(N)
    e = _exp_spectrum(z, N)
    weights = [sum(K[k, a] * K[a, k] for a in range(N + 1)) for k in range(N + 1)]
    return math.fsum(w * x for w, x in zip(weights, e)) / (1 << N)


def ground_state_mgf(z: float, N: int) -> float:
    """``<0...0| exp(z X_F) |0...0>``."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return reduced_exp_entry(z, N, 0, 0)


def normalized_trace_mgf(z: float, N: int) -> float:
    """``tr exp(z X_F) / 2**N`` over the full space; eigenvalue N-2k has multiplicity C(N, k)."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return math.fsum(binomial(N, k) * x for k, x in enumerate(_exp_spectrum(z, N))) / (1 << N)


def symmetric_trace_mgf(z: float, N: int) -> float:
    """``tr exp(z Xbar_F) / (N+1)``."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return reduced_exp_trace(z, N) / (N + 1)


def chebyshev_u(N: int, x: float):
    """U_N(x) by ``U_{n+1} = 2x U_n - U_{n-1}``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    prev, cur = 1, 2 * x
    if N == 0:
        return prev
    for _ in range(N - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


SINH_RATIO_CUTOFF = 1e-8


def sinh_ratio(z: float, N: int) -> float:
    """``sinh((N+1) z) / ((N+1) sinh z)``, with its removable singularity at 0."""
    if abs(z) < SINH_RATIO_CUTOFF:
        return 1.0
    return math.sinh((N + 1) * z) / ((N + 1) * math.sinh(z))


@dataclass(frozen=True)
class ChebyshevCheck:
    passed: bool
    max_rel_error: float
    worst: tuple[float, int] | None = None  # (z, N)

    def __bool__(self) -> bool:
        return self.passed


def chebyshev_series_check(
    M: int, zs: Sequence[float] = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0), rtol: float = 1e-10
) -> ChebyshevCheck:
    """Compare the series 1/det(I - t exp(zF)) with U_N(cosh z) for N <= M.

    The 2x2 exponential ``[[cosh z, sinh z], [sinh z, cosh z]]`` is converted
    to exact rationals, so only the final comparison is in floating point.
    """
    worst_err, worst = 0.0, None
    for z in zs:
        c, s = math.cosh(z), math.sinh(z)
        A = [[Fraction(c), Fraction(s)], [Fraction(s), Fraction(c)]]
        series = char_reciprocal_series(A, M)
        for N in range(M + 1):
            expected = chebyshev_u(N, c)
            got = float(series[N])
            err = abs(got - expected) / max(abs(expected), 1e-300)
            if err > worst_err:
                worst_err, worst = err, (z, N)
    return ChebyshevCheck(worst_err <= rtol, worst_err, worst)
