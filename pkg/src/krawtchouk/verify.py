"""Verification suites run by ``krawtchouk verify``.

Every suite returns a list of :class:`IdentityCheck` objects; a suite passes
when all of its checks do.
"""

from __future__ import annotations

import math
import random

from .core import IdentityCheck, binomial, check_identities, kraw_matrix
from .matrix import ExactMatrix
from .symtensor import (
    char_det_polynomial,
    enumerate_multi_indices,
    symmetric_representation,
    verify_symmetric_trace_theorem,
)
from .transforms import H1
from .walks import (
    DEFAULT_FULL_SPACE_CAP,
    F,
    G,
    check_intertwine_full,
    check_intertwine_reduced,
    chebyshev_series_check,
    chebyshev_u,
    diagonalize_reduced,
    elementary_symmetric,
    ground_state_mgf,
    martingale_check_exact,
    normalized_trace_mgf,
    reduced_generator_derivative,
    sinh_ratio,
    spectrum_reduced,
    symmetric_trace_mgf,
    x_f_reduced,
    x_g_reduced,
)

SUITES = ("identities", "intertwine", "martingale", "traces", "mgf")
Z_GRID = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)
MGF_RTOL = 1e-12
CHEBYSHEV_RTOL = 1e-10
ENUMERATION_CAP = 16


def suite_identities(max_n: int, **_) -> list[IdentityCheck]:
    return check_identities(max_n).checks


def suite_intertwine(max_n: int, full_cap: int = DEFAULT_FULL_SPACE_CAP, **_) -> list[IdentityCheck]:
    full = IdentityCheck("X_F H_N = H_N X_G (full space, basis sweep)")
    reduced = IdentityCheck("Xbar_F K^T = K^T Xbar_G")
    diagonal = IdentityCheck("K^T Xbar_F K^T / 2^N = Xbar_G")
    eigvec = IdentityCheck("rows of K are eigenvectors of Xbar_F")
    spectrum = IdentityCheck("spectrum of Xbar_F is N, N-2, ..., -N")
    generator = IdentityCheck("Xbar_F, Xbar_G from d/dt of (I + tF), (I + tG)")
    for N in range(1, max_n + 1):
        if N <= full_cap:
            full.record_defect(0 if check_intertwine_full(N, cap=full_cap) else 1, N=N)
        reduced.record_defect(0 if check_intertwine_reduced(N) else 1, N=N)
        diagonal.record_defect(0 if diagonalize_reduced(N) == x_g_reduced(N) else 1, N=N)
        K, XF = kraw_matrix(N), x_f_reduced(N)
        for i in range(N + 1):
            row = list(K.row(i))
            lhs = XF.matvec(row)
            rhs = [(N - 2 * i) * x for x in row]
            eigvec.record_defect(max(abs(a - b) for a, b in zip(lhs, rhs)), N=N, row=i)
        spectrum.record_defect(0 if spectrum_reduced(N) == [N - 2 * k for k in range(N + 1)] else 1, N=N)
        ok = reduced_generator_derivative(F, N) == XF and reduced_generator_derivative(G, N) == x_g_reduced(N)
        generator.record_defect(0 if ok else 1, N=N)
    return [full, reduced, diagonal, eigvec, spectrum, generator]


def suite_martingale(max_n: int, **_) -> list[IdentityCheck]:
    exact = IdentityCheck("martingale: one-step identity and path enumeration")
    column = IdentityCheck("elementary symmetric functions = K columns")
    for N in range(min(max_n, ENUMERATION_CAP) + 1):
        report = martingale_check_exact(N)
        exact.instances += report.instances
        exact.max_defect = max(exact.max_defect, report.max_defect)
        if not report.passed and exact.counterexample is None:
            exact.counterexample = dict(report.counterexample, N=N)
    for N in range(min(max_n, ENUMERATION_CAP) + 1):
        K = kraw_matrix(N)
        for bits in range(1 << N):
            signs = [-1 if (bits >> b) & 1 else 1 for b in range(N)]
            j = signs.count(-1)
            alpha = elementary_symmetric(signs)
            column.record_defect(
                max(abs(a - b) for a, b in zip(alpha, K.col(j))), N=N, signs=signs, j=j
            )
    return [exact, column]


def suite_traces(max_n: int, seed: int = 0, samples: int = 20, **_) -> list[IdentityCheck]:
    prop2 = IdentityCheck("symmetric representation of H = K^T")
    dims = IdentityCheck("dim of degree-N symmetric space = C(N+d-1, d-1)")
    theorem = IdentityCheck("1/det(I - tA) = sum t^N tr_Sym^N A")
    homo = IdentityCheck("(AB)bar = Abar Bbar")
    dets = IdentityCheck("det(I - tA): fraction-free = cofactor")
    for N in range(max_n + 1):
        prop2.record_defect(0 if symmetric_representation(H1, N) == kraw_matrix(N).T else 1, N=N)
        for d in (1, 2, 3):
            dims.record(len(enumerate_multi_indices(d, N)), binomial(N + d - 1, d - 1), N=N, d=d)

    rng = random.Random(seed)
    theorem_order = min(max_n, 6)
    homo_degree = min(max_n, 4)
    for trial in range(samples):
        d = rng.randint(1, 3)
        A = ExactMatrix.from_rows([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)])
        B = ExactMatrix.from_rows([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)])
        result = verify_symmetric_trace_theorem(A, theorem_order)
        where = dict(trial=trial, A=A.to_rows())
        if result.mismatch:
            where.update(N=result.mismatch[0], expected=result.mismatch[1], got=result.mismatch[2])
        theorem.record_defect(0 if result.passed else 1, **where)
        dets.record_defect(0 if char_det_polynomial(A) == char_det_polynomial(A, "cofactor") else 1,
                          trial=trial, A=A.to_rows())
        for N in range(homo_degree + 1):
            lhs = symmetric_representation(A @ B, N)
            rhs = symmetric_representation(A, N) @ symmetric_representation(B, N)
            homo.record_defect(0 if lhs == rhs else 1, trial=trial, N=N, A=A.to_rows(), B=B.to_rows())
    theorem.record_defect(0 if verify_symmetric_trace_theorem(H1, max_n).passed else 1, A="H")
    return [prop2, dims, theorem, homo, dets]


def _rel(got: float, expected: float) -> float:
    return abs(got - expected) / abs(expected)


def suite_mgf(max_n: int, zs=Z_GRID, **_) -> list[IdentityCheck]:
    ground = IdentityCheck("ground-state MGF = cosh(z)^N", tolerance=MGF_RTOL)
    trace = IdentityCheck("normalized trace MGF = cosh(z)^N", tolerance=MGF_RTOL)
    cheb = IdentityCheck("normalized symmetric trace = U_N(cosh z)/(N+1)", tolerance=MGF_RTOL)
    sinh = IdentityCheck("normalized symmetric trace = sinh((N+1)z)/((N+1) sinh z)", tolerance=MGF_RTOL)
    series = IdentityCheck("1/det(I - t exp(zF)) coefficients = U_N(cosh z)", tolerance=CHEBYSHEV_RTOL)
    for N in range(1, max_n + 1):
        for z in zs:
            closed = math.cosh(z) ** N
            g = ground_state_mgf(z, N)
            ground.record_defect(_rel(g, closed), N=N, z=z, expected=closed, got=g)
            t = normalized_trace_mgf(z, N)
            trace.record_defect(_rel(t, closed), N=N, z=z, expected=closed, got=t)
            s = symmetric_trace_mgf(z, N)
            u = chebyshev_u(N, math.cosh(z)) / (N + 1)
            cheb.record_defect(_rel(s, u), N=N, z=z, expected=u, got=s)
            r = sinh_ratio(z, N)
            sinh.record_defect(_rel(s, r), N=N, z=z, expected=r, got=s)
    result = chebyshev_series_check(max_n, zs, rtol=CHEBYSHEV_RTOL)
    series.instances += len(zs) * (max_n + 1)
    series.max_defect = result.max_rel_error
    if not result.passed:
        series.counterexample = dict(z=result.worst[0], N=result.worst[1], rel_error=result.max_rel_error)
    return [ground, trace, cheb, sinh, series]


RUNNERS = {
    "identities": suite_identities,
    "intertwine": suite_intertwine,
    "martingale": suite_martingale,
    "traces": suite_traces,
    "mgf": suite_mgf,
}


def run_suite(name: str, max_n: int, **options) -> dict[str, list[IdentityCheck]]:
    """Run one suite (or ``"all"``) and return its checks keyed by suite name."""
    names = SUITES if name == "all" else (name,)
    unknown = [n for n in names if n not in RUNNERS]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}")
    return {n: RUNNERS[n](max_n, **options) for n in names}
