"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
Payloads go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from fractions import Fraction

from . import io
from .core import DEFAULT_MAX_ORDER, binomial_diagonal, kraw_matrix, sym_kraw_matrix
from .symtensor import symmetric_representation
from .transforms import DEFAULT_HADAMARD_CAP, CeilingExceeded, fwht, hadamard_matrix, kraw_inverse, kraw_transform
from .verify import SUITES, Z_GRID, run_suite
from .walks import (
    DEFAULT_FULL_SPACE_CAP,
    chebyshev_u,
    ground_state_mgf,
    martingale_check_exact,
    monte_carlo_martingale,
    normalized_trace_mgf,
    path_conditional_means,
    sinh_ratio,
    symmetric_trace_mgf,
    x_f_reduced,
    x_g_reduced,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ENV_CAPS = {
    "max_order": ("KRAWTCHOUK_MAX_ORDER", DEFAULT_MAX_ORDER),
    "hadamard_cap": ("KRAWTCHOUK_HADAMARD_CAP", DEFAULT_HADAMARD_CAP),
    "full_cap": ("KRAWTCHOUK_FULL_CAP", DEFAULT_FULL_SPACE_CAP),
}


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _check_order(N: int, args) -> None:
    if N < 0:
        raise UsageError(f"N must be >= 0, got {N}")
    if N > args.max_order:
        raise UsageError(f"N={N} exceeds the Krawtchouk order cap of {args.max_order} (raise it with --max-order)")


def _emit(args, doc: dict, csv_text: str, pretty_text: str, started: float) -> None:
    if args.timing:
        doc["metadata"]["elapsed_s"] = io.format_number(time.perf_counter() - started)
    if args.format == "json":
        sys.stdout.write(io.dumps(doc))
    elif args.format == "csv":
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write(pretty_text)


def _emit_matrix(args, M, started, **meta) -> None:
    doc = io.document("matrix", io.matrix_payload(M), **meta)
    _emit(args, doc, io.matrix_csv(M), io.matrix_pretty(M), started)


def _emit_vector(args, v, started, **meta) -> None:
    doc = io.document("vector", io.vector_payload(v), **meta)
    _emit(args, doc, io.vector_lines(v), io.vector_pretty(v), started)


# ---------------------------------------------------------------------------
# commands


GEN_KINDS = ("kraw", "sym-kraw", "hadamard", "binom-diag", "xf", "xg")


def cmd_gen(args) -> int:
    started = time.perf_counter()
    N = args.N
    if args.kind == "hadamard":
        if N < 1:
            raise UsageError("hadamard needs N >= 1")
        if N > args.hadamard_cap:
            raise UsageError(
                f"dense Hadamard power {N} exceeds the cap of {args.hadamard_cap} (raise it with --hadamard-cap)"
            )
        M = hadamard_matrix(N, cap=args.hadamard_cap)
    else:
        _check_order(N, args)
        if args.kind in ("xf", "xg") and N < 1:
            raise UsageError(f"{args.kind} needs N >= 1")
        build = {
            "kraw": kraw_matrix,
            "sym-kraw": sym_kraw_matrix,
            "binom-diag": binomial_diagonal,
            "xf": x_f_reduced,
            "xg": x_g_reduced,
        }[args.kind]
        M = build(N)
    _emit_matrix(args, M, started, N=N, method=args.kind)
    return EXIT_OK


def cmd_transform(args) -> int:
    started = time.perf_counter()
    v = io.read_vector(args.input)
    N = args.N
    if args.kind == "wht":
        if N < 0:
            raise UsageError("wht power must be >= 0")
        if len(v) != 1 << N:
            raise UsageError(f"wht of power {N} needs {1 << N} entries, got {len(v)}")
        if any(not isinstance(x, int) for x in v):
            raise UsageError("wht needs integer entries")
        out = fwht(v)
    else:
        _check_order(N, args)
        if len(v) != N + 1:
            raise UsageError(f"{args.kind} of order {N} needs {N + 1} entries, got {len(v)}")
        if args.kind == "kraw":
            out = kraw_transform(v, N)
        else:
            out = [q.numerator if q.denominator == 1 else q for q in kraw_inverse(v, N)]
    _emit_vector(args, out, started, N=N, method=args.kind)
    return EXIT_OK


def cmd_reduce(args) -> int:
    started = time.perf_counter()
    A = io.read_matrix(args.matrix)
    if not A.is_square:
        raise UsageError(f"reduce needs a square matrix, got {A.rows}x{A.cols}")
    if args.N < 0:
        raise UsageError("degree must be >= 0")
    M = symmetric_representation(A, args.N)
    _emit_matrix(args, M, started, N=args.N, method="symmetric-representation", d=A.rows)
    return EXIT_OK


def _check_row(check) -> dict:
    return {
        "name": check.name,
        "passed": check.passed,
        "instances": check.instances,
        "max_defect": io.format_number(check.max_defect),
        "tolerance": io.format_number(check.tolerance),
        "counterexample": io.jsonable(check.counterexample),
    }


def cmd_verify(args) -> int:
    started = time.perf_counter()
    _check_order(args.max_N, args)
    results = run_suite(args.suite, args.max_N, full_cap=args.full_cap, seed=args.seed)
    suites = {name: [_check_row(c) for c in checks] for name, checks in results.items()}
    passed = all(c.passed for checks in results.values() for c in checks)
    payload = {"suite": args.suite, "max_N": args.max_N, "passed": passed, "suites": suites}
    doc = io.document("report", payload, N=args.max_N, method=f"verify-{args.suite}")

    lines = []
    csv_lines = ["suite,check,passed,instances,max_defect\n"]
    for name, rows in suites.items():
        for r in rows:
            mark = "PASS" if r["passed"] else "FAIL"
            lines.append(f"{mark}  {name:<10}  {r['name']}  (instances={r['instances']}, "
                         f"max defect={r['max_defect']})\n")
            csv_lines.append(f"{name},\"{r['name']}\",{str(r['passed']).lower()},{r['instances']},"
                             f"{r['max_defect']}\n")
    lines.append(("all checks passed" if passed else "VERIFICATION FAILED") + "\n")
    _emit(args, doc, "".join(csv_lines), "".join(lines), started)

    if not passed:
        for name, checks in results.items():
            for c in checks:
                if not c.passed:
                    sys.stderr.write(f"first counterexample [{name}: {c.name}]: "
                                     f"{io.jsonable(c.counterexample)}\n")
                    return EXIT_FAIL
    return EXIT_OK


def _parse_z_grid(text: str | None) -> list[float]:
    if text is None:
        return list(Z_GRID)
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--z must be a comma-separated list of numbers, got {text!r}") from None


def cmd_walk(args) -> int:
    started = time.perf_counter()
    N = args.N
    _check_order(N, args)
    if args.mode == "classical-exact":
        if N > args.full_cap:
            raise UsageError(f"path enumeration for N={N} exceeds the cap of {args.full_cap} (raise it with --full-cap)")
        K = kraw_matrix(N)
        K1 = kraw_matrix(N + 1)
        means = path_conditional_means(N)
        rows = []
        for i in range(N + 1):
            for j in range(N + 1):
                one_step = Fraction(K1[i, j] + K1[i, j + 1], 2)
                rows.append({
                    "i": i, "j": j, "K": K[i, j],
                    "one_step_expectation": one_step,
                    "path_average": means[j][i],
                    "defect": max(abs(one_step - K[i, j]), abs(means[j][i] - K[i, j])),
                })
        report = martingale_check_exact(N)
        payload = {"rows": io.jsonable(rows), "max_defect": io.format_number(report.max_defect),
                   "passed": report.passed}
        doc = io.document("report", payload, N=N, method=args.mode)
        header = ["i", "j", "K", "one_step_expectation", "path_average", "defect"]
        csv_text = ",".join(header) + "\n" + "".join(
            ",".join(io.format_number(r[h]) for h in header) + "\n" for r in rows
        )
        pretty = "".join(f"{h:>22}" for h in header) + "\n" + "".join(
            "".join(f"{io.format_number(r[h]):>22}" for h in header) + "\n" for r in rows
        ) + f"max defect: {io.format_number(report.max_defect)}\n"
        _emit(args, doc, csv_text, pretty, started)
        return EXIT_OK

    if args.mode == "classical-mc":
        missing = [flag for flag, val in (("--i", args.i), ("--trials", args.trials), ("--seed", args.seed))
                   if val is None]
        if missing:
            raise UsageError(f"classical-mc requires {', '.join(missing)}")
        if not 0 <= args.i <= N:
            raise UsageError(f"--i must lie in 0..{N}")
        if args.trials < 1:
            raise UsageError("--trials must be >= 1")
        res = monte_carlo_martingale(N, args.i, args.trials, args.seed, workers=args.workers)
        within = abs(res.mean - (1.0 if args.i == 0 else 0.0)) <= 3 * res.stderr
        payload = {"mean": io.format_number(res.mean), "stderr": io.format_number(res.stderr),
                   "trials": res.trials, "expected": "1" if args.i == 0 else "0",
                   "within_3_sigma": within}
        doc = io.document("report", payload, N=N, method=args.mode, i=args.i, seed=args.seed)
        csv_text = "mean,stderr,trials\n" + f"{payload['mean']},{payload['stderr']},{res.trials}\n"
        pretty = (f"N={N} i={args.i} trials={res.trials} seed={args.seed}\n"
                  f"mean   = {payload['mean']}\nstderr = {payload['stderr']}\n"
                  f"within 3 standard errors of {payload['expected']}: {within}\n")
        _emit(args, doc, csv_text, pretty, started)
        return EXIT_OK

    # quantum
    if N < 1:
        raise UsageError("quantum mode needs N >= 1")
    zs = _parse_z_grid(args.z)
    samples = []
    for z in zs:
        closed = math.cosh(z) ** N
        g, t, s = ground_state_mgf(z, N), normalized_trace_mgf(z, N), symmetric_trace_mgf(z, N)
        u = chebyshev_u(N, math.cosh(z)) / (N + 1)
        r = sinh_ratio(z, N)
        samples.append({
            "z": z,
            "ground_state": g, "ground_state_closed": closed, "ground_state_delta": g - closed,
            "normalized_trace": t, "normalized_trace_closed": closed, "normalized_trace_delta": t - closed,
            "symmetric_trace": s, "chebyshev_form": u, "sinh_form": r,
            "symmetric_trace_delta_chebyshev": s - u, "symmetric_trace_delta_sinh": s - r,
        })
    header = list(samples[0]) if samples else ["z"]
    doc = io.document("report", {"samples": io.jsonable(samples)}, N=N, method=args.mode)
    csv_text = ",".join(header) + "\n" + "".join(
        ",".join(io.format_number(smp[h]) for h in header) + "\n" for smp in samples
    )
    short = ["z", "ground_state", "normalized_trace", "symmetric_trace", "chebyshev_form", "sinh_form"]
    pretty = "".join(f"{h:>24}" for h in short) + "\n" + "".join(
        "".join(f"{io.format_number(smp[h]):>24}" for h in short) + "\n" for smp in samples
    )
    _emit(args, doc, csv_text, pretty, started)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default=None,
                        help="output format (default json; pretty for verify)")
    common.add_argument("--timing", action="store_true", help="add elapsed time to the metadata")
    common.add_argument("--max-order", type=int, default=None,
                        help=f"Krawtchouk order cap (default {DEFAULT_MAX_ORDER}, env KRAWTCHOUK_MAX_ORDER)")
    common.add_argument("--hadamard-cap", type=int, default=None,
                        help=f"dense Hadamard power cap (default {DEFAULT_HADAMARD_CAP}, "
                             "env KRAWTCHOUK_HADAMARD_CAP)")
    common.add_argument("--full-cap", type=int, default=None,
                        help=f"full tensor-space order cap (default {DEFAULT_FULL_SPACE_CAP}, "
                             "env KRAWTCHOUK_FULL_CAP)")

    parser = argparse.ArgumentParser(prog="krawtchouk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit a matrix")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", parents=[common], help="transform a vector file")
    p.add_argument("kind", choices=("kraw", "wht", "kraw-inv"))
    p.add_argument("N", type=int)
    p.add_argument("input", help="vector file, one entry per line, or '-' for stdin")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("reduce", parents=[common], help="symmetric representation of a matrix")
    p.add_argument("matrix", help="CSV or JSON matrix file, or '-' for stdin")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-N", dest="max_N", type=int, default=12)
    p.add_argument("--seed", type=int, default=0, help="seed for randomly drawn test matrices")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("walk", parents=[common], help="classical and quantum walk experiments")
    p.add_argument("mode", choices=("classical-exact", "classical-mc", "quantum"))
    p.add_argument("N", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--z", help="comma-separated z values (default -2,-1,-0.5,0,0.5,1,2)")
    p.set_defaults(func=cmd_walk)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "pretty" if args.command == "verify" else "json"
    try:
        for attr, (env, default) in ENV_CAPS.items():
            if getattr(args, attr) is None:
                setattr(args, attr, _env_int(env, default))
        return args.func(args)
    except (UsageError, io.InputError, CeilingExceeded) as exc:
        sys.stderr.write(f"krawtchouk: error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"krawtchouk: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
