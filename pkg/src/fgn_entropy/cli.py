"""Command-line interface: grid sweeps to CSV and the verification suite.

Subcommands: ``sweep-det``, ``sweep-entropy``, ``rate``, ``functionals``,
``verify``.  CSV output is byte-stable for identical arguments: floats are
written in shortest round-trip form, rows are ordered by (n, H), newlines
are Unix.  Exit codes: 0 success, 1 verification violations, 2 bad usage.
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .entropy import fgn_entropy
from .fgn import autocovariance_sequence
from .functionals import e1_asymptotic, functional_values, covariance_sums
from .rate import (
    RATE_AT_H0,
    RATE_AT_H1,
    entropy_rate_lower_bound,
    entropy_rate_spectral,
)
from .specfun import QuadratureSpec
from .toeplitz import prediction_errors
from .verify import run_verification


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write_csv(path, header, rows):
    out = sys.stdout if path in (None, "-") else open(path, "w", encoding="utf-8", newline="")
    try:
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _h_grid(args) -> list:
    """Lattice h_min, h_min + step, ... up to and including h_max, rounded
    for stable CSV output.  A degenerate span (h_min == h_max) sweeps
    nothing and yields a header-only file."""
    if not (0.0 <= args.h_min <= args.h_max <= 1.0):
        raise ValueError("need 0 <= h-min <= h-max <= 1")
    if not args.h_step > 0.0:
        raise ValueError("h-step must be positive")
    if args.h_min == args.h_max:
        return []
    values = []
    i = 0
    while True:
        v = round(args.h_min + i * args.h_step, 10)
        if v > args.h_max + 1e-12:
            return values
        values.append(min(v, args.h_max))
        i += 1


def _parse_n_list(text) -> list:
    ns = [int(part) for part in text.split(",") if part.strip()]
    if not ns or any(n < 1 for n in ns):
        raise ValueError("n-list must contain positive integers")
    return ns


def _pmap(fn, items, threads):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _cmd_sweep_det(args) -> int:
    grid = _h_grid(args)
    ns = list(range(1, args.n_max + 1))

    def per_h(H):
        if H == 1.0 and args.n_max >= 2:  # exactly singular beyond n = 1
            ld = np.full(args.n_max, -np.inf)
            ld[0] = 0.0
            return ld
        r = prediction_errors(autocovariance_sequence(H, args.n_max))
        return np.cumsum(np.log(r))

    log_dets = _pmap(per_h, grid, args.threads)
    rows = []
    for n in ns:
        for H, ld in zip(grid, log_dets):
            rows.append((H, n, np.exp(ld[n - 1]), ld[n - 1]))
    _write_csv(args.out, ["h", "n", "det", "log_det"], rows)
    return 0


def _cmd_sweep_entropy(args) -> int:
    grid = _h_grid(args)

    def per_h(H):
        return [fgn_entropy(H, n) for n in range(1, args.n_max + 1)]

    reports = _pmap(per_h, grid, args.threads)
    rows = []
    for n in range(1, args.n_max + 1):
        for H, rep in zip(grid, reports):
            r = rep[n - 1]
            rows.append((H, n, r.entropy, r.reduced_entropy, r.normalized_entropy))
    _write_csv(
        args.out,
        ["h", "n", "entropy", "reduced_entropy", "normalized_entropy"],
        rows,
    )
    return 0


def _cmd_rate(args) -> int:
    grid = _h_grid(args)
    ns = _parse_n_list(args.n_list)
    spec = QuadratureSpec(abs_tol=args.tol)

    def per_h(H):
        if H == 0.0:
            rate, bound = RATE_AT_H0, RATE_AT_H0
        elif H == 1.0:
            rate, bound = RATE_AT_H1, RATE_AT_H1
        else:
            rate = entropy_rate_spectral(H, spec)
            bound = entropy_rate_lower_bound(H)
        normalized = [fgn_entropy(H, n).normalized_entropy for n in ns]
        return (H, rate, bound, *normalized)

    rows = _pmap(per_h, grid, args.threads)
    header = ["h", "rate_spectral", "rate_lower_bound"]
    header += [f"normalized_entropy_n{n}" for n in ns]
    _write_csv(args.out, header, rows)
    return 0


def _cmd_functionals(args) -> int:
    grid = _h_grid(args)
    ns = _parse_n_list(args.n_list)

    def per_h(H):
        try:
            ref = e1_asymptotic(H)
            regime, constant = ref.regime, ref.constant
        except ValueError:
            regime, constant = "", None
        out = []
        for n in ns:
            if H == 1.0:
                f1, f2 = covariance_sums(H, n)
                out.append((H, n, f1, f2, None, None, regime, constant))
            else:
                rep = functional_values(H, n)
                out.append((H, n, rep.f1, rep.f2, rep.e1, rep.e2, regime, constant))
        return out

    blocks = _pmap(per_h, grid, args.threads)
    rows = []
    for j in range(len(ns)):
        for block in blocks:
            rows.append(block[j])
    _write_csv(
        args.out,
        ["h", "n", "f1", "f2", "e1", "e2", "regime", "constant"],
        rows,
    )
    return 0


def _cmd_verify(args) -> int:
    groups = run_verification(h_step=args.h_step, n_max=args.n_max, tol=args.tol)
    total = 0
    for name, violations in groups.items():
        status = "ok" if not violations else f"{len(violations)} violation(s)"
        print(f"{name}: {status}")
        for v in violations:
            print(f"  ({v.check}, {v.h:g}, {v.n}, {v.lhs!r}, {v.rhs!r})")
        total += len(violations)
    print(f"verify: {'PASS' if total == 0 else 'FAIL'} ({total} violation(s))")
    return 0 if total == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fgn-entropy",
        description="Entropy, entropy rate and determinants of fractional "
        "Gaussian noise across the Hurst range.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid(p, h_min=0.01, h_max=0.99, h_step=0.01):
        p.add_argument("--h-min", type=float, default=h_min)
        p.add_argument("--h-max", type=float, default=h_max)
        p.add_argument("--h-step", type=float, default=h_step)
        p.add_argument("--out", default="-", help="output CSV path (default stdout)")
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("sweep-det", help="det and log-det over an (H, n) grid")
    add_grid(p)
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=_cmd_sweep_det)

    p = sub.add_parser("sweep-entropy", help="block entropies over an (H, n) grid")
    add_grid(p)
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=_cmd_sweep_entropy)

    p = sub.add_parser("rate", help="entropy rate, lower bound, normalized entropies")
    add_grid(p)
    p.add_argument("--n-list", default="10,50,100", help="comma-separated block lengths")
    p.add_argument("--tol", type=float, default=1e-9, help="quadrature tolerance")
    p.set_defaults(func=_cmd_rate)

    p = sub.add_parser("functionals", help="alternative entropy functionals")
    add_grid(p)
    p.add_argument("--n-list", default="100", help="comma-separated term counts")
    p.set_defaults(func=_cmd_functionals)

    p = sub.add_parser("verify", help="run the cross-route verification suite")
    p.add_argument("--h-step", type=float, default=0.01)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument(
        "--tol",
        type=float,
        default=None,
        help="override every comparison slack (0 forces failure)",
    )
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
