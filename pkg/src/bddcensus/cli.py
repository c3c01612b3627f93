"""Command-line front end.

Subcommands:

* ``dist``      -- size distribution for k variables (exact counts);
* ``count``     -- number of ROBDDs with a given profile;
* ``maxsize``   -- largest possible ROBDD size for k variables;
* ``validate``  -- cross-check engine against brute-force enumeration (k <= 4);
* ``plot-data`` -- plot-ready (size, log2 count) and (size, probability) points.

All data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 input error, 2 resource guard, 3 validation mismatch.  Counts are
emitted as exact decimal strings; only the log2/probability columns of
``plot-data`` are approximate (15 significant digits, by construction).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from decimal import Decimal, localcontext
from pathlib import Path

from .bigpoly import UPoly, mpz
from .linmap import build_phi_table
from .oracle import CENSUS_MAX_K, census
from .profilecount import count_robdds_with_profile, normalize_profile
from .sizegf import MemoLevel, _m_bound, distribution, iterate_levels, max_size

CACHE_MAGIC = "robdd-census-cache"
CACHE_VERSION = "v1"

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_RESOURCE_GUARD = 2
EXIT_VALIDATION_MISMATCH = 3


class _UsageError(Exception):
    pass


class _ResourceGuard(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _warn(message):
    print(f"warning: {message}", file=sys.stderr)


# ---------------------------------------------------------------------------
# Resource guard.


def estimate_memory_bytes(n):
    """Coarse upper estimate of resident memory for a size-bound-n run.

    Counts the banded layer-map table plus two memo levels, at the
    typical coefficient bit length that grows like n log n.
    """
    if n < 16:
        return 64 << 20
    coeff_bytes = max(16, int(n * math.log2(n) / 32))
    table_coeffs = 0
    for m in range(n + 2):
        b = min(m, n + 1 - m)
        table_coeffs += (b + 1) * (m + 1) + b * (b + 1) // 2
    memo_coeffs = (n + 2) * (n + 3)
    return int((table_coeffs + memo_coeffs) * coeff_bytes * 1.4)


def _check_budget(n, budget_gb):
    need = estimate_memory_bytes(n)
    budget = int(budget_gb * (1 << 30))
    if need > budget:
        raise _ResourceGuard(
            f"estimated memory for n={n} is {need / (1 << 30):.1f} GiB, "
            f"over the {budget_gb:g} GiB budget; rerun with a smaller -n "
            "or a larger --max-memory-gb"
        )


# ---------------------------------------------------------------------------
# Level cache.


def _cache_path(directory, level):
    return Path(directory) / f"level{level:04d}.txt"


def cache_store(level, directory, k):
    """Persist one memo level; the write is atomic (temp file + rename)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = _cache_path(directory, level.level)
    fd, tmp = tempfile.mkstemp(dir=str(directory), prefix=".level", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(
                f"{CACHE_MAGIC} {CACHE_VERSION} "
                f"k={k} n={level.cap} level={level.level}\n"
            )
            for m, poly in enumerate(level.polys):
                fh.write(f"{m}:")
                for c in poly.coeffs:
                    fh.write(f" {c}")
                fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def cache_load(directory, k, n, level):
    """Load one memo level, or None (with a warning) if unusable."""
    path = _cache_path(directory, level)
    if not path.exists():
        return None
    expected = [CACHE_MAGIC, CACHE_VERSION, f"k={k}", f"n={n}", f"level={level}"]
    try:
        with open(path) as fh:
            header = fh.readline().split()
            if header != expected:
                _warn(f"cache {path} does not match this run, ignoring")
                return None
            polys = []
            for line in fh:
                mstr, sep, rest = line.partition(":")
                if not sep or int(mstr) != len(polys):
                    raise ValueError("bad cache line")
                coeffs = [mpz(tok) for tok in rest.split()]
                if len(coeffs) > n + 1:
                    raise ValueError("cache line longer than the cap allows")
                polys.append(UPoly(coeffs, n))
    except (OSError, ValueError) as exc:
        _warn(f"cache {path} unreadable ({exc}), ignoring")
        return None
    if len(polys) < _m_bound(k, level, n) + 1:
        _warn(f"cache {path} incomplete, ignoring")
        return None
    return MemoLevel(level, n, tuple(polys))


def _dist_coeffs(k, n, threads, cache_dir):
    if cache_dir is None:
        return distribution(k, n, threads=threads)
    resume = None
    for level in range(k, 0, -1):
        resume = cache_load(cache_dir, k, n, level)
        if resume is not None:
            break
    skip = resume.level if resume is not None else -1
    last = None
    for lvl in iterate_levels(k, n, threads=threads, resume=resume):
        if lvl.level > skip:
            cache_store(lvl, cache_dir, k)
        last = lvl
    return last.polys[1]


# ---------------------------------------------------------------------------
# Formatting helpers.


def _log2_int(v):
    e = v.bit_length()
    if e <= 53:
        return math.log2(int(v))
    shift = e - 53
    return math.log2(int(v >> shift)) + shift


def _probability_str(count, k):
    with localcontext() as ctx:
        ctx.prec = 15
        q = Decimal(int(count)) / Decimal(2) ** (1 << k)
    return format(q, "e")


def _print_table(header, rows, fmt, json_obj):
    if fmt == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        print(header)
        for row in rows:
            print(row)


# ---------------------------------------------------------------------------
# Subcommands.


def _default_n(args):
    if args.n is not None:
        if args.n < 0:
            raise _UsageError("-n must be non-negative")
        return args.n
    return max_size(args.k) if args.k >= 1 else 0


def cmd_dist(args):
    n = _default_n(args)
    _check_budget(n, args.max_memory_gb)
    dist = _dist_coeffs(args.k, n, args.threads, args.cache_dir)
    values = [dist.coefficient(i) for i in range(n + 1)]
    _print_table(
        "size,count",
        (f"{i},{v}" for i, v in enumerate(values)),
        args.format,
        {"k": args.k, "n": n, "coefficients": [str(v) for v in values]},
    )
    return EXIT_OK


def cmd_count(args):
    try:
        widths = normalize_profile(int(tok) for tok in args.profile.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad --profile: {exc}")
    if args.k is not None and args.k != len(widths):
        raise _UsageError(f"-k {args.k} does not match profile length {len(widths)}")
    value = count_robdds_with_profile(widths)
    text = " ".join(str(w) for w in widths)
    _print_table(
        "profile,count",
        [f"\"{text}\",{value}"],
        args.format,
        {"profile": list(widths), "count": str(value)},
    )
    return EXIT_OK


def cmd_maxsize(args):
    if args.k < 1:
        raise _UsageError("maxsize requires -k >= 1")
    value = max_size(args.k)
    _print_table(
        "k,max_size",
        [f"{args.k},{value}"],
        args.format,
        {"k": args.k, "max_size": value},
    )
    return EXIT_OK


def cmd_plot_data(args):
    n = _default_n(args)
    _check_budget(n, args.max_memory_gb)
    dist = _dist_coeffs(args.k, n, args.threads, args.cache_dir)
    points = []
    for i in range(n + 1):
        v = dist.coefficient(i)
        if not v:
            continue
        points.append((i, _log2_int(v), _probability_str(v, args.k)))
    _print_table(
        "size,log2_count,probability",
        (f"{i},{lg:.15g},{prob}" for i, lg, prob in points),
        args.format,
        {
            "k": args.k,
            "n": n,
            "points": [
                {"size": i, "log2_count": float(f"{lg:.15g}"), "probability": prob}
                for i, lg, prob in points
            ],
        },
    )
    return EXIT_OK


def cmd_validate(args):
    k = args.k
    if not 1 <= k <= CENSUS_MAX_K:
        print(
            f"error: validate enumerates all 2^2^k functions and is "
            f"refused for k > {CENSUS_MAX_K} (got k={k})",
            file=sys.stderr,
        )
        return EXIT_INPUT_ERROR
    ground = census(k)
    n = max_size(k)
    dist = distribution(k, n)

    engine_sizes = {i: int(dist.coefficient(i)) for i in range(n + 1) if dist.coefficient(i)}
    for key in sorted(set(ground.by_size) | set(engine_sizes)):
        got, want = engine_sizes.get(key, 0), ground.by_size.get(key, 0)
        if got != want:
            print(f"MISMATCH size={key}: engine {got}, enumeration {want}")
            return EXIT_VALIDATION_MISMATCH
    print(f"size histogram: {len(engine_sizes)} sizes match")

    table = build_phi_table(n + 1, shape="full")
    for profile in sorted(ground.by_profile):
        got = int(count_robdds_with_profile(profile, table))
        want = ground.by_profile[profile]
        if got != want:
            print(f"MISMATCH profile={list(profile)}: engine {got}, enumeration {want}")
            return EXIT_VALIDATION_MISMATCH
    print(f"profile histogram: {len(ground.by_profile)} profiles match")
    print(f"validate k={k}: PASS ({1 << (1 << k)} functions)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser.


def _add_common(sub, *, k_required=True, heavy=False):
    sub.add_argument("-k", "--k", type=int, required=k_required, default=None,
                     help="number of Boolean variables")
    sub.add_argument("--format", choices=("json", "csv"), default="csv",
                     help="output format (default: csv)")
    if heavy:
        sub.add_argument("-n", "--n", type=int, default=None,
                         help="size bound (default: the maximal ROBDD size)")
        sub.add_argument("--threads", type=int,
                         default=max(1, os.cpu_count() or 1),
                         help="worker count (default: available parallelism)")
        sub.add_argument("--cache-dir", type=Path, default=None,
                         help="directory for persistent per-level cache files")
        sub.add_argument("--max-memory-gb", type=float, default=16.0,
                         help="abort before allocating past this budget")


def _build_parser():
    parser = _Parser(prog="bddcensus",
                     description="Exact ROBDD size distribution of Boolean functions.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("dist", help="size distribution for k variables")
    _add_common(p, heavy=True)
    p.set_defaults(func=cmd_dist)

    p = subs.add_parser("count", help="count ROBDDs with a given profile")
    _add_common(p, k_required=False)
    p.add_argument("--profile", required=True,
                   help="comma-separated layer widths, e.g. 1,2,4,2")
    p.set_defaults(func=cmd_count)

    p = subs.add_parser("maxsize", help="maximal ROBDD size for k variables")
    _add_common(p)
    p.set_defaults(func=cmd_maxsize)

    p = subs.add_parser("validate",
                        help="cross-check against brute-force enumeration (k <= 4)")
    _add_common(p)
    p.set_defaults(func=cmd_validate)

    p = subs.add_parser("plot-data",
                        help="emit (size, log2 count) and probability points")
    _add_common(p, heavy=True)
    p.set_defaults(func=cmd_plot_data)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except _ResourceGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_GUARD
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
