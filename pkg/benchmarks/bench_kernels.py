"""Benchmark: compiled kernels vs the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--full]

``--full`` runs the large scan case (all 40320 preferences at m=8), which
takes minutes on the pure path.
"""

import argparse
import time

import numpy as np

from nomvote import _purepy, enumerate_preferences, linear_space, subsets_space
from nomvote._backend import compiled_available
from nomvote.rules import Median, Quota, _fill_generic

if compiled_available():
    from nomvote import _core
else:
    _core = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def row(label, compiled_s, pure_s):
    speedup = pure_s / compiled_s if compiled_s > 0 else float("inf")
    print(f"{label:<34} {compiled_s:>10.4f}s {pure_s:>10.4f}s {speedup:>8.1f}x")


def scan_inputs(n, m, table):
    prefs = enumerate_preferences(linear_space(m))
    perms = np.array([p.ranking for p in prefs], dtype=np.int32)
    ranks = np.argsort(perms, axis=1).astype(np.int32)
    tops = np.ascontiguousarray(perms[:, 0])
    opt = _purepy.option_masks(table, n, m)
    pair = _purepy.pair_reach(table, n, m)
    return opt, pair, tops, ranks


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true", help="include the m=8 scan case")
    args = parser.parse_args()

    if _core is None:
        raise SystemExit("compiled kernels are not built; nothing to compare")

    print(f"{'kernel':<34} {'compiled':>11} {'pure':>11} {'speedup':>9}")

    # outcome-table fills
    median = Median(6, linear_space(8), (0, 2, 3, 5, 7))
    alpha = np.asarray(median.alpha, dtype=np.int32)
    c, table = timed(_core.fill_median_table, 6, 8, alpha)
    p, _ = timed(_fill_generic, median, repeat=1)
    row(f"median fill (m**n={8 ** 6})", c, p)

    quota = Quota(7, subsets_space(3), (2, 4, 6))
    qarr = np.asarray(quota.quota, dtype=np.int32)
    c, qtable = timed(_core.fill_quota_table, 7, 3, qarr)
    p, _ = timed(_fill_generic, quota, repeat=1)
    row(f"quota fill (m**n={8 ** 7})", c, p)

    # mask kernels on the median table
    c, _ = timed(_core.option_masks, table, 6, 8)
    p, _ = timed(_purepy.option_masks, table, 6, 8, repeat=1)
    row("option masks", c, p)

    c, _ = timed(_core.pair_reach, table, 6, 8)
    p, _ = timed(_purepy.pair_reach, table, 6, 8, repeat=1)
    row("pair reachability", c, p)

    # obvious-manipulation scan at a size the pure path can still handle
    n, m = 4, 6
    small = _fill_generic(Median(n, linear_space(m), (0, 3, 5)))
    opt, pair, tops, ranks = scan_inputs(n, m, small)
    c, (counts_c, _) = timed(_core.scan_obvious, opt, pair, tops, ranks, -1)
    p, (counts_p, _) = timed(_purepy.scan_obvious, opt, pair, tops, ranks, -1, repeat=1)
    assert np.array_equal(counts_c, counts_p)
    row(f"obvious scan (m!={720}, n={n})", c, p)

    if args.full:
        n, m = 5, 8
        big = _fill_generic(Median(n, linear_space(m), (0, 2, 5, 7)))
        opt, pair, tops, ranks = scan_inputs(n, m, big)
        c, (counts_c, _) = timed(_core.scan_obvious, opt, pair, tops, ranks, -1, repeat=1)
        p, (counts_p, _) = timed(_purepy.scan_obvious, opt, pair, tops, ranks, -1, repeat=1)
        assert np.array_equal(counts_c, counts_p)
        row(f"obvious scan (m!={40320}, n={n})", c, p)


if __name__ == "__main__":
    main()
