"""Pure-Python kernels: fallback for the compiled extension.

Same contracts as ``_core``; plain loops, no attempt at vectorization.  The
compiled module also provides family-specific outcome-table fills, which the
pure path covers generically in ``rules.build_table``.
"""

from __future__ import annotations

import numpy as np


def option_masks(table: np.ndarray, n: int, m: int) -> np.ndarray:
    """opt[i, t, x] = 1 iff outcome x is reachable when agent i's top is t.

    ``table`` holds the rule outcome for every top vector, indexed
    lexicographically with agent 0 most significant.
    """
    opt = np.zeros((n, m, m), dtype=np.uint8)
    digits = [0] * n
    for idx in range(table.shape[0]):
        y = int(table[idx])
        for i in range(n):
            opt[i, digits[i], y] = 1
        for i in range(n - 1, -1, -1):  # odometer
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
    return opt


def pair_reach(table: np.ndarray, n: int, m: int) -> np.ndarray:
    """pair[i, t, td, y, yd] = 1 iff some subprofile of the other agents gives
    outcome y when agent i reports top t and outcome yd when i reports td."""
    pair = np.zeros((n, m, m, m, m), dtype=np.uint8)
    strides = [m ** (n - 1 - i) for i in range(n)]
    digits = [0] * n
    for idx in range(table.shape[0]):
        y = int(table[idx])
        for i in range(n):
            t = digits[i]
            base = idx - t * strides[i]
            for td in range(m):
                pair[i, t, td, y, int(table[base + td * strides[i]])] = 1
        for i in range(n - 1, -1, -1):
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
    return pair


def scan_obvious(
    opt: np.ndarray,
    pair: np.ndarray,
    tops: np.ndarray,
    ranks: np.ndarray,
    cap: int,
) -> tuple[np.ndarray, list[tuple[int, int, int, int]]]:
    """Scan every (agent, true preference, deviation top) triple for obvious
    manipulations.

    ``tops[p]``/``ranks[p, x]`` describe preference p (all m! of them, in
    lexicographic order).  Returns exact per-(agent, kind) counts and witness
    tuples ``(agent, pref_index, deviation_top, kind)`` with kind 0 = worst-case,
    1 = best-case; at most ``cap`` witnesses are kept per (agent, kind)
    (cap < 0 keeps all).
    """
    n, m = opt.shape[0], opt.shape[1]
    num_prefs = tops.shape[0]
    counts = np.zeros((n, 2), dtype=np.int64)
    witnesses: list[tuple[int, int, int, int]] = []
    for i in range(n):
        for p in range(num_prefs):
            t = int(tops[p])
            rk = ranks[p]
            for td in range(m):
                if td == t:
                    continue
                profitable = False
                for y in range(m):
                    for yd in range(m):
                        if pair[i, t, td, y, yd] and rk[yd] < rk[y]:
                            profitable = True
                            break
                    if profitable:
                        break
                if not profitable:
                    continue
                wt = wd = bt = bd = -1
                for x in range(m):
                    if opt[i, t, x]:
                        if wt < 0 or rk[x] > rk[wt]:
                            wt = x
                        if bt < 0 or rk[x] < rk[bt]:
                            bt = x
                    if opt[i, td, x]:
                        if wd < 0 or rk[x] > rk[wd]:
                            wd = x
                        if bd < 0 or rk[x] < rk[bd]:
                            bd = x
                if rk[wd] < rk[wt]:
                    counts[i, 0] += 1
                    if cap < 0 or counts[i, 0] <= cap:
                        witnesses.append((i, p, td, 0))
                if rk[bd] < rk[bt]:
                    counts[i, 1] += 1
                    if cap < 0 or counts[i, 1] <= cap:
                        witnesses.append((i, p, td, 1))
    return counts, witnesses
