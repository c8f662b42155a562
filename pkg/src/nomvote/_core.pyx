# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot brute-force loops.

Mirrors the contracts of ``_purepy`` and adds family-specific outcome-table
fills.  Tables are int32 arrays indexed lexicographically by top vector with
agent 0 most significant.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def fill_median_table(int n, int m, const cnp.int32_t[::1] alpha):
    """Outcome table of the fixed-ballot median rule (n tops + n-1 ballots)."""
    cdef Py_ssize_t size = m ** n
    out = np.empty(size, dtype=np.int32)
    cdef cnp.int32_t[::1] ov = out
    cdef cnp.int64_t[::1] digits = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] base_cnt = np.zeros(m, dtype=np.int64)
    cdef cnp.int64_t[::1] cnt = np.zeros(m, dtype=np.int64)
    cdef Py_ssize_t idx
    cdef int i, x
    cdef long acc
    for i in range(alpha.shape[0]):
        base_cnt[alpha[i]] += 1
    for idx in range(size):
        for x in range(m):
            cnt[x] = base_cnt[x]
        for i in range(n):
            cnt[digits[i]] += 1
        acc = 0
        for x in range(m):
            acc += cnt[x]
            if acc >= n:  # n-th smallest of the 2n-1 values
                ov[idx] = x
                break
        for i in range(n - 1, -1, -1):
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
    return out


def fill_gmv_table(int n, int m, const cnp.int32_t[::1] ballots):
    """Outcome table of a min-max rule over a monotone family of fixed ballots.

    ``ballots`` is indexed by agent-subset bitmask (bit i = agent i).  Uses the
    sweep form: the outcome is the smallest x whose ballot, for the coalition
    of agents with top <= x, is also <= x.  Equivalent to the min-max formula
    by ballot monotonicity.
    """
    cdef Py_ssize_t size = m ** n
    out = np.full(size, m - 1, dtype=np.int32)  # defensive: a monotone family always binds by m-1
    cdef cnp.int32_t[::1] ov = out
    cdef cnp.int64_t[::1] digits = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t idx
    cdef int i, x
    cdef unsigned long mask
    for idx in range(size):
        mask = 0
        for x in range(m):
            for i in range(n):
                if digits[i] == x:
                    mask |= 1UL << i
            if ballots[mask] <= x:
                ov[idx] = x
                break
        for i in range(n - 1, -1, -1):
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
    return out


def fill_committee_table(int n, int num_objects, const cnp.int32_t[::1] offsets,
                         const cnp.int32_t[::1] coalitions):
    """Outcome table of object-by-object voting with per-object winning coalitions.

    Object k's minimal winning coalitions are the agent bitmasks in
    ``coalitions[offsets[k]:offsets[k+1]]``; alternatives are subsets of
    objects indexed by characteristic number (m = 2**num_objects).
    """
    cdef int m = 1 << num_objects
    cdef Py_ssize_t size = m ** n
    out = np.empty(size, dtype=np.int32)
    cdef cnp.int32_t[::1] ov = out
    cdef cnp.int64_t[::1] digits = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t idx
    cdef int i, k, chosen, mc
    cdef long j
    cdef unsigned long support
    for idx in range(size):
        chosen = 0
        for k in range(num_objects):
            support = 0
            for i in range(n):
                if digits[i] >> k & 1:
                    support |= 1UL << i
            for j in range(offsets[k], offsets[k + 1]):
                mc = coalitions[j]
                if (mc & support) == <int> mc:
                    chosen |= 1 << k
                    break
        ov[idx] = chosen
        for i in range(n - 1, -1, -1):
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
    return out


def fill_quota_table(int n, int num_objects, const cnp.int32_t[::1] quota):
    """Outcome table of per-object quota voting (object k chosen iff at least
    quota[k] agents have it in their top subset)."""
    cdef int m = 1 << num_objects
    cdef Py_ssize_t size = m ** n
    out = np.empty(size, dtype=np.int32)
    cdef cnp.int32_t[::1] ov = out
    cdef cnp.int64_t[::1] digits = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t idx
    cdef int i, k, chosen, cnt
    for idx in range(size):
        chosen = 0
        for k in range(num_objects):
            cnt = 0
            for i in range(n):
                if digits[i] >> k & 1:
                    cnt += 1
            if cnt >= quota[k]:
                chosen |= 1 << k
        ov[idx] = chosen
        for i in range(n - 1, -1, -1):
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
    return out


def option_masks(const cnp.int32_t[::1] table, int n, int m):
    """opt[i, t, x] = 1 iff outcome x is reachable when agent i's top is t."""
    opt = np.zeros((n, m, m), dtype=np.uint8)
    cdef cnp.uint8_t[:, :, ::1] opt_v = opt
    cdef cnp.int64_t[::1] digits = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t idx
    cdef int i, y
    for idx in range(table.shape[0]):
        y = table[idx]
        for i in range(n):
            opt_v[i, digits[i], y] = 1
        for i in range(n - 1, -1, -1):
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
    return opt


def pair_reach(const cnp.int32_t[::1] table, int n, int m):
    """pair[i, t, td, y, yd] = 1 iff some subprofile of the other agents gives
    outcome y for agent i's top t and outcome yd for top td."""
    pair = np.zeros((n, m, m, m, m), dtype=np.uint8)
    cdef cnp.uint8_t[:, :, :, :, ::1] pv = pair
    cdef cnp.int64_t[::1] strides = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] digits = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t idx, base
    cdef int i, t, td, y
    for i in range(n):
        strides[i] = m ** (n - 1 - i)
    for idx in range(table.shape[0]):
        y = table[idx]
        for i in range(n):
            t = <int> digits[i]
            base = idx - t * strides[i]
            for td in range(m):
                pv[i, t, td, y, table[base + td * strides[i]]] = 1
        for i in range(n - 1, -1, -1):
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
    return pair


def scan_obvious(const cnp.uint8_t[:, :, ::1] opt, const cnp.uint8_t[:, :, :, :, ::1] pair,
                 const cnp.int32_t[::1] tops, const cnp.int32_t[:, ::1] ranks, int cap):
    """Scan every (agent, true preference, deviation top) triple for obvious
    manipulations; see the pure-Python twin for the full contract."""
    cdef int n = opt.shape[0]
    cdef int m = opt.shape[1]
    cdef Py_ssize_t num_prefs = tops.shape[0]
    counts = np.zeros((n, 2), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] cv = counts
    witnesses = []
    cdef Py_ssize_t p
    cdef int i, t, td, x, y, yd, wt, wd, bt, bd, profitable
    for i in range(n):
        for p in range(num_prefs):
            t = tops[p]
            for td in range(m):
                if td == t:
                    continue
                profitable = 0
                for y in range(m):
                    for yd in range(m):
                        if pair[i, t, td, y, yd] and ranks[p, yd] < ranks[p, y]:
                            profitable = 1
                            break
                    if profitable:
                        break
                if not profitable:
                    continue
                wt = wd = bt = bd = -1
                for x in range(m):
                    if opt[i, t, x]:
                        if wt < 0 or ranks[p, x] > ranks[p, wt]:
                            wt = x
                        if bt < 0 or ranks[p, x] < ranks[p, bt]:
                            bt = x
                    if opt[i, td, x]:
                        if wd < 0 or ranks[p, x] > ranks[p, wd]:
                            wd = x
                        if bd < 0 or ranks[p, x] < ranks[p, bd]:
                            bd = x
                if ranks[p, wd] < ranks[p, wt]:
                    cv[i, 0] += 1
                    if cap < 0 or cv[i, 0] <= cap:
                        witnesses.append((i, <int> p, td, 0))
                if ranks[p, bd] < ranks[p, bt]:
                    cv[i, 1] += 1
                    if cap < 0 or cv[i, 1] <= cap:
                        witnesses.append((i, <int> p, td, 1))
    return counts, witnesses
