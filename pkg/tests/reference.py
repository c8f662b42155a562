"""Slow definitional oracles used only by the tests.

Everything here works at the level of full preference profiles, with no
tops-only shortcuts, so it independently validates the engine's reduced
scans.  Feasible only at desk scale.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from nomvote.rules import Rule, evaluate


def all_rankings(m: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(m)))


@lru_cache(maxsize=64)
def _option_sets_def(rule: Rule) -> dict:
    """O(P_i) per (agent, ranking), scanning full preference subprofiles."""
    n, m = rule.n, rule.space.m
    rankings = all_rankings(m)
    out = {}
    for i in range(n):
        for pref in rankings:
            reachable = set()
            for sub in itertools.product(rankings, repeat=n - 1):
                profile = sub[:i] + (pref,) + sub[i:]
                reachable.add(evaluate(rule, tuple(p[0] for p in profile)))
            out[i, pref] = frozenset(reachable)
    return out


def option_set_def(rule: Rule, agent: int, pref: tuple[int, ...]) -> frozenset[int]:
    return _option_sets_def(rule)[agent, pref]


def profitable_def(rule: Rule, agent: int, pref: tuple[int, ...]) -> set[tuple[int, tuple[int, ...]]]:
    """All (misreport top, others' tops) pairs where some full-preference
    misreport profits, found by scanning full preference subprofiles."""
    n, m = rule.n, rule.space.m
    rankings = all_rankings(m)
    rank = {x: r for r, x in enumerate(pref)}
    found = set()
    for dev in rankings:
        if dev == pref:
            continue
        for sub in itertools.product(rankings, repeat=n - 1):
            tops_sub = tuple(p[0] for p in sub)
            truthful = evaluate(rule, tops_sub[:agent] + (pref[0],) + tops_sub[agent:])
            deviated = evaluate(rule, tops_sub[:agent] + (dev[0],) + tops_sub[agent:])
            if rank[deviated] < rank[truthful]:
                found.add((dev[0], tops_sub))
    return found


def obvious_manips_def(rule: Rule) -> set[tuple[int, tuple[int, ...], int, str]]:
    """All obvious manipulations, per the definition, projected to
    (agent, true ranking, misreport top, kind).

    A misreport is scanned as a full preference; since profitability and
    both conditions depend on it only through its top, the projection
    collapses same-top misreports.
    """
    n, m = rule.n, rule.space.m
    rankings = all_rankings(m)
    opts = _option_sets_def(rule)
    found = set()
    for i in range(n):
        for pref in rankings:
            rank = {x: r for r, x in enumerate(pref)}
            for dev in rankings:
                if dev == pref:
                    continue
                profitable = False
                for sub in itertools.product(rankings, repeat=n - 1):
                    tops_sub = tuple(p[0] for p in sub)
                    truthful = evaluate(rule, tops_sub[:i] + (pref[0],) + tops_sub[i:])
                    deviated = evaluate(rule, tops_sub[:i] + (dev[0],) + tops_sub[i:])
                    if rank[deviated] < rank[truthful]:
                        profitable = True
                        break
                if not profitable:
                    continue
                truth_opts = opts[i, pref]
                dev_opts = opts[i, dev]
                worst_truth = max(truth_opts, key=rank.__getitem__)
                worst_dev = max(dev_opts, key=rank.__getitem__)
                best_truth = min(truth_opts, key=rank.__getitem__)
                best_dev = min(dev_opts, key=rank.__getitem__)
                if rank[worst_dev] < rank[worst_truth]:
                    found.add((i, pref, dev[0], "worst_case"))
                if rank[best_dev] < rank[best_truth]:
                    found.add((i, pref, dev[0], "best_case"))
    return found


def is_single_peaked_def(ranking: tuple[int, ...]) -> bool:
    """Pairwise form of single-peakedness: between two alternatives on the
    same side of the top, the one nearer the top is preferred."""
    m = len(ranking)
    rank = {x: r for r, x in enumerate(ranking)}
    top = ranking[0]
    for x in range(m):
        for y in range(m):
            if (x < y < top or top < y < x) and not rank[y] < rank[x]:
                return False
    return True


def is_separable_def(ranking: tuple[int, ...], num_objects: int) -> bool:
    rank = {x: r for r, x in enumerate(ranking)}
    for s in range(len(ranking)):
        for k in range(num_objects):
            if s >> k & 1:
                continue
            if (rank[s | 1 << k] < rank[s]) != (rank[1 << k] < rank[0]):
                return False
    return True
