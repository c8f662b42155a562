"""Option sets, veto power, and obvious-manipulation analysis.

Brute-force routes enumerate top vectors (legitimate for tops-only rules:
an agent's option set depends on its report only through the report's top,
and every top vector is realized by some preference subprofile).  Closed
forms exist for the median families and for committee veto sets; they are
cross-validated against the brute force in the test suite.

An agent *vetoes* x when some report of that agent makes x unreachable; the
veto is *strong* when every report whose top differs from x makes x
unreachable.  A tops-only rule admits no obvious manipulation exactly when
every veto is strong.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import _backend
from .domain import (
    AlternativeSpace,
    Budget,
    Preference,
    default_budget,
    enumerate_preferences,
)
from .errors import (
    AssumptionViolatedError,
    DimensionMismatchError,
    UnsupportedFamilyError,
)
from .rules import (
    Committees,
    GeneralizedMedian,
    Median,
    Quota,
    Rule,
    _table_for,
    build_table,
    quota_to_committees,
)

__all__ = [
    "AgentVetoes",
    "ManipulationWitness",
    "ObviousScan",
    "OptionSet",
    "VetoReport",
    "canonical_preference",
    "find_obvious_manipulations",
    "find_profitable_manipulations",
    "is_nom_veto",
    "option_set",
    "option_set_closed_gmv",
    "option_set_closed_mvs",
    "option_set_for_preference",
    "scan_obvious_manipulations",
    "veto_sets",
    "veto_sets_closed",
]

WORST_CASE = "worst_case"
BEST_CASE = "best_case"
PLAIN = "plain"
_KIND_NAMES = (WORST_CASE, BEST_CASE)


@dataclass(frozen=True)
class OptionSet:
    """Outcomes reachable over all subprofiles of the other agents, given the
    agent's reported top.  ``agent`` is None for forms shared by all agents."""

    agent: int | None
    pref_top: int
    members: frozenset[int]

    def __post_init__(self):
        if not self.members:
            raise ValueError("an option set is never empty: the rule always selects")


@dataclass(frozen=True)
class AgentVetoes:
    """One agent's veto structure.

    ``vetoing_tops[x]`` lists the reported tops that make x unreachable, for
    every vetoed x.
    """

    agent: int
    vetoed: frozenset[int]
    strongly_vetoed: frozenset[int]
    vetoing_tops: Mapping[int, tuple[int, ...]]

    def __post_init__(self):
        if not self.strongly_vetoed <= self.vetoed:
            raise ValueError("strong vetoes must be vetoes")


@dataclass(frozen=True)
class VetoReport:
    agents: tuple[AgentVetoes, ...]

    def all_strong(self) -> bool:
        return all(a.strongly_vetoed == a.vetoed for a in self.agents)

    def no_vetoers(self) -> bool:
        return all(not a.vetoed for a in self.agents)


@dataclass(frozen=True)
class ManipulationWitness:
    """A concrete manipulation.

    kind "plain": ``evidence`` is the top subprofile of the other agents at
    which the misreport profits.  kind "worst_case"/"best_case": ``evidence``
    is the pair (truthful option set, misreport option set) whose worst/best
    members the misreport improves.
    """

    agent: int
    true_pref: Preference
    misreport: Preference
    kind: str
    evidence: tuple


@dataclass(frozen=True)
class ObviousScan:
    """Result of a full obvious-manipulation scan.

    ``counts`` holds exact totals per (agent, kind) even when the stored
    witness list is capped.
    """

    witnesses: tuple[ManipulationWitness, ...]
    counts: Mapping[tuple[int, str], int]
    truncated: bool

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def is_empty(self) -> bool:
        return self.total == 0


def canonical_preference(top: int, space: AlternativeSpace) -> Preference:
    """Lexicographically first preference with the given top."""
    rest = [x for x in space.alternatives if x != top]
    return Preference((top, *rest))


# -- brute force ------------------------------------------------------------


@lru_cache(maxsize=2048)
def _option_masks(rule: Rule) -> np.ndarray:
    # callers have already applied their budget; _table_for skips the
    # default-budget check a plain build_table would re-impose
    masks = _backend.active().option_masks(_table_for(rule), rule.n, rule.space.m)
    masks.flags.writeable = False
    return masks


@lru_cache(maxsize=512)
def _pair_reach(rule: Rule) -> np.ndarray:
    pair = _backend.active().pair_reach(_table_for(rule), rule.n, rule.space.m)
    pair.flags.writeable = False
    return pair


def _check_scan_budget(rule: Rule, budget: Budget | None) -> Budget:
    budget = budget or default_budget()
    budget.check_profiles(rule.space.m ** rule.n, "top-vector scan")
    return budget


def _check_agent_top(rule: Rule, agent: int, top: int) -> None:
    if not 0 <= agent < rule.n:
        raise DimensionMismatchError(f"agent {agent} outside 0..{rule.n - 1}")
    if not 0 <= top < rule.space.m:
        raise DimensionMismatchError(f"top {top} outside 0..{rule.space.m - 1}")


def option_set(rule: Rule, agent: int, top: int, budget: Budget | None = None) -> OptionSet:
    """Brute-force option set: outcomes over all top subprofiles of the others."""
    _check_agent_top(rule, agent, top)
    _check_scan_budget(rule, budget)
    members = frozenset(int(x) for x in np.nonzero(_option_masks(rule)[agent, top])[0])
    return OptionSet(agent, top, members)


def option_set_for_preference(rule: Rule, agent: int, pref: Preference,
                              budget: Budget | None = None) -> OptionSet:
    """Option set left open by a full preference; depends only on its top."""
    return option_set(rule, agent, pref.top, budget)


# -- closed forms -----------------------------------------------------------


def _interval_option(low: int, high: int, top: int) -> frozenset[int]:
    # option sets of the median families are intervals anchored at the
    # extreme fixed ballots, stretched to reach the agent's own top
    if top < low:
        return frozenset(range(top, high + 1))
    if top > high:
        return frozenset(range(low, top + 1))
    return frozenset(range(low, high + 1))


def option_set_closed_mvs(rule: Median, top: int) -> OptionSet:
    """Interval form of a median rule's option set (identical for all agents)."""
    return OptionSet(None, top, _interval_option(rule.alpha[0], rule.alpha[-1], top))


def _gmv_extremes(rule: GeneralizedMedian, agent: int) -> tuple[int, int]:
    full = (1 << rule.n) - 1
    others = rule.ballots[full ^ (1 << agent)]
    alone = rule.ballots[1 << agent]
    return others, alone


def option_set_closed_gmv(rule: GeneralizedMedian, agent: int, top: int) -> OptionSet:
    """Interval form of a ballot-family rule's option set for one agent.

    Requires the agent's co-players' coalition ballot to sit weakly below the
    agent's own singleton ballot; otherwise the interval form does not apply
    and callers must use the brute force.
    """
    others, alone = _gmv_extremes(rule, agent)
    if others > alone:
        raise AssumptionViolatedError(
            f"agent {agent}: complement ballot {others} exceeds singleton ballot {alone}"
        )
    return OptionSet(agent, top, _interval_option(others, alone, top))


# -- veto sets --------------------------------------------------------------


def _vetoes_from_options(agent: int, m: int, options_by_top) -> AgentVetoes:
    vetoing = {
        x: tuple(t for t in range(m) if x not in options_by_top[t]) for x in range(m)
    }
    vetoed = frozenset(x for x in range(m) if vetoing[x])
    strong = frozenset(
        x for x in range(m)
        if all(x not in options_by_top[t] for t in range(m) if t != x)
    )
    return AgentVetoes(agent, vetoed, strong, {x: vetoing[x] for x in sorted(vetoed)})


def _brute_agent_vetoes(rule: Rule, agent: int) -> AgentVetoes:
    masks = _option_masks(rule)
    m = rule.space.m
    options_by_top = {
        t: frozenset(int(x) for x in np.nonzero(masks[agent, t])[0]) for t in range(m)
    }
    return _vetoes_from_options(agent, m, options_by_top)


def veto_sets(rule: Rule, budget: Budget | None = None) -> VetoReport:
    """Brute-force veto report for every agent."""
    _check_scan_budget(rule, budget)
    return VetoReport(tuple(_brute_agent_vetoes(rule, i) for i in range(rule.n)))


def veto_sets_closed(rule: Rule, budget: Budget | None = None) -> VetoReport:
    """Closed-form veto report for the median and committee families.

    Vetoed sets come from the family's characterization; strong vetoes and
    vetoing tops come from closed option sets where those exist, otherwise
    from the brute-force option sets.
    """
    m = rule.space.m
    if isinstance(rule, Median):
        low, high = rule.alpha[0], rule.alpha[-1]
        vetoed = frozenset(x for x in range(m) if x < low or x > high)
        agents = []
        for i in range(rule.n):
            options_by_top = {t: option_set_closed_mvs(rule, t).members for t in range(m)}
            derived = _vetoes_from_options(i, m, options_by_top)
            agents.append(AgentVetoes(i, vetoed, derived.strongly_vetoed, derived.vetoing_tops))
        return VetoReport(tuple(agents))

    if isinstance(rule, GeneralizedMedian):
        agents = []
        for i in range(rule.n):
            others, alone = _gmv_extremes(rule, i)
            if others <= alone:
                vetoed = frozenset(x for x in range(m) if x < others or x > alone)
                options_by_top = {
                    t: option_set_closed_gmv(rule, i, t).members for t in range(m)
                }
                derived = _vetoes_from_options(i, m, options_by_top)
                agents.append(
                    AgentVetoes(i, vetoed, derived.strongly_vetoed, derived.vetoing_tops)
                )
            else:
                # the agent's reports clamp the outcome away from every x, so
                # all alternatives are vetoed; the interval form does not
                # apply and strong vetoes need the brute force
                _check_scan_budget(rule, budget)
                brute = _brute_agent_vetoes(rule, i)
                agents.append(AgentVetoes(i, frozenset(range(m)),
                                          brute.strongly_vetoed, brute.vetoing_tops))
        return VetoReport(tuple(agents))

    if isinstance(rule, (Committees, Quota)):
        committees = rule if isinstance(rule, Committees) else quota_to_committees(rule)
        num_objects = rule.space.num_objects
        # per object: agents in every minimal coalition, and singleton winners
        in_all = []
        singleton_wins = []
        for coals in committees.committees:
            inter = (1 << rule.n) - 1
            for mc in coals:
                inter &= mc
            in_all.append(inter)
            singleton_wins.append(frozenset(mc for mc in coals if mc.bit_count() == 1))
        _check_scan_budget(rule, budget)  # no closed strong-veto form here
        agents = []
        for i in range(rule.n):
            vetoed = set()
            for s in range(m):
                for k in range(num_objects):
                    member = s >> k & 1
                    if member and in_all[k] >> i & 1:
                        vetoed.add(s)
                    if not member and (1 << i) in singleton_wins[k]:
                        vetoed.add(s)
            brute = _brute_agent_vetoes(rule, i)
            agents.append(AgentVetoes(i, frozenset(vetoed), brute.strongly_vetoed,
                                      brute.vetoing_tops))
        return VetoReport(tuple(agents))

    raise UnsupportedFamilyError(
        f"no closed veto form for {type(rule).__name__}; use veto_sets()"
    )


def is_nom_veto(rule: Rule, budget: Budget | None = None) -> bool:
    """Veto test for obvious manipulability: NOM iff every veto is strong."""
    return veto_sets(rule, budget).all_strong()


# -- manipulation scans -----------------------------------------------------


def find_profitable_manipulations(
    rule: Rule, agent: int, pref: Preference, budget: Budget | None = None
) -> tuple[ManipulationWitness, ...]:
    """Every (misreport, top subprofile) pair where the misreport profits.

    Misreports range over distinct tops (one canonical representative each;
    same-top reports can never change the outcome of a tops-only rule).
    """
    budget = budget or default_budget()
    n, m = rule.n, rule.space.m
    _check_agent_top(rule, agent, pref.top)
    if pref.m != m:
        raise DimensionMismatchError(f"preference ranks {pref.m} alternatives, rule has {m}")
    budget.check_profiles(m ** (n - 1), "subprofile scan")
    table = build_table(rule, budget)
    rank = {x: r for r, x in enumerate(pref.ranking)}
    stride = m ** (n - 1 - agent)
    witnesses = []
    for dev_top in range(m):
        if dev_top == pref.top:
            continue
        misreport = canonical_preference(dev_top, rule.space)
        for sub in itertools.product(range(m), repeat=n - 1):
            tops_true = sub[:agent] + (pref.top,) + sub[agent:]
            idx = 0
            for t in tops_true:
                idx = idx * m + t
            truthful = int(table[idx])
            deviated = int(table[idx + (dev_top - pref.top) * stride])
            if rank[deviated] < rank[truthful]:
                witnesses.append(
                    ManipulationWitness(agent, pref, misreport, PLAIN, (sub,))
                )
    return tuple(witnesses)


def scan_obvious_manipulations(
    rule: Rule,
    budget: Budget | None = None,
    max_per_agent_kind: int = -1,
) -> ObviousScan:
    """Full scan for obvious manipulations.

    Every agent, every true preference (all m! of them: the worst/best
    comparisons read the whole order), every profitable misreport top.  A
    misreport is an obvious manipulation when its worst (or best) reachable
    outcome strictly beats truth-telling's.  Witnesses are emitted in scan
    order (agent, true preference, misreport top, worst before best);
    ``counts`` is always exact regardless of the cap.
    """
    budget = budget or default_budget()
    n, m = rule.n, rule.space.m
    budget.check_preferences(math.factorial(m), "true-preference scan")
    budget.check_profiles(m ** n, "top-vector scan")

    prefs = enumerate_preferences(rule.space, budget)
    perms = np.array([p.ranking for p in prefs], dtype=np.int32)
    ranks = np.argsort(perms, axis=1).astype(np.int32)
    tops = np.ascontiguousarray(perms[:, 0])

    opt = _option_masks(rule)
    pair = _pair_reach(rule)
    counts_arr, raw = _backend.active().scan_obvious(opt, pair, tops, ranks, max_per_agent_kind)

    option_cache: dict[tuple[int, int], frozenset[int]] = {}

    def options(i: int, t: int) -> frozenset[int]:
        if (i, t) not in option_cache:
            option_cache[i, t] = frozenset(int(x) for x in np.nonzero(opt[i, t])[0])
        return option_cache[i, t]

    witnesses = tuple(
        ManipulationWitness(
            agent=i,
            true_pref=prefs[p_idx],
            misreport=canonical_preference(dev_top, rule.space),
            kind=_KIND_NAMES[kind],
            evidence=(options(i, int(tops[p_idx])), options(i, dev_top)),
        )
        for i, p_idx, dev_top, kind in raw
    )
    counts = {
        (i, _KIND_NAMES[k]): int(counts_arr[i, k]) for i in range(n) for k in range(2)
    }
    truncated = len(witnesses) < sum(counts.values())
    return ObviousScan(witnesses, counts, truncated)


def find_obvious_manipulations(
    rule: Rule, budget: Budget | None = None
) -> tuple[ManipulationWitness, ...]:
    """All obvious-manipulation witnesses; empty exactly when the rule is NOM."""
    return scan_obvious_manipulations(rule, budget).witnesses


def clear_caches() -> None:
    """Drop cached tables and masks (needed after switching kernel backends)."""
    from . import rules as _rules

    _rules.clear_table_cache()
    _option_masks.cache_clear()
    _pair_reach.cache_clear()
