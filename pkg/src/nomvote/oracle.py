"""Independent brute-force checkers for the axioms used in the analysis.

These scans work straight from the definitions (full preference profiles
where the axiom needs them) and return replayable counterexamples; they are
the ground truth the closed forms are validated against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .domain import (
    Budget,
    Preference,
    Profile,
    default_budget,
    enumerate_preferences,
    enumerate_top_vectors,
)
from .rules import Rule, build_table, top_vector_index
from .analysis import ManipulationWitness, scan_obvious_manipulations

__all__ = [
    "AxiomVerdict",
    "is_anonymous",
    "is_dictatorial",
    "is_efficient",
    "is_nom_brute",
    "is_strategy_proof",
]


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of an axiom check.

    ``counterexample`` is present exactly when the axiom fails and replays
    the violation under the axiom's definition; ``detail`` carries positive
    side information (e.g. the dictator's index).
    """

    holds: bool
    counterexample: tuple | None = None
    detail: dict | None = None

    def __post_init__(self):
        if self.holds == (self.counterexample is not None):
            raise ValueError("counterexample must be present exactly when the axiom fails")


def is_strategy_proof(
    rule: Rule,
    domain_filter: Callable[[Preference], bool] | None = None,
    budget: Budget | None = None,
) -> AxiomVerdict:
    """No agent can ever profit by misreporting, within the filtered domain.

    Truths, misreports, and the other agents' preferences all range over the
    preferences accepted by ``domain_filter`` (the whole space when None).
    The counterexample is the lexicographically first
    (profile, agent, misreport) in scan order.
    """
    budget = budget or default_budget()
    prefs = enumerate_preferences(rule.space, budget)
    if domain_filter is not None:
        prefs = [p for p in prefs if domain_filter(p)]
    if not prefs:
        raise ValueError("domain filter accepted no preferences")
    d = len(prefs)
    n, m = rule.n, rule.space.m
    budget.check_profiles(d ** n, "strategy-proofness scan")
    table = build_table(rule, budget)
    ranks = [{x: r for r, x in enumerate(p.ranking)} for p in prefs]

    for profile_idx in itertools.product(range(d), repeat=n):
        tops = tuple(prefs[j].top for j in profile_idx)
        truthful = int(table[top_vector_index(tops, m)])
        for i in range(n):
            rank = ranks[profile_idx[i]]
            stride = m ** (n - 1 - i)
            base = top_vector_index(tops, m) - tops[i] * stride
            for dev_idx in range(d):
                deviated = int(table[base + prefs[dev_idx].top * stride])
                if rank[deviated] < rank[truthful]:
                    profile = Profile(tuple(prefs[j] for j in profile_idx))
                    return AxiomVerdict(False, (profile, i, prefs[dev_idx]))
    return AxiomVerdict(True, detail={"domain_size": d})


def is_efficient(rule: Rule, budget: Budget | None = None) -> AxiomVerdict:
    """No full preference profile admits a unanimous strict improvement.

    Needs full preferences, not just tops, so the scan covers all (m!)**n
    profiles and refuses beyond the profile budget.
    """
    budget = budget or default_budget()
    n, m = rule.n, rule.space.m
    prefs = enumerate_preferences(rule.space, budget)
    budget.check_profiles(len(prefs) ** n, "efficiency scan")
    table = build_table(rule, budget)
    ranks = [{x: r for r, x in enumerate(p.ranking)} for p in prefs]

    for profile_idx in itertools.product(range(len(prefs)), repeat=n):
        tops = tuple(prefs[j].top for j in profile_idx)
        selected = int(table[top_vector_index(tops, m)])
        for x in range(m):
            if x == selected:
                continue
            if all(ranks[j][x] < ranks[j][selected] for j in profile_idx):
                profile = Profile(tuple(prefs[j] for j in profile_idx))
                return AxiomVerdict(False, (profile, x))
    return AxiomVerdict(True)


def is_anonymous(rule: Rule, budget: Budget | None = None) -> AxiomVerdict:
    """Outcomes are invariant under renaming agents.

    Checked on top vectors (sufficient for tops-only rules) against all
    transpositions, which generate every renaming.  The counterexample is a
    pair of top vectors, one a transposition of the other, with different
    outcomes.
    """
    budget = budget or default_budget()
    n, m = rule.n, rule.space.m
    table = build_table(rule, budget)
    for tops in enumerate_top_vectors(rule.space, n, budget):
        base = int(table[top_vector_index(tops, m)])
        for i, j in itertools.combinations(range(n), 2):
            if tops[i] == tops[j]:
                continue
            swapped = list(tops)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            swapped = tuple(swapped)
            if int(table[top_vector_index(swapped, m)]) != base:
                return AxiomVerdict(False, (tops, swapped))
    return AxiomVerdict(True)


def is_dictatorial(rule: Rule, budget: Budget | None = None) -> AxiomVerdict:
    """Some agent's top is selected at every top vector.

    On failure the counterexample lists, for each agent, a top vector where
    that agent's top loses.
    """
    budget = budget or default_budget()
    n, m = rule.n, rule.space.m
    table = build_table(rule, budget)
    refutations = []
    for i in range(n):
        witness = None
        for tops in enumerate_top_vectors(rule.space, n, budget):
            if int(table[top_vector_index(tops, m)]) != tops[i]:
                witness = tops
                break
        if witness is None:
            return AxiomVerdict(True, detail={"dictator": i})
        refutations.append((i, witness))
    return AxiomVerdict(False, tuple(refutations))


def is_nom_brute(rule: Rule, budget: Budget | None = None) -> AxiomVerdict:
    """Direct test of non-obvious-manipulability: the full scan finds nothing.

    Named separately from the veto test so closed-form predicates can be
    validated against the definition itself rather than via the veto
    equivalence.
    """
    scan = scan_obvious_manipulations(rule, budget, max_per_agent_kind=1)
    if scan.is_empty():
        return AxiomVerdict(True)
    first: ManipulationWitness = scan.witnesses[0]
    return AxiomVerdict(False, (first,), detail={"total": scan.total})
