"""Closed-form NOM predicates: constant-time tests on rule parameters.

Each predicate decides NOM — "no agent has any obvious manipulation" —
from the rule's parameters alone.  The family predicates for
non-dictatorial rules are:

* median rules: NOM iff the extreme fixed ballots sit within one step of
  the ends of the line;
* ballot families: NOM iff, for every agent, the complement coalition's
  ballot is within one step of the bottom and the singleton's within one
  step of the top;
* committee rules: NOM iff no object has an agent common to all its winning
  coalitions and no singleton coalition wins;
* quota rules: NOM iff every quota lies in [2, n-1].

Dictatorial members of the ballot and committee families are detected first
and are NOM outright.  The conditional corollaries for efficient (and
anonymous) rules verify their hypotheses through the oracle before
answering.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .analysis import VetoReport, veto_sets
from .domain import Budget
from .errors import HypothesisNotVerifiedError
from .oracle import AxiomVerdict
from .rules import Committees, GeneralizedMedian, Median, Quota, Rule

__all__ = [
    "NomVerdict",
    "family_predicate",
    "nom_corollary_anon_efficient",
    "nom_corollary_efficient",
    "nom_predicate_gmv",
    "nom_predicate_mvs",
    "nom_predicate_quota",
    "nom_predicate_vbc",
]


@dataclass(frozen=True)
class NomVerdict:
    nom: bool
    rationale: str
    dictatorial: bool = False

    def __post_init__(self):
        if not self.rationale:
            raise ValueError("a verdict always carries its rationale")


def nom_predicate_mvs(rule: Median) -> NomVerdict:
    """NOM iff alpha_1 is in {a, a+1} and alpha_{n-1} is in {b-1, b}."""
    a, b = 0, rule.space.m - 1
    low, high = rule.alpha[0], rule.alpha[-1]
    problems = []
    if low not in (a, a + 1):
        problems.append(f"alpha_1={low} not in {{{a},{a + 1}}}")
    if high not in (b - 1, b):
        problems.append(f"alpha_{{n-1}}={high} not in {{{b - 1},{b}}}")
    if problems:
        return NomVerdict(False, "; ".join(problems))
    return NomVerdict(True, f"alpha_1={low} and alpha_{{n-1}}={high} both border the extremes")


def _gmv_dictator(rule: GeneralizedMedian) -> int | None:
    a, b = 0, rule.space.m - 1
    full = (1 << rule.n) - 1
    for i in range(rule.n):
        if rule.ballots[1 << i] == a and rule.ballots[full ^ (1 << i)] == b:
            return i
    return None


def nom_predicate_gmv(rule: GeneralizedMedian) -> NomVerdict:
    """Dictatorial families are NOM; otherwise NOM iff every agent's extreme
    ballots border the ends of the line."""
    a, b = 0, rule.space.m - 1
    dictator = _gmv_dictator(rule)
    if dictator is not None:
        return NomVerdict(True, f"agent {dictator} is a dictator", dictatorial=True)
    full = (1 << rule.n) - 1
    for i in range(rule.n):
        others = rule.ballots[full ^ (1 << i)]
        alone = rule.ballots[1 << i]
        if others not in (a, a + 1):
            return NomVerdict(
                False, f"agent {i}: complement ballot {others} not in {{{a},{a + 1}}}"
            )
        if alone not in (b - 1, b):
            return NomVerdict(
                False, f"agent {i}: singleton ballot {alone} not in {{{b - 1},{b}}}"
            )
    return NomVerdict(True, "every agent's extreme ballots border the ends")


def _vbc_dictator(rule: Committees) -> int | None:
    # a dictator's singleton is the unique minimal winning coalition everywhere
    for i in range(rule.n):
        if all(coals == (1 << i,) for coals in rule.committees):
            return i
    return None


def nom_predicate_vbc(rule: Committees) -> NomVerdict:
    """Dictatorial committee rules are NOM; otherwise NOM iff for every object
    the winning coalitions have empty intersection and none is a singleton."""
    dictator = _vbc_dictator(rule)
    if dictator is not None:
        return NomVerdict(True, f"agent {dictator} is a dictator", dictatorial=True)
    for k, coals in enumerate(rule.committees):
        inter = (1 << rule.n) - 1
        for mc in coals:
            inter &= mc
        if inter:
            agent = inter.bit_length() - 1
            return NomVerdict(
                False, f"object {k}: agent {agent} belongs to every winning coalition"
            )
        for mc in coals:
            if mc.bit_count() == 1:
                agent = mc.bit_length() - 1
                return NomVerdict(False, f"object {k}: singleton {{{agent}}} wins alone")
    return NomVerdict(True, "all committees have empty intersection and no singleton winners")


def nom_predicate_quota(rule: Quota) -> NomVerdict:
    """NOM iff every quota lies in [2, n-1] (an empty interval when n=2)."""
    n = rule.n
    for k, q in enumerate(rule.quota):
        if not 2 <= q <= n - 1:
            return NomVerdict(False, f"object {k}: quota {q} outside [2, {n - 1}]")
    return NomVerdict(True, f"all quotas within [2, {n - 1}]")


def family_predicate(rule: Rule) -> NomVerdict | None:
    """The applicable family predicate, or None when the family has none."""
    if isinstance(rule, Median):
        return nom_predicate_mvs(rule)
    if isinstance(rule, GeneralizedMedian):
        return nom_predicate_gmv(rule)
    if isinstance(rule, Committees):
        return nom_predicate_vbc(rule)
    if isinstance(rule, Quota):
        return nom_predicate_quota(rule)
    return None


def _require(name: str, verdict: AxiomVerdict | None) -> None:
    if verdict is None or not verdict.holds:
        raise HypothesisNotVerifiedError(
            f"rule is not verified {name}; the corollary does not apply"
        )


def nom_corollary_efficient(
    rule: Rule,
    efficiency: AxiomVerdict | None = None,
    veto_report: VetoReport | None = None,
    budget: Budget | None = None,
) -> NomVerdict:
    """For efficient rules: NOM iff at most one agent holds any veto power
    (all of it strong), or all veto power is strong and aimed at one common
    alternative.

    Efficiency is machine-verified (pass a precomputed verdict to reuse one).
    """
    efficiency = efficiency if efficiency is not None else oracle.is_efficient(rule, budget)
    _require("efficient", efficiency)
    report = veto_report if veto_report is not None else veto_sets(rule, budget)

    vetoers = [a for a in report.agents if a.vetoed]
    if len(vetoers) <= 1 and all(a.strongly_vetoed == a.vetoed for a in vetoers):
        return NomVerdict(True, "at most one agent vetoes, and only strongly")
    common = None
    for a in report.agents:
        if a.strongly_vetoed != a.vetoed or len(a.vetoed) > 1:
            break
        if a.vetoed:
            y = next(iter(a.vetoed))
            if common is not None and common != y:
                break
            common = y
    else:
        return NomVerdict(True, "all vetoes are strong and aim at one common alternative")
    return NomVerdict(False, "two agents veto, or vetoes spread over several alternatives")


def nom_corollary_anon_efficient(
    rule: Rule,
    efficiency: AxiomVerdict | None = None,
    anonymity: AxiomVerdict | None = None,
    veto_report: VetoReport | None = None,
    budget: Budget | None = None,
) -> NomVerdict:
    """For efficient anonymous rules: NOM iff nobody vetoes anything, or every
    agent strongly vetoes the same single alternative.

    Both hypotheses are machine-verified.
    """
    efficiency = efficiency if efficiency is not None else oracle.is_efficient(rule, budget)
    _require("efficient", efficiency)
    anonymity = anonymity if anonymity is not None else oracle.is_anonymous(rule, budget)
    _require("anonymous", anonymity)
    report = veto_report if veto_report is not None else veto_sets(rule, budget)

    if report.no_vetoers():
        return NomVerdict(True, "no agent vetoes any alternative")
    singletons = {a.vetoed for a in report.agents}
    all_strong = all(a.strongly_vetoed == a.vetoed for a in report.agents)
    if all_strong and len(singletons) == 1 and len(next(iter(singletons))) == 1:
        (y,) = next(iter(singletons))
        return NomVerdict(True, f"every agent strongly vetoes exactly {{{y}}}")
    return NomVerdict(False, "veto power is neither absent nor a unanimous single-alternative veto")
