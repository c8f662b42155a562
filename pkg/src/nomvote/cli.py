"""Command-line front end.

Verbs: check, option-set, veto, witness, sweep, validate.  Rule configs are
JSON; agent coalitions are fixed-width bitstrings whose leftmost character
is agent 0.  Exit codes: 0 = success (for ``check``: the rule is NOM),
1 = the rule is obviously manipulable (or a sweep found discrepancies),
2 = usage or validation error, 3 = enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import sys
import time
from typing import Any, Iterator

from . import analysis, characterization, oracle, rules
from ._backend import backend_name
from .domain import (
    Budget,
    default_budget,
    linear_space,
    separable_filter,
    single_peaked_filter,
    subsets_space,
)
from .errors import AssumptionViolatedError, BudgetExceededError, NomvoteError

EXIT_OK = 0
EXIT_MANIPULABLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FAMILY_TAGS = ("median", "gmv", "committees", "quota", "status_quo", "dictatorship", "table")


# -- config parsing ---------------------------------------------------------


def _mask_to_bits(mask: int, n: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def _bits_to_mask(bits: str, n: int, where: str, errors: list[str]) -> int:
    if len(bits) != n or any(c not in "01" for c in bits):
        errors.append(f"{where}: expected a {n}-character bitstring, got {bits!r}")
        return 0
    return sum(1 << i for i, c in enumerate(bits) if c == "1")


def parse_rule_config(cfg: dict) -> tuple[rules.Rule | None, list[str]]:
    """Build a rule from a config mapping; returns (rule, field-path errors)."""
    errors: list[str] = []
    family = cfg.get("family")
    if family not in FAMILY_TAGS:
        return None, [f"family: expected one of {FAMILY_TAGS}, got {family!r}"]
    n = cfg.get("n")
    if not isinstance(n, int) or n < 2:
        return None, [f"n: expected an integer >= 2, got {n!r}"]

    space_cfg = cfg.get("space")
    if not isinstance(space_cfg, dict):
        return None, ["space: expected an object with 'kind' and 'm' or 'K'"]
    kind = space_cfg.get("kind")
    try:
        if kind == "linear":
            space = linear_space(space_cfg.get("m", 0))
        elif kind == "subsets":
            space = subsets_space(space_cfg.get("K", 0))
        else:
            return None, [f"space.kind: expected 'linear' or 'subsets', got {kind!r}"]
    except ValueError as exc:
        return None, [f"space: {exc}"]

    if family == "median":
        alpha = cfg.get("alpha")
        if not isinstance(alpha, list) or not all(isinstance(a, int) for a in alpha):
            return None, ["alpha: expected a list of integers"]
        return rules.Median(n, space, tuple(alpha)), errors
    if family == "gmv":
        ballots_cfg = cfg.get("ballots")
        if not isinstance(ballots_cfg, dict):
            return None, ["ballots: expected an object keyed by agent bitstrings"]
        ballots = [None] * (1 << n)
        for bits, value in ballots_cfg.items():
            mask = _bits_to_mask(str(bits), n, f"ballots.{bits}", errors)
            if not isinstance(value, int):
                errors.append(f"ballots.{bits}: expected an integer ballot")
                continue
            ballots[mask] = value
        for mask, value in enumerate(ballots):
            if value is None:
                errors.append(f"ballots.{_mask_to_bits(mask, n)}: missing coalition ballot")
        if errors:
            return None, errors
        return rules.GeneralizedMedian(n, space, tuple(ballots)), errors
    if family == "committees":
        coms = cfg.get("committees")
        if not isinstance(coms, list):
            return None, ["committees: expected a list (one committee per object)"]
        parsed = []
        for k, coals in enumerate(coms):
            if not isinstance(coals, list):
                errors.append(f"committees[{k}]: expected a list of coalition bitstrings")
                parsed.append(())
                continue
            parsed.append(
                tuple(
                    _bits_to_mask(str(c), n, f"committees[{k}][{j}]", errors)
                    for j, c in enumerate(coals)
                )
            )
        if errors:
            return None, errors
        return rules.Committees(n, space, tuple(parsed)), errors
    if family == "quota":
        quota = cfg.get("quota")
        if not isinstance(quota, list) or not all(isinstance(q, int) for q in quota):
            return None, ["quota: expected a list of integers"]
        return rules.Quota(n, space, tuple(quota)), errors
    if family == "status_quo":
        anchor = cfg.get("anchor")
        if not isinstance(anchor, int):
            return None, ["anchor: expected an integer alternative"]
        return rules.StatusQuo(n, space, anchor), errors
    if family == "dictatorship":
        dictator = cfg.get("dictator")
        if not isinstance(dictator, int):
            return None, ["dictator: expected an integer agent index"]
        return rules.Dictatorship(n, space, dictator), errors
    outcomes = cfg.get("outcomes")
    if not isinstance(outcomes, list) or not all(isinstance(x, int) for x in outcomes):
        return None, ["outcomes: expected a list of integers (lexicographic by top vector)"]
    return rules.TopsOnlyTable(n, space, tuple(outcomes)), errors


def serialize_rule(rule: rules.Rule) -> dict:
    """Config mapping for a rule; parse(serialize(rule)) == rule."""
    if rule.space.kind == "linear":
        space: dict[str, Any] = {"kind": "linear", "m": rule.space.m}
    else:
        space = {"kind": "subsets", "K": rule.space.num_objects}
    base = {"n": rule.n, "space": space}
    if isinstance(rule, rules.Median):
        return {"family": "median", **base, "alpha": list(rule.alpha)}
    if isinstance(rule, rules.GeneralizedMedian):
        ballots = {
            _mask_to_bits(mask, rule.n): b for mask, b in enumerate(rule.ballots)
        }
        return {"family": "gmv", **base, "ballots": ballots}
    if isinstance(rule, rules.Committees):
        coms = [[_mask_to_bits(mc, rule.n) for mc in coals] for coals in rule.committees]
        return {"family": "committees", **base, "committees": coms}
    if isinstance(rule, rules.Quota):
        return {"family": "quota", **base, "quota": list(rule.quota)}
    if isinstance(rule, rules.StatusQuo):
        return {"family": "status_quo", **base, "anchor": rule.anchor}
    if isinstance(rule, rules.Dictatorship):
        return {"family": "dictatorship", **base, "dictator": rule.dictator}
    return {"family": "table", **base, "outcomes": list(rule.outcomes)}


def _load_rule(path: str) -> tuple[rules.Rule | None, list[str]]:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return None, [f"config: {exc}"]
    rule, errors = parse_rule_config(cfg)
    if rule is not None and not errors:
        errors = rules.validate(rule)
    return rule, errors


# -- rendering --------------------------------------------------------------


def _alt_label(space, x: int) -> str:
    if space.kind == "linear":
        return str(x)
    members = [str(k) for k in range(space.num_objects) if x >> k & 1]
    return "{" + ",".join(members) + "}" if members else "{}"


def _alt_set_label(space, alts) -> str:
    return "{" + ", ".join(_alt_label(space, x) for x in sorted(alts)) + "}"


def _pref_label(pref) -> str:
    return ">".join(str(x) for x in pref.ranking)


def _witness_dict(space, w: analysis.ManipulationWitness) -> dict:
    out = {
        "agent": w.agent,
        "kind": w.kind,
        "true_pref": list(w.true_pref.ranking),
        "misreport": list(w.misreport.ranking),
    }
    if w.kind == analysis.PLAIN:
        out["profitable_at_others_tops"] = list(w.evidence[0])
    else:
        out["truthful_options"] = sorted(w.evidence[0])
        out["misreport_options"] = sorted(w.evidence[1])
    return out


def _print_witness(space, w: analysis.ManipulationWitness) -> None:
    print(f"  agent {w.agent} [{w.kind}]: true {_pref_label(w.true_pref)}"
          f" -> report {_pref_label(w.misreport)}")
    if w.kind != analysis.PLAIN:
        print(f"    options truthful:  {_alt_set_label(space, w.evidence[0])}")
        print(f"    options misreport: {_alt_set_label(space, w.evidence[1])}")


def _emit(report: dict, fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(report, indent=2, sort_keys=True))


# -- subcommands ------------------------------------------------------------


def _budget_from(args) -> Budget:
    budget = default_budget()
    if args.budget_profiles is not None:
        budget = Budget(max_preferences=budget.max_preferences,
                        max_profiles=args.budget_profiles)
    return budget


AXIOM_CHOICES = ("efficiency", "anonymity", "dictatorship",
                 "sp-full", "sp-single-peaked", "sp-separable")


def _run_axiom(name: str, rule: rules.Rule, budget: Budget) -> oracle.AxiomVerdict:
    if name == "efficiency":
        return oracle.is_efficient(rule, budget)
    if name == "anonymity":
        return oracle.is_anonymous(rule, budget)
    if name == "dictatorship":
        return oracle.is_dictatorial(rule, budget)
    if name == "sp-full":
        return oracle.is_strategy_proof(rule, None, budget)
    if name == "sp-single-peaked":
        return oracle.is_strategy_proof(rule, single_peaked_filter(rule.space), budget)
    return oracle.is_strategy_proof(rule, separable_filter(rule.space), budget)


def cmd_check(args) -> int:
    rule, errors = _load_rule(args.config)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    budget = _budget_from(args)
    started = time.perf_counter()

    scan = analysis.scan_obvious_manipulations(rule, budget, max_per_agent_kind=args.cap)
    nom_brute = scan.is_empty()
    report_veto = analysis.veto_sets(rule, budget)
    nom_veto = report_veto.all_strong()
    predicate = characterization.family_predicate(rule)

    axioms = {name: _run_axiom(name, rule, budget) for name in (args.axioms or [])}
    elapsed = time.perf_counter() - started

    verdicts = [nom_brute, nom_veto] + ([predicate.nom] if predicate else [])
    discrepancy = len(set(verdicts)) > 1
    nom = nom_brute

    if args.format == "text":
        print(f"rule: {json.dumps(serialize_rule(rule), sort_keys=True)}")
        print(f"nom (direct scan): {'yes' if nom_brute else 'no'}")
        print(f"nom (veto test):   {'yes' if nom_veto else 'no'}")
        if predicate is not None:
            flag = " [dictatorial]" if predicate.dictatorial else ""
            print(f"nom (family test): {'yes' if predicate.nom else 'no'}{flag}"
                  f" ({predicate.rationale})")
        if discrepancy:
            print("DISCREPANCY: verdict sources disagree; this is a defect")
        for agent in report_veto.agents:
            print(f"veto agent {agent.agent}: V={_alt_set_label(rule.space, agent.vetoed)}"
                  f" SV={_alt_set_label(rule.space, agent.strongly_vetoed)}")
        for name, verdict in axioms.items():
            print(f"axiom {name}: {'holds' if verdict.holds else 'fails'}")
        if not nom_brute:
            print(f"obvious manipulations: {scan.total} total; first witnesses:")
            for w in scan.witnesses[: args.cap if args.cap >= 0 else len(scan.witnesses)]:
                _print_witness(rule.space, w)
        print(f"timing: {elapsed:.3f}s (backend: {backend_name()})")
    else:
        _emit(
            {
                "rule": serialize_rule(rule),
                "verdicts": {
                    "nom_brute": nom_brute,
                    "nom_veto": nom_veto,
                    "family_predicate": None if predicate is None else {
                        "nom": predicate.nom,
                        "rationale": predicate.rationale,
                        "dictatorial": predicate.dictatorial,
                    },
                    "axioms": {name: v.holds for name, v in axioms.items()},
                },
                "discrepancy": discrepancy,
                "veto": [
                    {
                        "agent": a.agent,
                        "vetoed": sorted(a.vetoed),
                        "strongly_vetoed": sorted(a.strongly_vetoed),
                        "vetoing_tops": {str(x): list(t) for x, t in a.vetoing_tops.items()},
                    }
                    for a in report_veto.agents
                ],
                "witnesses": {
                    "total": scan.total,
                    "counts": {f"{i}:{kind}": c for (i, kind), c in scan.counts.items()},
                    "items": [_witness_dict(rule.space, w) for w in scan.witnesses],
                    "truncated": scan.truncated,
                },
                "timing_s": elapsed,
                "backend": backend_name(),
            },
            args.format,
        )
    if discrepancy:
        return EXIT_MANIPULABLE
    return EXIT_OK if nom else EXIT_MANIPULABLE


def cmd_option_set(args) -> int:
    rule, errors = _load_rule(args.config)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    budget = _budget_from(args)
    if not 0 <= args.agent < rule.n:
        print(f"error: agent {args.agent} outside 0..{rule.n - 1}", file=sys.stderr)
        return EXIT_USAGE
    if not 0 <= args.top < rule.space.m:
        print(f"error: top {args.top} outside 0..{rule.space.m - 1}", file=sys.stderr)
        return EXIT_USAGE

    brute = analysis.option_set(rule, args.agent, args.top, budget)
    closed = None
    note = "no closed form for this family"
    if isinstance(rule, rules.Median):
        closed = analysis.option_set_closed_mvs(rule, args.top)
    elif isinstance(rule, rules.GeneralizedMedian):
        try:
            closed = analysis.option_set_closed_gmv(rule, args.agent, args.top)
        except AssumptionViolatedError as exc:
            note = f"closed form not applicable: {exc}"
    agreement = None if closed is None else closed.members == brute.members

    if args.format == "text":
        print(f"option set, agent {args.agent}, top {_alt_label(rule.space, args.top)}:")
        print(f"  brute force: {_alt_set_label(rule.space, brute.members)}")
        if closed is not None:
            print(f"  closed form: {_alt_set_label(rule.space, closed.members)}")
            print(f"  agreement:   {'yes' if agreement else 'NO — DISCREPANCY'}")
        else:
            print(f"  closed form: ({note})")
    else:
        _emit(
            {
                "agent": args.agent,
                "top": args.top,
                "brute": sorted(brute.members),
                "closed": None if closed is None else sorted(closed.members),
                "agreement": agreement,
                "note": None if closed is not None else note,
            },
            args.format,
        )
    if agreement is False:
        return EXIT_MANIPULABLE
    return EXIT_OK


def cmd_veto(args) -> int:
    rule, errors = _load_rule(args.config)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    budget = _budget_from(args)
    brute = analysis.veto_sets(rule, budget)
    closed = None
    try:
        closed = analysis.veto_sets_closed(rule, budget)
    except NomvoteError:
        pass
    agree = closed is not None and all(
        b.vetoed == c.vetoed and b.strongly_vetoed == c.strongly_vetoed
        for b, c in zip(brute.agents, closed.agents)
    )
    if args.format == "text":
        for a in brute.agents:
            print(f"agent {a.agent}: V={_alt_set_label(rule.space, a.vetoed)}"
                  f" SV={_alt_set_label(rule.space, a.strongly_vetoed)}")
            for x, tops in a.vetoing_tops.items():
                tops_label = ", ".join(_alt_label(rule.space, t) for t in tops)
                print(f"    {_alt_label(rule.space, x)} vetoed by tops: {tops_label}")
        if closed is not None:
            print(f"closed form agrees: {'yes' if agree else 'NO — DISCREPANCY'}")
        print(f"every veto strong (NOM test): {'yes' if brute.all_strong() else 'no'}")
    else:
        _emit(
            {
                "agents": [
                    {
                        "agent": a.agent,
                        "vetoed": sorted(a.vetoed),
                        "strongly_vetoed": sorted(a.strongly_vetoed),
                        "vetoing_tops": {str(x): list(t) for x, t in a.vetoing_tops.items()},
                    }
                    for a in brute.agents
                ],
                "closed_form_agrees": agree if closed is not None else None,
                "all_vetoes_strong": brute.all_strong(),
            },
            args.format,
        )
    if closed is not None and not agree:
        return EXIT_MANIPULABLE
    return EXIT_OK


def cmd_witness(args) -> int:
    rule, errors = _load_rule(args.config)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    budget = _budget_from(args)
    scan = analysis.scan_obvious_manipulations(rule, budget, max_per_agent_kind=args.cap)
    if args.format == "text":
        print(f"obvious manipulations: {scan.total} total")
        for (agent, kind), count in sorted(scan.counts.items()):
            print(f"  agent {agent}, {kind}: {count}")
        for w in scan.witnesses:
            _print_witness(rule.space, w)
        if scan.truncated:
            print(f"  (list capped at {args.cap} per agent and kind; totals are exact)")
    else:
        _emit(
            {
                "total": scan.total,
                "counts": {f"{i}:{kind}": c for (i, kind), c in scan.counts.items()},
                "items": [_witness_dict(rule.space, w) for w in scan.witnesses],
                "truncated": scan.truncated,
            },
            args.format,
        )
    return EXIT_OK if scan.is_empty() else EXIT_MANIPULABLE


def cmd_validate(args) -> int:
    rule, errors = _load_rule(args.config)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print("ok")
    return EXIT_OK


# -- sweeps -----------------------------------------------------------------


def _antichains(n: int) -> list[tuple[int, ...]]:
    """All nonempty antichains of nonempty agent subsets, as sorted mask tuples."""
    subsets = list(range(1, 1 << n))
    out = []
    for r in range(1, len(subsets) + 1):
        for combo in itertools.combinations(subsets, r):
            if all(a & b not in (a, b) for a, b in itertools.combinations(combo, 2)):
                out.append(combo)
    return out


def _sweep_rules(args, budget: Budget) -> Iterator[tuple[str, rules.Rule]]:
    n = args.n
    if args.family == "median":
        space = linear_space(args.m)
        for alpha in itertools.combinations_with_replacement(range(args.m), n - 1):
            yield "|".join(map(str, alpha)), rules.Median(n, space, alpha)
    elif args.family == "gmv":
        space = linear_space(args.m)
        free_masks = [mask for mask in range(1, (1 << n) - 1)]
        budget.check_profiles(args.m ** len(free_masks), "ballot-family enumeration")
        for combo in itertools.product(range(args.m), repeat=len(free_masks)):
            ballots = [0] * (1 << n)
            ballots[0] = args.m - 1
            for mask, b in zip(free_masks, combo):
                ballots[mask] = b
            rule = rules.GeneralizedMedian(n, space, tuple(ballots))
            if rules.validate(rule):
                continue  # not monotone
            label = ";".join(
                f"{_mask_to_bits(mask, n)}:{b}" for mask, b in enumerate(ballots)
            )
            yield label, rule
    elif args.family == "committees":
        if n > 4:
            raise BudgetExceededError("committee enumeration", 2 ** (2 ** n), 2 ** 16)
        space = subsets_space(args.objects)
        chains = _antichains(n)
        for combo in itertools.product(chains, repeat=args.objects):
            label = ";".join(
                ",".join(_mask_to_bits(mc, n) for mc in coals) for coals in combo
            )
            yield label, rules.Committees(n, space, combo)
    elif args.family == "quota":
        space = subsets_space(args.objects)
        for quota in itertools.product(range(1, n + 1), repeat=args.objects):
            yield "|".join(map(str, quota)), rules.Quota(n, space, quota)
    else:  # table
        space = linear_space(args.m)
        size = args.m ** n
        if args.exhaustive:
            budget.check_profiles(args.m ** size, "table enumeration")
            for outcomes in itertools.product(range(args.m), repeat=size):
                yield "".join(map(str, outcomes)), rules.TopsOnlyTable(n, space, outcomes)
        else:
            rng = random.Random(args.seed)
            alts = set(range(args.m))
            produced = 0
            while produced < args.samples:
                outcomes = tuple(rng.randrange(args.m) for _ in range(size))
                if set(outcomes) != alts:
                    continue  # sample onto rules only: the veto test targets them
                produced += 1
                yield "".join(map(str, outcomes)), rules.TopsOnlyTable(n, space, outcomes)


def cmd_sweep(args) -> int:
    budget = _budget_from(args)
    if args.family in ("median", "gmv", "table") and args.m is None:
        print("error: --m is required for this family", file=sys.stderr)
        return EXIT_USAGE
    if args.family in ("committees", "quota") and args.objects is None:
        print("error: --objects is required for this family", file=sys.stderr)
        return EXIT_USAGE
    if args.family == "table" and not args.exhaustive and args.samples is None:
        print("error: table sweeps need --samples N or --exhaustive", file=sys.stderr)
        return EXIT_USAGE

    space_label = f"m={args.m}" if args.m is not None else f"K={args.objects}"
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["family", "n", "space", "params", "predicate",
                        "nom_veto", "nom_brute", "agree"])
        total = discrepancies = 0
        for label, rule in _sweep_rules(args, budget):
            predicate = characterization.family_predicate(rule)
            nom_veto = analysis.is_nom_veto(rule, budget)
            nom_brute = oracle.is_nom_brute(rule, budget).holds
            verdicts = [nom_veto, nom_brute] + ([predicate.nom] if predicate else [])
            agree = len(set(verdicts)) == 1
            total += 1
            discrepancies += not agree
            writer.writerow([
                args.family, args.n, space_label, label,
                "" if predicate is None else ("yes" if predicate.nom else "no"),
                "yes" if nom_veto else "no",
                "yes" if nom_brute else "no",
                "yes" if agree else "no",
            ])
        out.write(f"# rules={total} discrepancies={discrepancies}\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK if discrepancies == 0 else EXIT_MANIPULABLE


# -- entry point ------------------------------------------------------------


def _add_common(parser) -> None:
    parser.add_argument("--format", choices=("text", "structured"), default="text",
                        help="text report or JSON")
    parser.add_argument("--budget-profiles", type=int, default=None, metavar="N",
                        help="override the profile-enumeration budget")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for sampled table sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nomvote",
        description="Analyze tops-only voting rules for obvious manipulability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full NOM analysis of one rule config")
    p.add_argument("config")
    p.add_argument("--axioms", nargs="*", choices=AXIOM_CHOICES, default=[],
                   help="axioms to verify alongside the NOM tests")
    p.add_argument("--cap", type=int, default=10,
                   help="witnesses kept per (agent, kind); totals stay exact")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("option-set", help="one agent's reachable outcomes for a reported top")
    p.add_argument("config")
    p.add_argument("--agent", type=int, required=True)
    p.add_argument("--top", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_option_set)

    p = sub.add_parser("veto", help="veto and strong-veto sets per agent")
    p.add_argument("config")
    _add_common(p)
    p.set_defaults(func=cmd_veto)

    p = sub.add_parser("witness", help="list obvious-manipulation witnesses")
    p.add_argument("config")
    p.add_argument("--cap", type=int, default=10,
                   help="witnesses kept per (agent, kind); totals stay exact")
    _add_common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("sweep", help="enumerate a family and cross-check all verdicts")
    p.add_argument("--family", required=True,
                   choices=("median", "gmv", "committees", "quota", "table"))
    p.add_argument("--n", type=int, required=True, help="number of agents")
    p.add_argument("--m", type=int, default=None, help="alternatives (linear families)")
    p.add_argument("--objects", type=int, default=None, help="objects (subset families)")
    p.add_argument("--samples", type=int, default=None,
                   help="number of sampled onto tables (table family)")
    p.add_argument("--exhaustive", action="store_true",
                   help="enumerate every table instead of sampling")
    p.add_argument("--out", default=None, help="write the CSV here instead of stdout")
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("validate", help="parse and validate a rule config")
    p.add_argument("config")
    _add_common(p)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NomvoteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
