"""Rule families: constructors, validation, evaluation, and outcome tables.

Every rule here is tops-only by construction: evaluation consumes a
``TopVector`` and nothing else.  Agent coalitions are encoded as bitmasks
with bit ``i`` standing for agent ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from . import _backend
from .domain import AlternativeSpace, Budget, TopVector, default_budget
from .errors import DimensionMismatchError

__all__ = [
    "Committees",
    "Dictatorship",
    "GeneralizedMedian",
    "Median",
    "Quota",
    "Rule",
    "StatusQuo",
    "TopsOnlyTable",
    "build_table",
    "evaluate",
    "gmv_from_median",
    "is_onto_tops",
    "quota_to_committees",
    "validate",
]


def _as_tuple(obj):
    return obj if isinstance(obj, tuple) else tuple(obj)


@dataclass(frozen=True)
class Median:
    """Median of the n agent tops and n-1 fixed ballots on a linear space.

    ``alpha`` must be nondecreasing; the median of the 2n-1 values is unique.
    """

    n: int
    space: AlternativeSpace
    alpha: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", _as_tuple(self.alpha))


@dataclass(frozen=True)
class GeneralizedMedian:
    """Min-max rule over a monotone family of fixed ballots, one per coalition.

    ``ballots[mask]`` is the ballot of the agent subset ``mask``; the grand
    coalition's ballot is 0 and the empty coalition's is m-1.  The outcome is
    the minimum over coalitions S of the maximum of S's tops and S's ballot
    (for the empty coalition the maximum is just its ballot).
    """

    n: int
    space: AlternativeSpace
    ballots: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ballots", _as_tuple(self.ballots))

    def ballot_for_agents(self, agents) -> int:
        mask = 0
        for i in agents:
            mask |= 1 << i
        return self.ballots[mask]


@dataclass(frozen=True)
class Committees:
    """Object-by-object voting: object k is chosen iff the set of agents whose
    top subset contains k is a winning coalition.

    ``committees[k]`` lists the minimal winning coalitions of object k as
    agent bitmasks (an antichain; any superset of a member wins).
    """

    n: int
    space: AlternativeSpace
    committees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "committees", tuple(_as_tuple(w) for w in self.committees))

    def wins(self, k: int, support_mask: int) -> bool:
        return any(mc & support_mask == mc for mc in self.committees[k])


@dataclass(frozen=True)
class Quota:
    """Anonymous committee voting: object k is chosen iff at least
    ``quota[k]`` agents have it in their top subset."""

    n: int
    space: AlternativeSpace
    quota: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "quota", _as_tuple(self.quota))


@dataclass(frozen=True)
class StatusQuo:
    """Unanimity rule with a fallback: the common top if all agents agree,
    otherwise the anchor alternative."""

    n: int
    space: AlternativeSpace
    anchor: int


@dataclass(frozen=True)
class Dictatorship:
    """Always selects one fixed agent's top."""

    n: int
    space: AlternativeSpace
    dictator: int


@dataclass(frozen=True)
class TopsOnlyTable:
    """An arbitrary tops-only rule given by its full outcome table.

    ``outcomes`` has one entry per top vector, in lexicographic order with
    agent 0 most significant.
    """

    n: int
    space: AlternativeSpace
    outcomes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "outcomes", _as_tuple(self.outcomes))


Rule = Union[Median, GeneralizedMedian, Committees, Quota, StatusQuo, Dictatorship, TopsOnlyTable]


def top_vector_index(tops: TopVector, m: int) -> int:
    """Lexicographic index of a top vector (agent 0 most significant)."""
    idx = 0
    for t in tops:
        idx = idx * m + t
    return idx


def _full_mask(n: int) -> int:
    return (1 << n) - 1


def _bits(mask: int, n: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def evaluate(rule: Rule, tops: TopVector) -> int:
    """The alternative the rule selects at this top vector."""
    m = rule.space.m
    if len(tops) != rule.n:
        raise DimensionMismatchError(f"expected {rule.n} tops, got {len(tops)}")
    if any(not 0 <= t < m for t in tops):
        raise DimensionMismatchError(f"tops must lie in 0..{m - 1}")

    if isinstance(rule, Median):
        pool = sorted(tuple(tops) + rule.alpha)
        return pool[rule.n - 1]  # unique median of 2n-1 values
    if isinstance(rule, GeneralizedMedian):
        best = rule.space.m  # above every alternative
        for mask in range(1 << rule.n):
            v = rule.ballots[mask]
            for j in range(rule.n):
                if mask >> j & 1 and tops[j] > v:
                    v = tops[j]
            if v < best:
                best = v
        return best
    if isinstance(rule, (Committees, Quota)):
        num_objects = rule.space.num_objects
        chosen = 0
        for k in range(num_objects):
            if isinstance(rule, Quota):
                count = sum(1 for t in tops if t >> k & 1)
                if count >= rule.quota[k]:
                    chosen |= 1 << k
            else:
                support = 0
                for i, t in enumerate(tops):
                    if t >> k & 1:
                        support |= 1 << i
                if rule.wins(k, support):
                    chosen |= 1 << k
        return chosen
    if isinstance(rule, StatusQuo):
        first = tops[0]
        return first if all(t == first for t in tops) else rule.anchor
    if isinstance(rule, Dictatorship):
        return tops[rule.dictator]
    if isinstance(rule, TopsOnlyTable):
        return rule.outcomes[top_vector_index(tops, m)]
    raise TypeError(f"unknown rule type {type(rule).__name__}")


def validate(rule: Rule) -> list[str]:
    """Check all invariants of the rule's parameters.

    Returns a list of human-readable violations with field paths; an empty
    list means the rule is well-formed.  Never raises.
    """
    v: list[str] = []
    m = rule.space.m
    n = rule.n
    if n < 2:
        v.append(f"n: need at least 2 agents, got {n}")

    if isinstance(rule, Median):
        if rule.space.kind != "linear":
            v.append("space: median rules need a linear space")
        if len(rule.alpha) != n - 1:
            v.append(f"alpha: expected {n - 1} fixed ballots, got {len(rule.alpha)}")
        for i, a in enumerate(rule.alpha):
            if not 0 <= a < m:
                v.append(f"alpha[{i}]: {a} outside 0..{m - 1}")
        if any(a > b for a, b in zip(rule.alpha, rule.alpha[1:])):
            v.append("alpha: must be nondecreasing")
    elif isinstance(rule, GeneralizedMedian):
        if rule.space.kind != "linear":
            v.append("space: generalized median rules need a linear space")
        if len(rule.ballots) != 1 << n:
            v.append(f"ballots: expected {1 << n} entries (one per coalition), got {len(rule.ballots)}")
            return v
        for mask, b in enumerate(rule.ballots):
            if not 0 <= b < m:
                v.append(f"ballots[{_bits(mask, n)}]: {b} outside 0..{m - 1}")
        if rule.ballots[_full_mask(n)] != 0:
            v.append(f"ballots[{_bits(_full_mask(n), n)}]: grand coalition must have ballot 0")
        if rule.ballots[0] != m - 1:
            v.append(f"ballots[{_bits(0, n)}]: empty coalition must have ballot {m - 1}")
        # monotone over the covering relation, which implies full monotonicity
        for mask in range(1 << n):
            for j in range(n):
                if mask >> j & 1:
                    continue
                bigger = mask | 1 << j
                if rule.ballots[bigger] > rule.ballots[mask]:
                    v.append(
                        f"ballots[{_bits(bigger, n)}]: exceeds ballots[{_bits(mask, n)}]"
                        " (larger coalitions cannot have larger ballots)"
                    )
        return v
    elif isinstance(rule, Committees):
        if rule.space.kind != "subsets":
            v.append("space: committee rules need a subsets space")
            return v
        if len(rule.committees) != rule.space.num_objects:
            v.append(
                f"committees: expected {rule.space.num_objects} committees, got {len(rule.committees)}"
            )
            return v
        for k, coals in enumerate(rule.committees):
            if not coals:
                v.append(f"committees[{k}]: committee must be nonempty")
            for j, mc in enumerate(coals):
                if not 0 < mc <= _full_mask(n):
                    v.append(f"committees[{k}][{j}]: coalition must be a nonempty subset of agents")
            for (j1, a), (j2, b) in itertools.combinations(enumerate(coals), 2):
                if a & b == a or a & b == b:
                    v.append(
                        f"committees[{k}]: coalitions {_bits(a, n)} and {_bits(b, n)}"
                        " are nested (minimal coalitions must form an antichain)"
                    )
    elif isinstance(rule, Quota):
        if rule.space.kind != "subsets":
            v.append("space: quota rules need a subsets space")
            return v
        if len(rule.quota) != rule.space.num_objects:
            v.append(f"quota: expected {rule.space.num_objects} quotas, got {len(rule.quota)}")
        for k, q in enumerate(rule.quota):
            if not 1 <= q <= n:
                v.append(f"quota[{k}]: {q} outside 1..{n}")
    elif isinstance(rule, StatusQuo):
        if not 0 <= rule.anchor < m:
            v.append(f"anchor: {rule.anchor} outside 0..{m - 1}")
    elif isinstance(rule, Dictatorship):
        if not 0 <= rule.dictator < n:
            v.append(f"dictator: {rule.dictator} outside 0..{n - 1}")
    elif isinstance(rule, TopsOnlyTable):
        if len(rule.outcomes) != m ** n:
            v.append(f"outcomes: expected {m ** n} entries, got {len(rule.outcomes)}")
        else:
            for i, x in enumerate(rule.outcomes):
                if not 0 <= x < m:
                    v.append(f"outcomes[{i}]: {x} outside 0..{m - 1}")
    else:
        v.append(f"unknown rule type {type(rule).__name__}")
    return v


def quota_to_committees(rule: Quota) -> Committees:
    """The committee form of a quota rule: minimal winning coalitions are
    exactly the agent subsets of size quota[k]."""
    committees = []
    for q in rule.quota:
        coals = sorted(
            sum(1 << i for i in combo)
            for combo in itertools.combinations(range(rule.n), q)
        )
        committees.append(tuple(coals))
    return Committees(rule.n, rule.space, tuple(committees))


def gmv_from_median(rule: Median) -> GeneralizedMedian:
    """The ballot-family form of a median rule.

    A coalition of size s (0 < s < n) gets the (n-s)-th smallest fixed ballot;
    the grand coalition gets 0 and the empty coalition gets m-1.  Evaluation
    agrees with the median rule on every top vector (covered by tests).
    """
    n, m = rule.n, rule.space.m
    ballots = []
    for mask in range(1 << n):
        s = mask.bit_count()
        if s == n:
            ballots.append(0)
        elif s == 0:
            ballots.append(m - 1)
        else:
            ballots.append(rule.alpha[n - s - 1])
    return GeneralizedMedian(n, rule.space, tuple(ballots))


def _fill_generic(rule: Rule) -> np.ndarray:
    size = rule.space.m ** rule.n
    return np.fromiter(
        (evaluate(rule, tops) for tops in itertools.product(range(rule.space.m), repeat=rule.n)),
        dtype=np.int32,
        count=size,
    )


def _fill_compiled(rule: Rule) -> np.ndarray | None:
    core = _backend.active()
    n, m = rule.n, rule.space.m
    if isinstance(rule, Median):
        return core.fill_median_table(n, m, np.asarray(rule.alpha, dtype=np.int32))
    if isinstance(rule, GeneralizedMedian):
        return core.fill_gmv_table(n, m, np.asarray(rule.ballots, dtype=np.int32))
    if isinstance(rule, Committees):
        offsets = np.zeros(len(rule.committees) + 1, dtype=np.int32)
        flat: list[int] = []
        for k, coals in enumerate(rule.committees):
            flat.extend(coals)
            offsets[k + 1] = len(flat)
        return core.fill_committee_table(
            n, rule.space.num_objects, offsets, np.asarray(flat, dtype=np.int32)
        )
    if isinstance(rule, Quota):
        return core.fill_quota_table(
            n, rule.space.num_objects, np.asarray(rule.quota, dtype=np.int32)
        )
    return None


@lru_cache(maxsize=4096)
def _table_for(rule: Rule) -> np.ndarray:
    n, m = rule.n, rule.space.m
    size = m ** n
    if isinstance(rule, TopsOnlyTable):
        table = np.asarray(rule.outcomes, dtype=np.int32)
    elif isinstance(rule, Dictatorship):
        i = rule.dictator
        table = np.tile(np.repeat(np.arange(m, dtype=np.int32), m ** (n - 1 - i)), m ** i)
    elif isinstance(rule, StatusQuo):
        table = np.full(size, rule.anchor, dtype=np.int32)
        unanimity_step = (size - 1) // (m - 1)  # index of the all-x vector
        for x in range(m):
            table[x * unanimity_step] = x
    elif _backend.using_compiled():
        table = _fill_compiled(rule)
    else:
        table = _fill_generic(rule)
    table.flags.writeable = False
    return table


def build_table(rule: Rule, budget: Budget | None = None) -> np.ndarray:
    """The rule's full outcome table over all m**n top vectors.

    Lexicographic order, agent 0 most significant.  The array is cached and
    read-only.  Assumes a rule that passes :func:`validate`.
    """
    budget = budget or default_budget()
    budget.check_profiles(rule.space.m ** rule.n, "outcome table")
    return _table_for(rule)


def is_onto_tops(rule: Rule, budget: Budget | None = None) -> bool:
    """True iff every alternative is selected at some top vector.

    A valid test of ontoness for tops-only rules, since any top vector is
    realized by some preference profile.
    """
    table = build_table(rule, budget)
    return np.unique(table).size == rule.space.m


def clear_table_cache() -> None:
    _table_for.cache_clear()
