"""Alternative spaces, strict preferences, and budget-guarded enumeration.

Alternatives are always canonical integer indices ``0..m-1``.  For a linear
space this is the natural order on the line; for a subsets space over K
objects, alternative ``x`` is the subset whose characteristic number is
``x`` (object ``j`` is a member iff bit ``j`` of ``x`` is set, so m = 2**K).
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import BudgetExceededError, WrongSpaceKindError

__all__ = [
    "AlternativeSpace",
    "Budget",
    "Preference",
    "Profile",
    "TopVector",
    "best_in",
    "default_budget",
    "enumerate_preferences",
    "enumerate_top_vectors",
    "is_separable",
    "is_single_peaked",
    "linear_space",
    "preference_with_top_and_bottom",
    "subsets_space",
    "worst_in",
]

#: A vector of agents' top alternatives; the only input a tops-only rule reads.
TopVector = tuple[int, ...]

DEFAULT_MAX_PREFERENCES = 40_320  # 8!
DEFAULT_MAX_PROFILES = 10_000_000


@dataclass(frozen=True)
class Budget:
    """Hard caps on enumeration sizes.

    ``max_preferences`` bounds m! (preference enumerations), ``max_profiles``
    bounds profile-shaped scans such as m**n top vectors or (m!)**n full
    preference profiles.
    """

    max_preferences: int = DEFAULT_MAX_PREFERENCES
    max_profiles: int = DEFAULT_MAX_PROFILES

    def check_preferences(self, required: int, what: str = "preference enumeration") -> None:
        if required > self.max_preferences:
            raise BudgetExceededError(what, required, self.max_preferences)

    def check_profiles(self, required: int, what: str = "profile enumeration") -> None:
        if required > self.max_profiles:
            raise BudgetExceededError(what, required, self.max_profiles)


def default_budget() -> Budget:
    """Default budget, overridable via ``NOMVOTE_BUDGET=profiles[,preferences]``."""
    raw = os.environ.get("NOMVOTE_BUDGET", "").strip()
    if not raw:
        return Budget()
    parts = [int(p) for p in raw.split(",")]
    if len(parts) == 1:
        return Budget(max_profiles=parts[0])
    return Budget(max_preferences=parts[1], max_profiles=parts[0])


@dataclass(frozen=True)
class AlternativeSpace:
    """The finite set of alternatives, either a line or a powerset.

    kind ``"linear"``: alternatives are 0..m-1 in their natural order.
    kind ``"subsets"``: alternatives are all subsets of ``num_objects``
    objects, indexed by characteristic number.
    """

    kind: str
    m: int
    num_objects: int | None = None

    def __post_init__(self):
        if self.kind not in ("linear", "subsets"):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.kind == "linear":
            if self.m < 2:
                raise ValueError("a linear space needs at least 2 alternatives")
            if self.num_objects is not None:
                raise ValueError("num_objects only applies to subsets spaces")
        else:
            if self.num_objects is None or self.num_objects < 2:
                raise ValueError("a subsets space needs at least 2 objects")
            if self.m != 2 ** self.num_objects:
                raise ValueError("subsets space must have m = 2**num_objects")

    @property
    def alternatives(self) -> range:
        return range(self.m)


def linear_space(m: int) -> AlternativeSpace:
    """Linearly ordered alternatives 0..m-1."""
    return AlternativeSpace("linear", m)


def subsets_space(num_objects: int) -> AlternativeSpace:
    """All subsets of ``num_objects`` objects, indexed by characteristic number."""
    return AlternativeSpace("subsets", 2 ** num_objects, num_objects)


@dataclass(frozen=True)
class Preference:
    """A strict linear order over alternatives, best first."""

    ranking: tuple[int, ...]

    def __post_init__(self):
        m = len(self.ranking)
        if m < 2 or sorted(self.ranking) != list(range(m)):
            raise ValueError(f"ranking must be a permutation of 0..m-1, got {self.ranking}")

    @property
    def m(self) -> int:
        return len(self.ranking)

    @property
    def top(self) -> int:
        return self.ranking[0]

    @property
    def bottom(self) -> int:
        return self.ranking[-1]

    def rank_of(self, x: int) -> int:
        """Position of ``x`` in the ranking; 0 is best."""
        return self.ranking.index(x)

    def prefers(self, x: int, y: int) -> bool:
        """True iff ``x`` is ranked strictly above ``y``."""
        return self.ranking.index(x) < self.ranking.index(y)


@dataclass(frozen=True)
class Profile:
    """One preference per agent."""

    prefs: tuple[Preference, ...]

    def __post_init__(self):
        if len(self.prefs) < 2:
            raise ValueError("a profile needs at least 2 agents")
        if len({p.m for p in self.prefs}) != 1:
            raise ValueError("all preferences must rank the same alternatives")

    @property
    def n(self) -> int:
        return len(self.prefs)

    def tops(self) -> TopVector:
        return tuple(p.top for p in self.prefs)


def enumerate_preferences(space: AlternativeSpace, budget: Budget | None = None) -> list[Preference]:
    """All m! strict preferences, lexicographic by ranking."""
    budget = budget or default_budget()
    budget.check_preferences(math.factorial(space.m))
    return [Preference(r) for r in itertools.permutations(range(space.m))]


def enumerate_top_vectors(
    space: AlternativeSpace, n: int, budget: Budget | None = None
) -> Iterator[TopVector]:
    """All m**n top vectors in lexicographic order (agent 0 most significant)."""
    budget = budget or default_budget()
    budget.check_profiles(space.m ** n, "top-vector enumeration")
    return itertools.product(range(space.m), repeat=n)


def preference_with_top_and_bottom(top: int, bottom: int, space: AlternativeSpace) -> Preference:
    """The canonical preference placing ``top`` first and ``bottom`` last.

    The remaining alternatives fill the middle in ascending index order.
    """
    if top == bottom:
        raise ValueError("top and bottom must differ")
    middle = [x for x in space.alternatives if x != top and x != bottom]
    return Preference((top, *middle, bottom))


def best_in(pref: Preference, alts: Iterable[int]) -> int:
    """The member of ``alts`` that ``pref`` ranks highest."""
    alts = set(alts)
    if not alts:
        raise ValueError("cannot pick the best of an empty set")
    return min(alts, key=pref.ranking.index)


def worst_in(pref: Preference, alts: Iterable[int]) -> int:
    """The member of ``alts`` that ``pref`` ranks lowest."""
    alts = set(alts)
    if not alts:
        raise ValueError("cannot pick the worst of an empty set")
    return max(alts, key=pref.ranking.index)


def is_single_peaked(pref: Preference, space: AlternativeSpace) -> bool:
    """True iff the preference strictly falls off on both sides of its top.

    Only meaningful on a linear space: moving away from the top along the
    line must make alternatives strictly worse.
    """
    if space.kind != "linear":
        raise WrongSpaceKindError("single-peakedness is defined on linear spaces only")
    rank = pref.ranking.index
    t = pref.top
    left_ok = all(rank(x) > rank(x + 1) for x in range(0, t))
    right_ok = all(rank(x) < rank(x + 1) for x in range(t, space.m - 1))
    return left_ok and right_ok


def is_separable(pref: Preference, space: AlternativeSpace) -> bool:
    """True iff adding any one object to a set moves it the same way as vs. the empty set.

    For every set S and object k not in S: (S + k) beats S exactly when {k}
    beats the empty set.
    """
    if space.kind != "subsets":
        raise WrongSpaceKindError("separability is defined on subsets spaces only")
    rank = pref.ranking.index
    k_count = space.num_objects
    for s in range(space.m):
        for k in range(k_count):
            if s >> k & 1:
                continue
            adds_value = rank(s | 1 << k) < rank(s)
            k_is_good = rank(1 << k) < rank(0)
            if adds_value != k_is_good:
                return False
    return True


def single_peaked_filter(space: AlternativeSpace) -> Callable[[Preference], bool]:
    """Predicate selecting the single-peaked preferences of a linear space."""
    return lambda pref: is_single_peaked(pref, space)


def separable_filter(space: AlternativeSpace) -> Callable[[Preference], bool]:
    """Predicate selecting the separable preferences of a subsets space."""
    return lambda pref: is_separable(pref, space)
