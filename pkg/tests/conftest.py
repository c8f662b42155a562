import itertools
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make `reference` importable

from nomvote import (
    Committees,
    GeneralizedMedian,
    Median,
    Quota,
    TopsOnlyTable,
    linear_space,
    subsets_space,
)


@pytest.fixture(scope="session")
def line3():
    return linear_space(3)


@pytest.fixture(scope="session")
def line4():
    return linear_space(4)


@pytest.fixture(scope="session")
def pairspace():
    return subsets_space(2)


def all_median_rules(n, m):
    space = linear_space(m)
    return [
        Median(n, space, alpha)
        for alpha in itertools.combinations_with_replacement(range(m), n - 1)
    ]


def all_gmv_rules_n2(m):
    """All 9 monotone two-agent ballot families (every singleton pair is monotone)."""
    space = linear_space(m)
    out = []
    for p1 in range(m):
        for p2 in range(m):
            out.append(GeneralizedMedian(2, space, (m - 1, p1, p2, 0)))
    return out


def antichains(n):
    """Nonempty antichains of nonempty agent subsets, as sorted mask tuples."""
    subsets = list(range(1, 1 << n))
    out = []
    for r in range(1, len(subsets) + 1):
        for combo in itertools.combinations(subsets, r):
            if all(a & b not in (a, b) for a, b in itertools.combinations(combo, 2)):
                out.append(combo)
    return out


def all_committee_rules(n, num_objects):
    space = subsets_space(num_objects)
    chains = antichains(n)
    return [
        Committees(n, space, combo)
        for combo in itertools.product(chains, repeat=num_objects)
    ]


def all_quota_rules(n, num_objects):
    space = subsets_space(num_objects)
    return [
        Quota(n, space, quota)
        for quota in itertools.product(range(1, n + 1), repeat=num_objects)
    ]


def all_tables(n, m):
    space = linear_space(m)
    return [
        TopsOnlyTable(n, space, outcomes)
        for outcomes in itertools.product(range(m), repeat=m ** n)
    ]


def sample_onto_tables(n, m, count, seed):
    """Seeded uniform samples among onto outcome tables (rejection sampling)."""
    space = linear_space(m)
    rng = random.Random(seed)
    alts = set(range(m))
    out = []
    while len(out) < count:
        outcomes = tuple(rng.randrange(m) for _ in range(m ** n))
        if set(outcomes) == alts:
            out.append(TopsOnlyTable(n, space, outcomes))
    return out
