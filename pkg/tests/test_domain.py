import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nomvote import (
    Budget,
    BudgetExceededError,
    Preference,
    WrongSpaceKindError,
    best_in,
    default_budget,
    enumerate_preferences,
    enumerate_top_vectors,
    is_separable,
    is_single_peaked,
    linear_space,
    preference_with_top_and_bottom,
    subsets_space,
    worst_in,
)
from reference import is_separable_def, is_single_peaked_def


class TestSpaces:
    def test_linear(self):
        space = linear_space(4)
        assert space.m == 4 and list(space.alternatives) == [0, 1, 2, 3]

    def test_subsets(self):
        space = subsets_space(2)
        assert space.m == 4 and space.num_objects == 2

    @pytest.mark.parametrize("m", [0, 1])
    def test_too_small(self, m):
        with pytest.raises(ValueError):
            linear_space(m)
        with pytest.raises(ValueError):
            subsets_space(m)


class TestPreference:
    def test_top_bottom(self):
        p = Preference((2, 0, 1))
        assert p.top == 2 and p.bottom == 1
        assert p.prefers(0, 1) and not p.prefers(1, 0)

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            Preference((0, 0, 1))


class TestEnumeration:
    def test_counts(self):
        assert len(enumerate_preferences(linear_space(2))) == 2
        prefs = enumerate_preferences(linear_space(3))
        assert len(prefs) == 6
        assert prefs[0].ranking == (0, 1, 2)  # lexicographic start
        assert len(enumerate_preferences(subsets_space(2))) == 24

    def test_all_distinct_permutations(self):
        for m in (2, 3, 4, 5):
            prefs = enumerate_preferences(linear_space(m))
            assert len({p.ranking for p in prefs}) == math.factorial(m)

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceededError):
            enumerate_preferences(linear_space(4), Budget(max_preferences=23))

    def test_top_vectors(self):
        vectors = list(enumerate_top_vectors(linear_space(3), 2))
        assert len(vectors) == 9
        assert vectors[0] == (0, 0)
        assert len(list(enumerate_top_vectors(linear_space(4), 3))) == 64
        assert next(iter(enumerate_top_vectors(linear_space(2), 2))) == (0, 0)

    def test_top_vector_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_top_vectors(linear_space(10), 8, Budget(max_profiles=10 ** 6))

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("NOMVOTE_BUDGET", "1000")
        assert default_budget().max_profiles == 1000
        monkeypatch.setenv("NOMVOTE_BUDGET", "1000,24")
        b = default_budget()
        assert b.max_profiles == 1000 and b.max_preferences == 24


class TestCanonicalPreference:
    def test_examples(self):
        assert preference_with_top_and_bottom(2, 0, linear_space(3)).ranking == (2, 1, 0)
        assert preference_with_top_and_bottom(0, 3, linear_space(4)).ranking == (0, 1, 2, 3)

    def test_equal_arguments(self):
        with pytest.raises(ValueError):
            preference_with_top_and_bottom(1, 1, linear_space(3))

    @given(st.integers(2, 8), st.data())
    @settings(max_examples=60)
    def test_always_valid(self, m, data):
        top = data.draw(st.integers(0, m - 1))
        bottom = data.draw(st.integers(0, m - 1).filter(lambda b: b != top))
        pref = preference_with_top_and_bottom(top, bottom, linear_space(m))
        assert pref.top == top and pref.bottom == bottom
        assert sorted(pref.ranking) == list(range(m))


class TestBestWorst:
    def test_examples(self):
        p = Preference((2, 0, 1))
        assert best_in(p, {0, 1}) == 0 and worst_in(p, {0, 1}) == 1
        assert best_in(Preference((0, 1, 2)), {0, 1, 2}) == 0
        p = Preference((1, 2, 0))
        assert best_in(p, {0, 2}) == 2 and worst_in(p, {0, 2}) == 0

    def test_empty(self):
        with pytest.raises(ValueError):
            best_in(Preference((0, 1)), set())
        with pytest.raises(ValueError):
            worst_in(Preference((0, 1)), set())


class TestSinglePeaked:
    def test_examples(self, line3):
        assert is_single_peaked(Preference((1, 0, 2)), line3)
        assert not is_single_peaked(Preference((0, 2, 1)), line3)
        for p in enumerate_preferences(linear_space(2)):
            assert is_single_peaked(p, linear_space(2))  # no triple exists

    def test_wrong_space(self, pairspace):
        with pytest.raises(WrongSpaceKindError):
            is_single_peaked(Preference((0, 1, 2, 3)), pairspace)

    def test_count_m3_via_definition(self, line3):
        by_library = [p for p in enumerate_preferences(line3) if is_single_peaked(p, line3)]
        by_definition = [
            r for r in itertools.permutations(range(3)) if is_single_peaked_def(r)
        ]
        assert len(by_library) == len(by_definition) == 4
        assert {p.ranking for p in by_library} == set(by_definition)

    @given(st.integers(2, 6), st.data())
    @settings(max_examples=80)
    def test_matches_pairwise_definition(self, m, data):
        ranking = tuple(data.draw(st.permutations(range(m))))
        space = linear_space(m)
        assert is_single_peaked(Preference(ranking), space) == is_single_peaked_def(ranking)


class TestSeparable:
    def test_examples(self, pairspace):
        # objects x=bit0, y=bit1: {x,y}=3, {x}=1, {y}=2, empty=0
        assert is_separable(Preference((3, 1, 2, 0)), pairspace)
        assert not is_separable(Preference((3, 0, 1, 2)), pairspace)

    def test_wrong_space(self, line3):
        with pytest.raises(WrongSpaceKindError):
            is_separable(Preference((0, 1, 2)), line3)

    def test_top_is_the_good_set(self, pairspace):
        for pref in enumerate_preferences(pairspace):
            if is_separable(pref, pairspace):
                goods = {k for k in range(2) if pref.prefers(1 << k, 0)}
                assert pref.top == sum(1 << k for k in goods)

    def test_matches_definition(self, pairspace):
        for pref in enumerate_preferences(pairspace):
            assert is_separable(pref, pairspace) == is_separable_def(pref.ranking, 2)

    def test_count_k2(self, pairspace):
        count = sum(is_separable(p, pairspace) for p in enumerate_preferences(pairspace))
        assert count == 8  # 4 good/bad splits, 2 free middle orders each
