from fractions import Fraction

import pytest

from hyperext.cliques import clique_count
from hyperext.extremal import (
    ExtremalParams, Regime, build_extremal_family, check_rainbow_t, closed_form_clique_count,
    complete_head_clique_count, crossover_check, crossover_failures, hypothesis_threshold,
    level, meets_threshold, n_star, n_star_exact, n_star_floor, rainbow_hypothesis_check,
    rainbow_t_range, rainbow_threshold, recurrence_check, recurrence_sides, regime_of,
    theorem_bound)
from hyperext.hypergraph import ColoredFamily, Hypergraph
from hyperext.inequalities import E_UPPER
from hyperext.shifting import is_stable, stable_closure_check

from tests.oracles import random_hypergraph


@pytest.mark.parametrize(
    'k, r, s, expected', (
        (2, 3, 3, Regime.LOWER),
        (2, 3, 4, Regime.LOWER),
        (2, 3, 5, Regime.MIDDLE),
        (2, 3, 6, Regime.MIDDLE),
        (2, 3, 7, Regime.UPPER),
        (2, 3, 8, Regime.UPPER),
        (1, 2, 2, Regime.LOWER),
        (1, 2, 3, Regime.UPPER),
        (3, 2, 4, Regime.LOWER),
        (3, 2, 5, Regime.UPPER),
        (3, 2, 7, Regime.UPPER),
    )
)
def test_regime_of(k, r, s, expected):
    assert regime_of(k, r, s) is expected
    assert str(expected) == expected.value


@pytest.mark.parametrize('k, r, s', ((2, 3, 9), (2, 3, 2), (2, 1, 2)))
def test_regime_out_of_range(k, r, s):
    with pytest.raises(ValueError):
        regime_of(k, r, s)


@pytest.mark.parametrize('k, r, s, expected', ((2, 3, 3, 1), (2, 3, 5, 2), (2, 3, 8, 3)))
def test_level(k, r, s, expected):
    assert level(k, r, s) == expected


class TestExtremalParams:
    def test_derived_values(self):
        params = ExtremalParams(12, 2, 3, 5)

        assert params.a == 2
        assert params.head_size == 5
        assert params.regime is Regime.MIDDLE
        assert params == ExtremalParams(12, 2, 3, 5)
        assert str(params) == 'n=12, k=2, r=3, s=5'

    @pytest.mark.parametrize('n, k, r, s', ((6, 0, 2, 3), (6, 1, 7, 7), (6, 1, 3, 2)))
    def test_invalid(self, n, k, r, s):
        with pytest.raises(ValueError):
            ExtremalParams(n, k, r, s)


class TestExtremalFamily:
    def test_star(self):
        family = build_extremal_family(5, 1, 2, 1)

        assert [edge.labels() for edge in family] == [(1, 2), (1, 3), (1, 4), (1, 5)]

    def test_head_must_fit(self):
        with pytest.raises(ValueError):
            build_extremal_family(4, 2, 3, 2)

    @pytest.mark.parametrize('n, k, r, a', ((7, 2, 3, 1), (8, 2, 3, 2), (6, 1, 3, 3)))
    def test_stable(self, n, k, r, a):
        assert is_stable(build_extremal_family(n, k, r, a))

    @pytest.mark.parametrize(
        'n, k, r, a', (
            (8, 1, 2, 1), (8, 2, 2, 2), (9, 2, 3, 1), (9, 2, 3, 2), (9, 2, 3, 3), (10, 1, 4, 2),
        )
    )
    def test_closed_form_matches_count(self, n, k, r, a):
        family = build_extremal_family(n, k, r, a)
        for s in range(r, n + 1):
            assert closed_form_clique_count(n, k, r, a, s) == clique_count(family, s)

    @pytest.mark.parametrize('n', range(1, 15))
    def test_closed_form_matches_count_for_every_small_family(self, n):
        for r in range(1, min(n, 4) + 1):
            for k in range(1, 4):
                for a in range(1, r + 1):
                    if a * k + a - 1 > n:
                        continue
                    family = build_extremal_family(n, k, r, a)

                    assert is_stable(family)
                    assert stable_closure_check(family)
                    for s in range(r, n + 1):
                        assert clique_count(family, s) == \
                            closed_form_clique_count(n, k, r, a, s), (n, k, r, a, s)

    def test_closed_form_example(self):
        assert closed_form_clique_count(10, 2, 3, 1, 3) == 64
        assert closed_form_clique_count(12, 2, 3, 2, 5) == 36


@pytest.mark.parametrize('n', range(4, 12))
@pytest.mark.parametrize('k, r', ((2, 2), (2, 3), (3, 3), (3, 4)))
def test_recurrence(n, k, r):
    if n - 1 < max(r, k - 1):
        pytest.skip('too few vertices')
    for s in range(r, n + 1):
        assert recurrence_check(n, k, r, s)


@pytest.mark.parametrize('r', range(2, 5))
@pytest.mark.parametrize('k', range(2, 6))
def test_recurrence_up_to_twenty_vertices(k, r):
    for n in range(r * k + r, 21):
        for s in range(r, 9):
            assert recurrence_check(n, k, r, s), (n, k, r, s)


def test_recurrence_sides():
    assert recurrence_sides(4, 2, 2, 2) == (5, 5)
    with pytest.raises(ValueError):
        recurrence_sides(4, 1, 2, 2)


class TestNStar:
    def test_exact_value(self):
        assert n_star_exact(1, 3, 4) == Fraction(27, 32)
        assert n_star(1, 3, 4) == pytest.approx(27 / 32)
        assert n_star_floor(1, 3, 4) == 0

    def test_irrational_value(self):
        assert n_star_exact(3, 3, 5) is None
        assert n_star(3, 3, 5) == pytest.approx(3 ** 1.5 * 6 / 5)
        assert n_star_floor(3, 3, 5) == 6

    def test_outside_range(self):
        with pytest.raises(ValueError):
            n_star(2, 3, 7)

    @pytest.mark.parametrize(
        'k, r, s', ((1, 3, 4), (3, 3, 5), (3, 3, 6), (4, 3, 7), (2, 4, 6), (3, 4, 9)))
    def test_crossover(self, k, r, s):
        assert crossover_failures(k, r, s) == []
        assert crossover_check(k, r, s)


class TestTheoremBound:
    def test_upper(self):
        bound = theorem_bound(ExtremalParams(6, 1, 2, 3))

        assert bound.bound == 1
        assert bound.gap_bound == 0
        assert bound.regime is Regime.UPPER
        assert bound.a == 2

    def test_upper_needs_room_for_head(self):
        with pytest.raises(ValueError):
            theorem_bound(ExtremalParams(3, 1, 3, 5))

    def test_lower(self):
        bound = theorem_bound(ExtremalParams(10, 2, 3, 3))

        assert (bound.bound, bound.a, bound.gap_bound) == (64, 1, None)

    def test_middle(self):
        bound = theorem_bound(ExtremalParams(12, 2, 3, 5))

        assert (bound.bound, bound.a) == (36, 2)

    def test_complete_head(self):
        assert complete_head_clique_count(2, 3, 7) == 8


class TestThresholds:
    def test_upper_regime_threshold(self):
        assert hypothesis_threshold(ExtremalParams(6, 1, 2, 3)) == 3

    def test_lower_regime_threshold(self):
        threshold = hypothesis_threshold(ExtremalParams(10, 2, 3, 3))

        assert threshold == 4 * (E_UPPER * 3) ** 2 * 2
        assert not meets_threshold(10, threshold)

    def test_rainbow_threshold(self):
        assert rainbow_threshold(2, 2, 2) == 4 * 2 * 2 * (E_UPPER * 2) ** 2

    def test_meets_threshold(self):
        assert meets_threshold(3, Fraction(3))
        assert not meets_threshold(3, Fraction(301, 100))


class TestRainbowHypothesis:
    def test_verdicts(self):
        family = ColoredFamily([
            Hypergraph.complete(6, 2),
            build_extremal_family(6, 1, 2, 1),
            Hypergraph.empty(6, 2),
        ])

        assert rainbow_hypothesis_check(family, 3) == [True, False, False]

    @pytest.mark.parametrize('t', (1, 4))
    def test_invalid_t(self, t):
        family = ColoredFamily([Hypergraph.complete(6, 2)] * 3)

        with pytest.raises(ValueError):
            rainbow_hypothesis_check(family, t)

    @pytest.mark.parametrize(
        'n, k, r', [(n, k, r) for r in (2, 3) for k in (1, 2, 3) for n in range(r * k, 11)])
    def test_agrees_with_direct_counts(self, n, k, r):
        boundary = build_extremal_family(n, k - 1, r, 1)
        for seed in range(5):
            family = ColoredFamily([
                random_hypergraph(n, r, (seed + 1) / 6, seed * k + color) for color in range(k)
            ])
            for t in rainbow_t_range(k, r):
                expected = [
                    any(clique_count(member, s) > clique_count(boundary, s)
                        for s in range(r, t + 1))
                    for member in family
                ]

                assert rainbow_hypothesis_check(family, t) == expected

    def test_single_color(self):
        family = ColoredFamily([Hypergraph.from_labels(5, 2, [(2, 4)])])

        assert rainbow_hypothesis_check(family, 2) == [True]
        assert rainbow_hypothesis_check(ColoredFamily([Hypergraph.empty(5, 2)]), 2) == [False]

    @pytest.mark.parametrize(
        'k, r, expected',
        ((1, 2, [2]), (1, 3, [3]), (2, 2, [2]), (3, 2, [2, 3]), (4, 3, [3, 4, 5])))
    def test_t_range(self, k, r, expected):
        assert list(rainbow_t_range(k, r)) == expected

    @pytest.mark.parametrize('k, r, t', ((1, 2, 3), (1, 2, 1), (0, 2, 2)))
    def test_check_rainbow_t_rejects(self, k, r, t):
        with pytest.raises(ValueError):
            check_rainbow_t(k, r, t)
