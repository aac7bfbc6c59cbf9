import pytest

from hyperext.hypergraph import Hypergraph
from hyperext.matchings import MatchingNumberAtMost
from hyperext.search import Budget, BudgetExceeded
from hyperext.shifting import FamilyWalk, enumerate_all_hypergraphs, enumerate_stable, is_stable

from tests.oracles import naive_matching_number, naive_stable_count


@pytest.mark.parametrize(
    'n, r, expected', ((3, 3, 2), (4, 4, 2), (3, 2, 4), (5, 2, 16), (4, 1, 5)))
def test_stable_counts(n, r, expected):
    assert len(list(enumerate_stable(n, r))) == expected


@pytest.mark.parametrize('n, r', ((4, 2), (5, 2), (4, 3), (5, 3)))
def test_stable_counts_match_brute_force(n, r):
    assert len(list(enumerate_stable(n, r))) == naive_stable_count(n, r)


def test_every_family_stable_and_distinct():
    families = list(enumerate_stable(6, 3))

    assert all(is_stable(family) for family in families)
    assert len(set(families)) == len(families)
    assert Hypergraph.empty(6, 3) in families
    assert Hypergraph.complete(6, 3) in families


@pytest.mark.parametrize('shard_count', (2, 3, 5))
def test_shards_partition_the_walk(shard_count):
    everything = set(enumerate_stable(6, 2))
    shards = [set(enumerate_stable(6, 2, shard_index=index, shard_count=shard_count))
              for index in range(shard_count)]

    assert set().union(*shards) == everything
    assert sum(len(shard) for shard in shards) == len(everything)


@pytest.mark.parametrize('index, count', ((0, 0), (2, 2), (-1, 2)))
def test_invalid_shard(index, count):
    with pytest.raises(ValueError):
        FamilyWalk(4, 2, shard_index=index, shard_count=count)


@pytest.mark.parametrize('n, r, expected', ((3, 2, 8), (4, 2, 64), (4, 3, 16)))
def test_all_hypergraphs(n, r, expected):
    families = list(enumerate_all_hypergraphs(n, r))

    assert len(families) == expected
    assert len(set(families)) == expected


@pytest.mark.parametrize('k', (0, 1, 2))
def test_matching_constraint(k):
    constrained = set(enumerate_all_hypergraphs(5, 2, constraint=MatchingNumberAtMost(k, 2)))
    filtered = {family for family in enumerate_all_hypergraphs(5, 2)
                if naive_matching_number(family) <= k}

    assert constrained == filtered


def test_matching_constraint_on_stable_families():
    constrained = set(enumerate_stable(6, 2, constraint=MatchingNumberAtMost(1, 2)))

    assert constrained == {family for family in enumerate_stable(6, 2)
                           if naive_matching_number(family) <= 1}


def test_predicate_filters_without_pruning():
    families = list(enumerate_stable(5, 2, predicate=lambda family: len(family) == 4))

    assert families
    assert all(len(family) == 4 for family in families)


def test_stats_after_walk():
    walk = FamilyWalk(5, 2)

    families = list(walk)

    assert walk.stats.emitted == len(families) == 16
    assert walk.stats.nodes >= len(families)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        list(enumerate_stable(6, 3, budget=Budget(max_nodes=10)))
