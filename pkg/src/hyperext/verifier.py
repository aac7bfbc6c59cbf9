"""
Exhaustive checks of the extremal statements in small parameter cells.

Shifting never lowers a clique count and never raises the matching number, so every r-graph
with matching number at most k can be replaced by a stable one with at least as many
s-cliques. The maximum over stable r-graphs is therefore the maximum over all r-graphs,
and the extremal cells only walk the downsets of the precedence order.
"""
from enum import Enum
from math import ceil, comb
from multiprocessing import Pool
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union
import json
import logging
import random

from .cliques import clique_count, every_edge_in_clique
from .extremal import (
    ExtremalParams, Regime, build_extremal_family, check_rainbow_t, head_intersection_threshold,
    hypothesis_threshold, level, meets_threshold, rainbow_hypothesis_check, rainbow_threshold,
    theorem_bound)
from .hgformat import serialize, serialize_family
from .hypergraph import ColoredFamily, Hypergraph, all_r_subsets
from .matchings import MatchingNumberAtMost, find_rainbow_matching
from .search import UNLIMITED, Budget, BudgetExceeded, SearchStats
from .shifting import FamilyWalk
from .vertexset import VertexSet, popcount


logger = logging.getLogger(__name__)

SCHEMA = 'hyperext/1'

KIND_EXTREMAL = 'extremal'
KIND_RAINBOW = 'rainbow'
KIND_HEAD_INTERSECTION = 'head-intersection'


class Status(Enum):
    CONFIRMED = 'confirmed'
    NOT_YET_ACTIVE = 'bound-not-yet-active'
    COUNTEREXAMPLE = 'counterexample'

    def __str__(self) -> str:
        return self.value


Witness = Union[Hypergraph, ColoredFamily]


class VerificationReport:
    """
    The outcome of checking one parameter cell.

    For extremal cells, claimed_bound is the claimed maximum number of s-cliques and
    observed_max the maximum found. For rainbow and head-intersection cells the claim is
    that nothing violates the statement, so claimed_bound is 0 and observed_max counts the
    violations found.

    A status of None means the search ran out of budget before finishing.
    """
    def __init__(self, kind: str, cell: Dict[str, int], claimed_bound: int, observed_max: int,
                 status: Optional[Status], witness: Optional[Witness] = None,
                 regime: Optional[Regime] = None, stats: Optional[SearchStats] = None,
                 details: Optional[Dict[str, Any]] = None,
                 message: Optional[str] = None) -> None:
        self.kind = kind
        self.cell = cell
        self.claimed_bound = claimed_bound
        self.observed_max = observed_max
        self.status = status
        self.witness = witness
        self.regime = regime
        self.stats = stats if stats else SearchStats()
        self.details = details if details else {}
        self.message = message

    @property
    def cell_key(self) -> Tuple:
        return (self.kind,) + tuple(self.cell.values())

    @property
    def is_counterexample(self) -> bool:
        return self.status is Status.COUNTEREXAMPLE

    @property
    def budget_exceeded(self) -> bool:
        return self.status is None

    def witness_text(self) -> Optional[str]:
        if self.witness is None:
            return None
        if isinstance(self.witness, ColoredFamily):
            return serialize_family(self.witness)
        return serialize(self.witness)

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        """
        The JSON-ready form. Counts are decimal strings, as JSON numbers lose precision.
        """
        data = {
            'schema': SCHEMA,
            'kind': self.kind,
            'cell': self.cell,
            'regime': str(self.regime) if self.regime else None,
            'claimed_bound': str(self.claimed_bound),
            'observed_max': str(self.observed_max),
            'status': str(self.status) if self.status else None,
            'witness': self.witness_text(),
            'nodes': self.stats.nodes,
            'details': {
                key: str(value) if isinstance(value, int) and not isinstance(value, bool)
                else value
                for key, value in self.details.items()
            },
        }
        if include_timing:
            data['millis'] = self.stats.millis
        if self.message:
            data['message'] = self.message
        return data

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True)

    def __str__(self) -> str:
        cell = ', '.join('{}={}'.format(name, value) for name, value in self.cell.items())
        return '{} {}: {}'.format(self.kind, cell, self.status or 'budget exceeded')

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


def _decide(violated: bool, meets: bool) -> Status:
    if not violated:
        return Status.CONFIRMED
    return Status.COUNTEREXAMPLE if meets else Status.NOT_YET_ACTIVE


def _family_key(hypergraph: Hypergraph) -> Tuple[int, Tuple[int, ...]]:
    return len(hypergraph), hypergraph.masks


def _run_shards(worker: Callable, tasks: Sequence, jobs: int) -> List:
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            return pool.map(worker, tasks)
    return [worker(task) for task in tasks]


class _ExtremalShard:
    """
    Running maximum of the s-clique count over the families one shard visits.
    """
    def __init__(self) -> None:
        self.observed_max = -1
        self.witness: Optional[Hypergraph] = None
        # The largest count strictly below the claimed bound.
        self.second_max = -1
        self.families = 0
        self.stats = SearchStats()

    def record(self, hypergraph: Hypergraph, count: int, bound: int) -> None:
        self.families += 1
        self.record_witness(hypergraph, count)
        if count < bound:
            self.second_max = max(self.second_max, count)

    def merge(self, other: '_ExtremalShard') -> '_ExtremalShard':
        merged = _ExtremalShard()
        merged.families = self.families + other.families
        merged.stats = self.stats.merge(other.stats)
        merged.second_max = max(self.second_max, other.second_max)
        for shard in (self, other):
            if shard.witness is not None:
                merged.record_witness(shard.witness, shard.observed_max)
        return merged

    def record_witness(self, hypergraph: Hypergraph, count: int) -> None:
        if self.witness is None or count > self.observed_max or (
                count == self.observed_max
                and _family_key(hypergraph) < _family_key(self.witness)):
            self.observed_max = count
            self.witness = hypergraph


def _extremal_shard(task: Tuple) -> _ExtremalShard:
    n, k, r, s, bound, budget, shard_index, shard_count, full_enumeration = task
    walk = FamilyWalk(n, r, downsets_only=not full_enumeration,
                      constraint=MatchingNumberAtMost(k, r), budget=budget,
                      shard_index=shard_index, shard_count=shard_count)
    shard = _ExtremalShard()
    for hypergraph in walk:
        shard.record(hypergraph, clique_count(hypergraph, s), bound)
    shard.stats = walk.stats
    logger.debug('Shard {}/{} of n={}, k={}, r={}, s={}: {} families, max {}.'.format(
        shard_index + 1, shard_count, n, k, r, s, shard.families, shard.observed_max))
    return shard


def verify_extremal_cell(n: int, k: int, r: int, s: int, budget: Budget = UNLIMITED,
                         jobs: int = 1, full_enumeration: bool = False) -> VerificationReport:
    """
    Compare the maximum number of s-cliques over r-graphs on [n] with matching number at
    most k against the claimed bound for the cell.

    In the upper regime every family short of the maximum must also stay within the gap
    bound.

    Args:
        jobs:             number of worker processes; the downset walk is sharded.
        full_enumeration: walk every r-graph instead of the stable ones only. Feasible for
                          tiny cells; used to check the reduction itself.
    """
    params = ExtremalParams(n, k, r, s)
    claim = theorem_bound(params)
    meets = meets_threshold(n, hypothesis_threshold(params))
    cell = {'n': n, 'k': k, 'r': r, 's': s}
    logger.debug('Verifying extremal cell {}: claimed {}.'.format(params, claim))

    shard_count = 1 if full_enumeration else max(jobs, 1)
    tasks = [
        (n, k, r, s, claim.bound, budget, shard_index, shard_count, full_enumeration)
        for shard_index in range(shard_count)
    ]
    try:
        shards = _run_shards(_extremal_shard, tasks, jobs)
    except BudgetExceeded as e:
        return VerificationReport(KIND_EXTREMAL, cell, claim.bound, 0, None,
                                  regime=claim.regime, stats=e.stats, message=str(e))
    summary = shards[0]
    for shard in shards[1:]:
        summary = summary.merge(shard)

    details: Dict[str, Any] = {
        'a': claim.a,
        'families': summary.families,
        'hypothesis_threshold': ceil(hypothesis_threshold(params)),
        'meets_threshold': meets,
        'full_enumeration': full_enumeration,
    }
    violated = summary.observed_max > claim.bound
    if claim.gap_bound is not None:
        details['gap_bound'] = claim.gap_bound
        details['second_max'] = max(summary.second_max, 0)
        violated = violated or summary.second_max > claim.gap_bound

    return VerificationReport(
        KIND_EXTREMAL, cell, claim.bound, summary.observed_max, _decide(violated, meets),
        witness=summary.witness, regime=claim.regime, stats=summary.stats, details=details)


def _head_intersection_shard(task: Tuple) -> Tuple[int, int, Optional[Hypergraph], SearchStats]:
    n, k, r, s, budget, shard_index, shard_count = task
    a = level(k, r, s)
    head = VertexSet.interval(r * k + a - 1).bits
    qualifying = 0
    violations = 0
    witness: Optional[Hypergraph] = None
    walk = FamilyWalk(
        n, r, constraint=MatchingNumberAtMost(k, r),
        predicate=lambda hypergraph: every_edge_in_clique(hypergraph, s),
        budget=budget, shard_index=shard_index, shard_count=shard_count)
    for hypergraph in walk:
        qualifying += 1
        if any(popcount(mask & head) < a for mask in hypergraph.masks):
            violations += 1
            if witness is None or _family_key(hypergraph) < _family_key(witness):
                witness = hypergraph
    return qualifying, violations, witness, walk.stats


def verify_head_intersection(n: int, k: int, r: int, s: int, budget: Budget = UNLIMITED,
                             jobs: int = 1) -> VerificationReport:
    """
    Check that in every stable r-graph on [n] with matching number at most k whose edges
    all lie in s-cliques, every edge meets [rk + a - 1] in at least a vertices.
    """
    if k < 1 or r < 2:
        raise ValueError('Need k >= 1 and r >= 2, got k={}, r={}.'.format(k, r))
    if not k + r <= s <= r * k + r - 1:
        raise ValueError('Need k + r <= s <= rk + r - 1, got s={}.'.format(s))
    if not r <= n:
        raise ValueError('Uniformity must satisfy r <= n, got r={}, n={}.'.format(r, n))
    a = level(k, r, s)
    cell = {'n': n, 'k': k, 'r': r, 's': s}
    meets = meets_threshold(n, head_intersection_threshold(k, r))
    shard_count = max(jobs, 1)
    tasks = [(n, k, r, s, budget, index, shard_count) for index in range(shard_count)]
    try:
        results = _run_shards(_head_intersection_shard, tasks, jobs)
    except BudgetExceeded as e:
        return VerificationReport(KIND_HEAD_INTERSECTION, cell, 0, 0, None, stats=e.stats,
                                  message=str(e))

    qualifying = sum(result[0] for result in results)
    violations = sum(result[1] for result in results)
    witnesses = [result[2] for result in results if result[2] is not None]
    witness = min(witnesses, key=_family_key) if witnesses else None
    stats = SearchStats()
    for result in results:
        stats = stats.merge(result[3])
    details = {'a': a, 'head': r * k + a - 1, 'families': qualifying, 'meets_threshold': meets}
    return VerificationReport(KIND_HEAD_INTERSECTION, cell, 0, violations,
                              _decide(violations > 0, meets), witness=witness, stats=stats,
                              details=details)


def _random_family_of_size(rng: random.Random, subsets: List[int], n: int, r: int,
                           size: int) -> Hypergraph:
    return Hypergraph._from_masks(n, r, rng.sample(subsets, size))


def _random_dense_family(rng: random.Random, subsets: List[int], n: int,
                         r: int) -> Hypergraph:
    density = rng.uniform(0.3, 1.0)
    return Hypergraph._from_masks(n, r, (mask for mask in subsets if rng.random() < density))


class _RainbowTally:
    def __init__(self) -> None:
        self.counts: Dict[str, int] = {
            'edge_rich_families': 0,
            'edge_rich_failures': 0,
            'boundary_failures': 0,
            'hypothesis_families': 0,
            'hypothesis_failures': 0,
            'hypothesis_disagreements': 0,
        }
        self.gated_violations = 0
        self.ungated_violations = 0
        self.witness: Optional[ColoredFamily] = None

    def violation(self, counter: str, family: ColoredFamily, gated: bool = False) -> None:
        self.counts[counter] += 1
        if gated:
            self.gated_violations += 1
        else:
            self.ungated_violations += 1
        if self.witness is None:
            self.witness = family


def verify_rainbow_cell(n: int, k: int, r: int, t: int, trials: int = 20, seed: int = 0,
                        budget: Budget = UNLIMITED) -> VerificationReport:
    """
    Exercise the rainbow-matching statements on seeded random and boundary families.

    Three kinds of family are checked:
        - edge-rich families, each color with more than (k-1)C(n-1, r-1) edges (when
          n >= rk): a rainbow matching must exist, whatever n is;
        - the boundary family, every color equal to F(n, k-1, r, 1): no rainbow matching
          exists and no color passes the clique hypothesis;
        - random dense families where every color passes the clique hypothesis for some
          s in [r, t]: a rainbow matching must exist once n meets the threshold.
    For every family the per-color hypothesis verdicts are also recomputed from the
    clique counts of an explicitly built F(n, k-1, r, 1).

    With k = 1 the boundary family is empty and t must equal r, so every nonempty F_1
    passes the hypothesis and must hold a rainbow matching of size 1.
    """
    check_rainbow_t(k, r, t)
    if not r <= n:
        raise ValueError('Uniformity must satisfy r <= n, got r={}, n={}.'.format(r, n))
    if trials < 0:
        raise ValueError('The number of trials must be non-negative.')

    cell = {'n': n, 'k': k, 'r': r, 't': t}
    meets = meets_threshold(n, rainbow_threshold(k, r, t))
    rng = random.Random('{}:{}:{}:{}:{}'.format(seed, n, k, r, t))
    subsets = all_r_subsets(n, r)
    boundary = build_extremal_family(n, k - 1, r, 1)
    boundary_counts = {s: clique_count(boundary, s) for s in range(r, t + 1)}
    tally = _RainbowTally()
    tracker = budget.start('rainbow cell {}'.format(cell))

    def hypothesis_agrees(family: ColoredFamily) -> bool:
        verdicts = rainbow_hypothesis_check(family, t)
        direct = [
            any(clique_count(member, s) > boundary_counts[s] for s in range(r, t + 1))
            for member in family
        ]
        if verdicts != direct:
            tally.violation('hypothesis_disagreements', family)
        return all(verdicts)

    try:
        if n >= r * k:
            minimum = (k - 1) * comb(n - 1, r - 1) + 1
            for _ in range(trials):
                tracker.tick()
                family = ColoredFamily([
                    _random_family_of_size(rng, subsets, n, r,
                                           rng.randint(minimum, len(subsets)))
                    for _ in range(k)
                ])
                tally.counts['edge_rich_families'] += 1
                hypothesis_agrees(family)
                if find_rainbow_matching(family, budget) is None:
                    tally.violation('edge_rich_failures', family)

        tracker.tick()
        family = ColoredFamily([boundary] * k)
        if any(rainbow_hypothesis_check(family, t)):
            tally.violation('hypothesis_disagreements', family)
        if find_rainbow_matching(family, budget) is not None:
            tally.violation('boundary_failures', family)

        for _ in range(trials):
            tracker.tick()
            family = ColoredFamily([_random_dense_family(rng, subsets, n, r) for _ in range(k)])
            if not hypothesis_agrees(family):
                continue
            tally.counts['hypothesis_families'] += 1
            if find_rainbow_matching(family, budget) is None:
                tally.violation('hypothesis_failures', family, gated=True)
    except BudgetExceeded as e:
        return VerificationReport(KIND_RAINBOW, cell, 0, 0, None, stats=tracker.finish(),
                                  message=str(e))

    stats = tracker.finish()
    violations = tally.gated_violations + tally.ungated_violations
    if tally.ungated_violations:
        status = Status.COUNTEREXAMPLE
    else:
        status = _decide(tally.gated_violations > 0, meets)
    details: Dict[str, Any] = dict(tally.counts)
    details['meets_threshold'] = meets
    details['trials'] = trials
    details['seed'] = seed
    return VerificationReport(KIND_RAINBOW, cell, 0, violations, status, witness=tally.witness,
                              stats=stats, details=details)
