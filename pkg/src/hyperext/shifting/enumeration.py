"""
Exhaustive enumeration of r-graphs on [n].

Stable r-graphs are exactly the downsets of ≺. Listing the r-subsets of [n] in colex
order (a linear extension of ≺), every downset is reached along exactly one path: add
its members in increasing colex order. Each prefix along that path is again a downset, so
the walk only ever adds a set whose lower covers are already present and which comes
later than the last set added.
"""
from typing import Callable, Iterator, List, Optional
import logging

from ..hypergraph import Hypergraph
from ..search import UNLIMITED, Budget, BudgetTracker, HereditaryConstraint, SearchStats
from .precedence import precedence_order


logger = logging.getLogger(__name__)

Predicate = Callable[[Hypergraph], bool]

DEFAULT_SPLIT_DEPTH = 3


class FamilyWalk:
    """
    A depth-first walk over edge families on [n], restricted to downsets of ≺ or not.

    Iterating the walk yields the families; once the iteration is over, `stats` holds the
    search counters.

    Args:
        constraint:  a hereditary constraint (such as a matching-number bound); branches
                     that violate it are cut, as every family containing a violating one
                     violates it too.
        predicate:   filter on the yielded hypergraphs, with no pruning.
        budget:      node and time limits; exceeding them raises BudgetExceeded.
        shard_index,
        shard_count: deterministic sharding. The walk nodes at depth split_depth are
                     numbered in visiting order and node t goes to shard t % shard_count,
                     along with everything beneath it. Shallower nodes belong to shard 0.
    """
    def __init__(self, n: int, r: int, downsets_only: bool = True,
                 constraint: Optional[HereditaryConstraint] = None,
                 predicate: Optional[Predicate] = None, budget: Budget = UNLIMITED,
                 shard_index: int = 0, shard_count: int = 1,
                 split_depth: int = DEFAULT_SPLIT_DEPTH) -> None:
        if shard_count < 1 or not 0 <= shard_index < shard_count:
            raise ValueError('Invalid shard {} of {}.'.format(shard_index, shard_count))
        if split_depth < 1:
            raise ValueError('The split depth must be positive.')
        order = precedence_order(n, r)
        self.n = n
        self.r = r
        self.downsets_only = downsets_only
        self.elements = order.linear_extension()
        position = {mask: index for index, mask in enumerate(self.elements)}
        # Lower covers of each element, as a bit vector over positions.
        self.cover_bits = []
        for mask in self.elements:
            bits = 0
            if downsets_only:
                for cover in order.lower_covers(mask):
                    bits |= 1 << position[cover]
            self.cover_bits.append(bits)
        self.constraint = constraint
        self.predicate = predicate
        self.budget = budget
        self.shard_index = shard_index
        self.shard_count = shard_count
        self.split_depth = split_depth
        self.stats = SearchStats()

    def __iter__(self) -> Iterator[Hypergraph]:
        label = '{} {}-graphs on {} vertices (shard {} of {})'.format(
            'stable' if self.downsets_only else 'all', self.r, self.n,
            self.shard_index + 1, self.shard_count)
        tracker = self.budget.start(label)
        self.stats = tracker.stats
        self._split_nodes_seen = 0
        yield from self._visit(tracker, [], 0, -1, owned=self.shard_index == 0)
        tracker.finish()

    def _visit(self, tracker: BudgetTracker, masks: List[int], present: int, last: int,
               owned: bool) -> Iterator[Hypergraph]:
        tracker.tick()
        if len(masks) == self.split_depth and self.shard_count > 1:
            owned = self._split_nodes_seen % self.shard_count == self.shard_index
            self._split_nodes_seen += 1
            if not owned:
                return

        if owned:
            hypergraph = Hypergraph._from_masks(self.n, self.r, masks)
            if self.predicate is None or self.predicate(hypergraph):
                tracker.emit()
                yield hypergraph

        for index in range(last + 1, len(self.elements)):
            if self.cover_bits[index] & ~present:
                continue
            mask = self.elements[index]
            if self.constraint is not None and not self.constraint.admits(masks, mask):
                continue
            masks.append(mask)
            yield from self._visit(tracker, masks, present | (1 << index), index, owned)
            masks.pop()

    def __repr__(self) -> str:
        return '<{}: n={}, r={}, downsets_only={}>'.format(
            self.__class__.__name__, self.n, self.r, self.downsets_only)


def enumerate_stable(n: int, r: int,
                     constraint: Optional[HereditaryConstraint] = None,
                     predicate: Optional[Predicate] = None,
                     budget: Budget = UNLIMITED,
                     shard_index: int = 0, shard_count: int = 1) -> Iterator[Hypergraph]:
    """
    Yield every stable r-graph on [n] that satisfies the constraint and predicate, each
    once. See FamilyWalk for the arguments.
    """
    return iter(FamilyWalk(n, r, True, constraint, predicate, budget, shard_index,
                           shard_count))


def enumerate_all_hypergraphs(n: int, r: int,
                              constraint: Optional[HereditaryConstraint] = None,
                              predicate: Optional[Predicate] = None,
                              budget: Budget = UNLIMITED) -> Iterator[Hypergraph]:
    """
    Yield every r-graph on [n], stable or not, each once. Only feasible for tiny (n, r).
    """
    return iter(FamilyWalk(n, r, False, constraint, predicate, budget))
