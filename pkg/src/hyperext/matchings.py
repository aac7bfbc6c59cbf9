from math import comb
from typing import Any, Iterable, List, Optional, Sequence, Tuple
import logging

from .hypergraph import ColoredFamily, Hypergraph
from .search import UNLIMITED, Budget, BudgetTracker, HereditaryConstraint
from .vertexset import VertexSet, popcount


logger = logging.getLogger(__name__)


class Matching:
    """
    A list of pairwise disjoint edges.
    """
    def __init__(self, edges: Iterable[VertexSet] = ()) -> None:
        self.edges = sorted(edges)

    def is_valid_for(self, hypergraph: Hypergraph) -> bool:
        """
        Whether every edge belongs to the hypergraph and the edges are pairwise disjoint.
        """
        used = 0
        for edge in self.edges:
            if edge not in hypergraph or edge.bits & used:
                return False
            used |= edge.bits
        return True

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Matching):
            return self.edges == other.edges
        else:
            return False

    def __hash__(self) -> int:
        return hash(tuple(self.edges))

    def __str__(self) -> str:
        return ' '.join(str(edge) for edge in self.edges) or '(empty)'

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


class RainbowMatching:
    """
    One edge per color of a colored family, all pairwise disjoint. Picks are
    (color, edge) pairs sorted by color, colors numbered from 1.
    """
    def __init__(self, picks: Iterable[Tuple[int, VertexSet]]) -> None:
        self.picks = sorted(picks, key=lambda pick: pick[0])

    def is_valid_for(self, family: ColoredFamily) -> bool:
        if [color for color, _ in self.picks] != list(range(1, family.k + 1)):
            return False
        used = 0
        for color, edge in self.picks:
            if edge not in family.member(color) or edge.bits & used:
                return False
            used |= edge.bits
        return True

    def __len__(self) -> int:
        return len(self.picks)

    def __str__(self) -> str:
        return ' '.join('{}:{}'.format(color, edge) for color, edge in self.picks)

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


class _MatchingSearch:
    """
    Branch and bound for a maximum matching.

    At every node the lowest vertex covered by a remaining edge either is matched by one
    of its edges, or is discarded together with all its edges. A node is pruned when its
    depth plus min(covered vertices // r, remaining edges) cannot beat the best matching
    found so far. With a target the search stops as soon as a matching of that size
    appears.
    """
    def __init__(self, r: int, tracker: Optional[BudgetTracker] = None,
                 target: Optional[int] = None) -> None:
        self.r = r
        self.tracker = tracker
        self.target = target
        self.best: List[int] = []
        self.done = False

    def run(self, masks: Sequence[int]) -> List[int]:
        self._search(list(masks), [])
        return self.best

    def _search(self, masks: List[int], chosen: List[int]) -> None:
        if self.tracker is not None:
            self.tracker.tick()
        if len(chosen) > len(self.best):
            self.best = list(chosen)
            if self.target is not None and len(self.best) >= self.target:
                self.done = True
                return
        if not masks:
            return

        covered = 0
        for mask in masks:
            covered |= mask
        bound = len(chosen) + min(popcount(covered) // self.r, len(masks))
        if bound <= len(self.best):
            return

        lowest = covered & -covered
        through = [mask for mask in masks if mask & lowest]
        rest = [mask for mask in masks if not mask & lowest]
        for mask in through:
            chosen.append(mask)
            self._search([other for other in rest if not other & mask], chosen)
            chosen.pop()
            if self.done:
                return
        self._search(rest, chosen)


def matching_number(hypergraph: Hypergraph,
                    budget: Budget = UNLIMITED) -> Tuple[int, Matching]:
    """
    Compute the matching number exactly.

    Returns:
        The matching number and a maximum matching achieving it.

    Raises:
        BudgetExceeded if the search visits more nodes, or runs longer, than allowed.
    """
    tracker = budget.start('matching number of {}'.format(hypergraph))
    best = _MatchingSearch(hypergraph.r, tracker).run(hypergraph.masks)
    tracker.finish()
    return len(best), Matching(VertexSet(mask) for mask in best)


def has_matching_at_most(hypergraph: Hypergraph, k: int, budget: Budget = UNLIMITED) -> bool:
    """
    Whether the matching number is at most k. The search stops at the first matching of
    size k + 1.
    """
    if k < 0:
        return False
    tracker = budget.start('matching bound {} for {}'.format(k, hypergraph))
    search = _MatchingSearch(hypergraph.r, tracker, target=k + 1)
    search.run(hypergraph.masks)
    tracker.finish()
    return not search.done


def _has_matching_of_size(masks: Sequence[int], r: int, size: int) -> bool:
    if size <= 0:
        return True
    if len(masks) < size:
        return False
    search = _MatchingSearch(r, target=size)
    search.run(masks)
    return search.done


class MatchingNumberAtMost(HereditaryConstraint):
    """
    The constraint "matching number at most k".

    For a family D with matching number at most k, D plus an edge x still satisfies it
    exactly when the edges of D disjoint from x have matching number at most k - 1.
    """
    def __init__(self, k: int, r: int) -> None:
        if k < 0:
            raise ValueError('The matching bound must be non-negative, got k={}.'.format(k))
        self.k = k
        self.r = r

    def admits(self, masks: Sequence[int], new_mask: int) -> bool:
        disjoint = [mask for mask in masks if not mask & new_mask]
        return not _has_matching_of_size(disjoint, self.r, self.k)

    def __repr__(self) -> str:
        return '<{}: k={}>'.format(self.__class__.__name__, self.k)


def find_rainbow_matching(family: ColoredFamily,
                          budget: Budget = UNLIMITED) -> Optional[RainbowMatching]:
    """
    Search exhaustively for a rainbow matching.

    Colors are tried in ascending order of edge count. After every pick each color still
    to be served must keep at least one edge disjoint from the picks so far.

    Returns:
        A rainbow matching, or None if the family has none.
    """
    order = sorted(range(1, family.k + 1), key=lambda color: (len(family.member(color)), color))
    members = {color: family.member(color).masks for color in order}
    tracker = budget.start('rainbow matching for {}'.format(family))
    picks: List[Tuple[int, int]] = []

    def extend(position: int, used: int) -> bool:
        tracker.tick()
        if position == len(order):
            return True
        color = order[position]
        for mask in members[color]:
            if mask & used:
                continue
            now_used = used | mask
            if not all(
                any(not other & now_used for other in members[later])
                for later in order[position + 1:]
            ):
                continue
            picks.append((color, mask))
            if extend(position + 1, now_used):
                return True
            picks.pop()
        return False

    found = extend(0, 0)
    stats = tracker.finish()
    if not found:
        logger.debug('No rainbow matching in {} ({}).'.format(family, stats))
        return None
    return RainbowMatching((color, VertexSet(mask)) for color, mask in picks)


def high_degree_threshold(n: int, k: int, r: int) -> int:
    """
    The vertex degree 2(k-1)C(n-2, r-2) above which k vertices always extend greedily to a
    matching of size k, provided rk <= n.
    """
    if r < 2:
        raise ValueError('The high-degree threshold needs r >= 2, got r={}.'.format(r))
    return 2 * (k - 1) * comb(n - 2, r - 2)


def tuple_degree_threshold(n: int, k: int, r: int, a: int) -> int:
    """
    The degree r(k-1)C(n-a-1, r-a-1) above which k disjoint a-sets always extend greedily
    to a matching of size k.
    """
    if not 1 <= a < r:
        raise ValueError('The tuple size must satisfy 1 <= a < r, got a={}, r={}.'.format(a, r))
    return r * (k - 1) * comb(n - a - 1, r - a - 1)


def greedy_matching_from_high_degree_vertices(hypergraph: Hypergraph,
                                              labels: Sequence[int]) -> Optional[Matching]:
    """
    Match each given vertex in turn with an edge through it that avoids the edges already
    chosen and the other given vertices.

    Edges are tried in colex order, so when the first choice at every step works the
    result is the plain greedy matching. A step with no admissible edge backtracks to the
    previous vertex; the degree hypothesis guarantees a matching of this shape, but not
    that the colex-first choices reach it when r >= 3.

    Returns:
        A matching with one edge per given vertex, or None if there is none of this shape.
    """
    if len(set(labels)) != len(labels):
        raise ValueError('The vertices must be distinct, got {}.'.format(list(labels)))
    bits = [1 << (label - 1) for label in labels]
    others = sum(bits)
    through = [
        [mask for mask in hypergraph.masks if mask & bit and not mask & (others ^ bit)]
        for bit in bits
    ]
    chosen: List[int] = []

    def extend(position: int, used: int) -> bool:
        if position == len(bits):
            return True
        for mask in through[position]:
            if mask & used:
                continue
            chosen.append(mask)
            if extend(position + 1, used | mask):
                return True
            chosen.pop()
        return False

    if not extend(0, 0):
        logger.debug('No matching through the vertices {}.'.format(list(labels)))
        return None
    return Matching(VertexSet(mask) for mask in chosen)


def greedy_matching_from_disjoint_tuples(hypergraph: Hypergraph,
                                         tuples: Sequence[VertexSet]) -> Optional[Matching]:
    """
    Complete each a-set A_i in turn by the colex-first B_i in its neighborhood that avoids
    every A_j and every B_j chosen before.

    Returns:
        The matching {A_i | B_i}, or None if some A_i cannot be completed.
    """
    heads = 0
    for head in tuples:
        if head.bits & heads:
            raise ValueError('The tuples must be pairwise disjoint.')
        if len(head) != len(tuples[0]):
            raise ValueError('The tuples must all have the same size.')
        heads |= head.bits

    used = 0
    chosen: List[VertexSet] = []
    for head in tuples:
        tail = next(
            (completion for completion in hypergraph.neighborhood(head)
             if not completion.bits & (heads | used)),
            None,
        )
        if tail is None:
            logger.debug('Greedy matching stuck at tuple {}.'.format(head))
            return None
        used |= tail.bits
        chosen.append(head | tail)
    return Matching(chosen)
