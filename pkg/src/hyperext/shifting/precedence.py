from functools import lru_cache
from typing import Any, FrozenSet, List, Tuple
import logging

import networkx  # type: ignore

from ..hypergraph import Hypergraph, all_r_subsets
from ..vertexset import VertexSet, iter_indices, labels_of


logger = logging.getLogger(__name__)


def precedes(first: VertexSet, second: VertexSet) -> bool:
    """
    Whether first ≺ second: with both sets sorted increasingly, every element of the first
    is at most the element in the same position of the second. The relation is reflexive.
    """
    if len(first) != len(second):
        raise ValueError('Cannot compare sets of different sizes: {} and {}.'.format(
            first, second))
    return _precedes_masks(first.bits, second.bits)


def _precedes_masks(first: int, second: int) -> bool:
    return all(a <= b for a, b in zip(labels_of(first), labels_of(second)))


def lower_covers(mask: int) -> List[int]:
    """
    The r-sets directly below the given one in ≺: replace one element x by x - 1, when
    x - 1 is not already present.
    """
    covers = []
    for index in iter_indices(mask):
        if index == 0:
            continue
        below = 1 << (index - 1)
        if not mask & below:
            covers.append(mask ^ (1 << index) ^ below)
    return covers


@lru_cache(maxsize=None)
def _colex_subsets(n: int, r: int) -> Tuple[int, ...]:
    return tuple(all_r_subsets(n, r))


def stable_closure_check(hypergraph: Hypergraph) -> bool:
    """
    Whether, for every edge E, every r-set S ≺ E is an edge as well.

    Only sets earlier than E in colex order are compared, as S ≺ E implies S is no later
    than E.
    """
    for mask in hypergraph.masks:
        for other in _colex_subsets(hypergraph.n, hypergraph.r):
            if other >= mask:
                break
            if not hypergraph.has_mask(other) and _precedes_masks(other, mask):
                logger.debug('{} precedes the edge {} but is missing.'.format(
                    VertexSet(other), VertexSet(mask)))
                return False
    return True


class PrecedenceOrder:
    """
    The order ≺ on the r-subsets of [n], held as its Hasse diagram.

    Each r-subset is a node, keyed by its bit vector; there is an arc from every lower
    cover to the set it covers. Colex order is a linear extension.

    Usage:
        order = precedence_order(5, 2)
        order.lower_covers(VertexSet.from_labels([2, 4]).bits)
        order.below(VertexSet.from_labels([3, 5]).bits)
    """
    def __init__(self, n: int, r: int) -> None:
        if not 1 <= r <= n:
            raise ValueError('Uniformity must satisfy 1 <= r <= n, got r={}, n={}.'.format(r, n))
        self.n = n
        self.r = r
        self.elements: Tuple[int, ...] = _colex_subsets(n, r)
        self._networkx_graph = networkx.DiGraph()
        self._networkx_graph.add_nodes_from(self.elements)
        for mask in self.elements:
            for cover in lower_covers(mask):
                self._networkx_graph.add_edge(cover, mask)
        logger.debug('Built precedence order on {} sets with {} cover relations.'.format(
            len(self.elements), self.cover_count))

    @property
    def cover_count(self) -> int:
        return self._networkx_graph.number_of_edges()

    def linear_extension(self) -> Tuple[int, ...]:
        return self.elements

    def lower_covers(self, mask: int) -> List[int]:
        return sorted(self._networkx_graph.predecessors(mask))

    def below(self, mask: int) -> FrozenSet[int]:
        """
        Returns:
            Every r-set strictly below the given one.
        """
        return frozenset(networkx.ancestors(self._networkx_graph, mask))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: Any) -> bool:
        if isinstance(item, VertexSet):
            return item.bits in self._networkx_graph
        return False

    def __repr__(self) -> str:
        return '<{}: n={}, r={}>'.format(self.__class__.__name__, self.n, self.r)


@lru_cache(maxsize=32)
def precedence_order(n: int, r: int) -> PrecedenceOrder:
    return PrecedenceOrder(n, r)
