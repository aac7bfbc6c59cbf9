from collections import defaultdict
from itertools import combinations
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import logging

from .hypergraph import Hypergraph
from .vertexset import VertexSet, iter_indices, popcount


logger = logging.getLogger(__name__)


class CliqueCount:
    """
    The number of s-cliques of an r-graph, with optional per-vertex counts keyed by
    vertex label.
    """
    def __init__(self, s: int, total: int,
                 per_vertex: Optional[Dict[int, int]] = None) -> None:
        self.s = s
        self.total = total
        self.per_vertex = per_vertex

    def __int__(self) -> int:
        return self.total

    def __str__(self) -> str:
        return str(self.total)

    def __repr__(self) -> str:
        return '<{}: K_{}={}>'.format(self.__class__.__name__, self.s, self.total)


class CliqueSearch:
    """
    Depth-first clique search over an r-graph.

    For every (r-1)-set T the link mask holds the vertices u with T | {u} an edge. A
    partial clique carries the mask of candidates that stay compatible with it: when a
    vertex v joins, the candidates are cut down to the link of every (r-1)-set made of v
    and r-2 earlier members.

    Picks go downwards in label order (the next vertex is always below the last one
    chosen), and each level tries candidates in increasing order, so cliques come out
    in colex order.
    """
    def __init__(self, hypergraph: Hypergraph) -> None:
        self.hypergraph = hypergraph
        self.r = hypergraph.r
        self._links: Dict[int, int] = defaultdict(int)
        for mask in hypergraph.masks:
            for index in iter_indices(mask):
                bit = 1 << index
                self._links[mask ^ bit] |= bit

    def initial_candidates(self, chosen: Sequence[int]) -> int:
        """
        The candidate mask for a partial clique given by its 0-indexed members.
        """
        candidates = self.hypergraph.vertex_mask
        for index in chosen:
            candidates &= ~(1 << index)
        if self.r == 1:
            candidates &= self._links[0]
        for subset in combinations(chosen, self.r - 1):
            candidates &= self._links[sum(1 << index for index in subset)]
        return candidates

    def extensions(self, chosen: List[int], candidates: int, remaining: int) -> Iterator[int]:
        """
        Yield the bit vectors of all cliques that extend the partial clique by
        `remaining` vertices taken from `candidates`.
        """
        chosen_mask = sum(1 << index for index in chosen)
        yield from self._extend(chosen, chosen_mask, candidates, remaining)

    def _extend(self, chosen: List[int], chosen_mask: int, candidates: int,
                remaining: int) -> Iterator[int]:
        if remaining == 0:
            yield chosen_mask
            return
        if popcount(candidates) < remaining:
            return
        for index in iter_indices(candidates):
            below = candidates & ((1 << index) - 1)
            if popcount(below) < remaining - 1:
                continue
            below = self._restrict(chosen, index, below)
            chosen.append(index)
            yield from self._extend(chosen, chosen_mask | (1 << index), below, remaining - 1)
            chosen.pop()

    def _restrict(self, chosen: List[int], index: int, candidates: int) -> int:
        if self.r < 2 or len(chosen) < self.r - 2:
            return candidates
        bit = 1 << index
        for subset in combinations(chosen, self.r - 2):
            candidates &= self._links[sum(1 << i for i in subset) | bit]
            if not candidates:
                break
        return candidates


def _check_size(hypergraph: Hypergraph, s: int) -> None:
    if s < hypergraph.r:
        raise ValueError('Clique size s={} is smaller than the uniformity r={}.'.format(
            s, hypergraph.r))


def enumerate_cliques(hypergraph: Hypergraph, s: int) -> Iterator[VertexSet]:
    """
    Yield every s-clique (an s-set whose r-subsets are all edges), each once, in colex
    order.
    """
    _check_size(hypergraph, s)
    search = CliqueSearch(hypergraph)
    for mask in search.extensions([], search.initial_candidates([]), s):
        yield VertexSet(mask)


def count_cliques(hypergraph: Hypergraph, s: int, per_vertex: bool = False,
                  jobs: int = 1) -> CliqueCount:
    """
    Count the s-cliques of the hypergraph exactly.

    Args:
        per_vertex: also count, for every vertex u, the s-cliques containing u.
        jobs:       number of worker processes; work is sharded on the lowest vertex of
                    each clique and merged by addition.
    """
    _check_size(hypergraph, s)
    if per_vertex:
        counts = {label: 0 for label in range(1, hypergraph.n + 1)}
        total = 0
        for clique in enumerate_cliques(hypergraph, s):
            total += 1
            for label in clique.labels():
                counts[label] += 1
        return CliqueCount(s, total, counts)

    shards = [(hypergraph, s, lowest) for lowest in range(hypergraph.n)]
    if jobs > 1:
        logger.debug('Counting {}-cliques in {} shards over {} workers.'.format(
            s, len(shards), jobs))
        with Pool(jobs) as pool:
            total = sum(pool.map(_count_shard, shards))
    else:
        search = CliqueSearch(hypergraph)
        total = sum(_count_from(search, lowest, s) for _, _, lowest in shards)
    return CliqueCount(s, total)


def _count_shard(shard: Tuple[Hypergraph, int, int]) -> int:
    hypergraph, s, lowest = shard
    return _count_from(CliqueSearch(hypergraph), lowest, s)


def _count_from(search: CliqueSearch, lowest: int, s: int) -> int:
    """
    The number of s-cliques whose lowest vertex has 0-indexed position `lowest`.
    """
    if search.r == 1 and not search.hypergraph.has_mask(1 << lowest):
        return 0
    candidates = search.initial_candidates([lowest]) & ~((1 << (lowest + 1)) - 1)
    return sum(1 for _ in search.extensions([lowest], candidates, s - 1))


def clique_count(hypergraph: Hypergraph, s: int) -> int:
    return count_cliques(hypergraph, s).total


def clique_containing(hypergraph: Hypergraph, edge: VertexSet, s: int) -> Optional[VertexSet]:
    """
    Returns:
        The colex-first s-clique containing the given edge, or None.
    """
    _check_size(hypergraph, s)
    search = CliqueSearch(hypergraph)
    chosen = list(edge.indices())
    for mask in search.extensions(chosen, search.initial_candidates(chosen), s - len(chosen)):
        return VertexSet(mask)
    return None


def every_edge_in_clique(hypergraph: Hypergraph, s: int) -> bool:
    """
    Whether every edge of the hypergraph lies in at least one s-clique.
    """
    return all(clique_containing(hypergraph, edge, s) is not None for edge in hypergraph)


def prune_to_clique_edges(hypergraph: Hypergraph, s: int) -> Hypergraph:
    """
    Delete the edges that lie in no s-clique. The s-clique count is unchanged.
    """
    search = CliqueSearch(hypergraph)
    covered = set()
    for clique in search.extensions([], search.initial_candidates([]), s):
        for subset in combinations(iter_indices(clique), hypergraph.r):
            covered.add(sum(1 << index for index in subset))
    return Hypergraph._from_masks(hypergraph.n, hypergraph.r,
                                  (mask for mask in hypergraph.masks if mask in covered))
