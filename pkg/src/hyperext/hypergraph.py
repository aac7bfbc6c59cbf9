from itertools import combinations
from typing import Any, Iterable, Iterator, List, Sequence, Tuple, Union
import logging

from .vertexset import VertexSet, mask_from_labels, popcount


logger = logging.getLogger(__name__)


EdgeLike = Union[VertexSet, int]


def _to_mask(edge: EdgeLike) -> int:
    if isinstance(edge, VertexSet):
        return edge.bits
    return edge


class Hypergraph:
    """
    An r-uniform hypergraph on the vertex labels 1..n.

    Edges are held as bit vectors, deduplicated and sorted in colex order, so two
    hypergraphs with the same edges are structurally equal. Instances are never
    mutated after construction: every operation returns a new Hypergraph.

    Usage:
        h = Hypergraph.from_labels(5, 3, [(1, 2, 3), (2, 3, 4)])
        sub = h.induced_subhypergraph(VertexSet.from_labels([1, 2, 3]))
        neighbours = h.neighborhood(VertexSet.from_labels([2, 3]))
    """
    def __init__(self, n: int, r: int, edges: Iterable[EdgeLike] = ()) -> None:
        if n < 1:
            raise ValueError('A hypergraph needs at least one vertex, got n={}.'.format(n))
        if not 1 <= r <= n:
            raise ValueError('Uniformity must satisfy 1 <= r <= n, got r={}, n={}.'.format(r, n))
        self.n = n
        self.r = r
        full = (1 << n) - 1
        masks = set()
        for edge in edges:
            mask = _to_mask(edge)
            if mask & ~full:
                raise ValueError('Edge {} uses a vertex outside 1..{}.'.format(
                    VertexSet(mask), n))
            if popcount(mask) != r:
                raise ValueError('Edge {} does not have exactly {} vertices.'.format(
                    VertexSet(mask), r))
            masks.add(mask)
        self._set_masks(masks)

    @classmethod
    def _from_masks(cls, n: int, r: int, masks: Iterable[int]) -> 'Hypergraph':
        """
        Build from bit vectors already known to be valid r-subsets of [n].
        """
        hypergraph = cls.__new__(cls)
        hypergraph.n = n
        hypergraph.r = r
        hypergraph._set_masks(set(masks))
        return hypergraph

    def _set_masks(self, masks: set) -> None:
        self._masks: Tuple[int, ...] = tuple(sorted(masks))
        self._mask_set = frozenset(self._masks)

    @classmethod
    def from_labels(cls, n: int, r: int,
                    edges: Iterable[Iterable[int]]) -> 'Hypergraph':
        return cls(n, r, (mask_from_labels(edge) for edge in edges))

    @classmethod
    def complete(cls, n: int, r: int) -> 'Hypergraph':
        if not 1 <= r <= n:
            raise ValueError('Uniformity must satisfy 1 <= r <= n, got r={}, n={}.'.format(r, n))
        return cls._from_masks(n, r, all_r_subsets(n, r))

    @classmethod
    def empty(cls, n: int, r: int) -> 'Hypergraph':
        return cls(n, r)

    @property
    def masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def edges(self) -> List[VertexSet]:
        return [VertexSet(mask) for mask in self._masks]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_mask(self, mask: int) -> bool:
        return mask in self._mask_set

    def covered_vertices(self) -> VertexSet:
        covered = 0
        for mask in self._masks:
            covered |= mask
        return VertexSet(covered)

    def induced_subhypergraph(self, vertices: VertexSet) -> 'Hypergraph':
        """
        The hypergraph H[S]: the edges contained in S, on the same vertex labels.
        """
        self._check_within_range(vertices)
        keep = vertices.bits
        return Hypergraph._from_masks(
            self.n, self.r, (mask for mask in self._masks if mask & ~keep == 0)
        )

    def delete_vertices(self, vertices: VertexSet) -> 'Hypergraph':
        """
        The hypergraph H - S, i.e. H induced by the complement of S. Labels are preserved.
        """
        self._check_within_range(vertices)
        return self.induced_subhypergraph(vertices.complement(self.n))

    def neighborhood(self, vertices: VertexSet) -> List[VertexSet]:
        """
        Returns:
            N_H(S): every (r - |S|)-set T, disjoint from S, with S | T an edge. In colex order.
        """
        self._check_within_range(vertices)
        size = len(vertices)
        if size >= self.r:
            raise ValueError('The neighborhood is only defined for sets smaller than r={}, '
                             'got a set of size {}.'.format(self.r, size))
        bits = vertices.bits
        return [
            VertexSet(mask & ~bits) for mask in self._masks if mask & bits == bits
        ]

    def degree(self, vertices: VertexSet) -> int:
        return len(self.neighborhood(vertices))

    def vertex_degree(self, label: int) -> int:
        if not 1 <= label <= self.n:
            raise ValueError('Vertex {} is outside 1..{}.'.format(label, self.n))
        bit = 1 << (label - 1)
        return sum(1 for mask in self._masks if mask & bit)

    def _check_within_range(self, vertices: VertexSet) -> None:
        if vertices.bits & ~self.vertex_mask:
            raise ValueError('Vertex set {} is not contained in 1..{}.'.format(vertices, self.n))

    def __len__(self) -> int:
        return len(self._masks)

    def __iter__(self) -> Iterator[VertexSet]:
        return (VertexSet(mask) for mask in self._masks)

    def __contains__(self, item: Any) -> bool:
        if isinstance(item, VertexSet):
            return item.bits in self._mask_set
        return False

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Hypergraph):
            return (self.n, self.r, self._masks) == (other.n, other.r, other._masks)
        else:
            return False

    def __hash__(self) -> int:
        return hash((self.n, self.r, self._masks))

    def __str__(self) -> str:
        return '{}-graph on {} vertices with {} edges'.format(self.r, self.n, len(self))

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


class ColoredFamily:
    """
    An ordered list F_1, ..., F_k of r-graphs on a common vertex set [n]. Colors are
    numbered from 1.
    """
    def __init__(self, members: Sequence[Hypergraph]) -> None:
        members = list(members)
        if not members:
            raise ValueError('A colored family needs at least one member.')
        first = members[0]
        for color, member in enumerate(members, start=1):
            if (member.n, member.r) != (first.n, first.r):
                raise ValueError(
                    'Color {} is a {}-graph on {} vertices, but color 1 is a {}-graph on '
                    '{} vertices.'.format(color, member.r, member.n, first.r, first.n))
        self.members = members
        self.n = first.n
        self.r = first.r

    @property
    def k(self) -> int:
        return len(self.members)

    def member(self, color: int) -> Hypergraph:
        if not 1 <= color <= self.k:
            raise ValueError('Color {} is outside 1..{}.'.format(color, self.k))
        return self.members[color - 1]

    def __len__(self) -> int:
        return self.k

    def __iter__(self) -> Iterator[Hypergraph]:
        return iter(self.members)

    def __str__(self) -> str:
        return '{} colors of {}-graphs on {} vertices'.format(self.k, self.r, self.n)

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


def all_r_subsets(n: int, r: int) -> List[int]:
    """
    Every r-subset of [n] as a bit vector, in colex order.
    """
    return sorted(
        sum(1 << index for index in combo) for combo in combinations(range(n), r)
    )
