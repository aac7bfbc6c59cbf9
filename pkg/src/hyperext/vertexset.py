from typing import Any, Iterable, Iterator, Tuple


def popcount(bits: int) -> int:
    return bin(bits).count('1')


def iter_indices(bits: int) -> Iterator[int]:
    """
    Yield the 0-indexed positions of the set bits, lowest first.
    """
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def mask_from_labels(labels: Iterable[int]) -> int:
    bits = 0
    for label in labels:
        if label < 1:
            raise ValueError('Vertex labels start at 1, got {}.'.format(label))
        bits |= 1 << (label - 1)
    return bits


def labels_of(bits: int) -> Tuple[int, ...]:
    return tuple(index + 1 for index in iter_indices(bits))


class VertexSet:
    """
    A set of vertices held as a bit vector: bit i stands for vertex label i + 1.

    Ordering follows colex order, which for bit vectors is plain integer order.
    """
    __slots__ = ('bits',)

    def __init__(self, bits: int) -> None:
        """
        Args:
            bits: The bit vector, with bit 0 standing for vertex 1.
        """
        if bits < 0:
            raise ValueError('A vertex set cannot have a negative bit vector.')
        self.bits = bits

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> 'VertexSet':
        return cls(mask_from_labels(labels))

    @classmethod
    def interval(cls, size: int) -> 'VertexSet':
        """
        The initial segment {1, ..., size}.
        """
        return cls((1 << size) - 1)

    def labels(self) -> Tuple[int, ...]:
        return labels_of(self.bits)

    def indices(self) -> Tuple[int, ...]:
        return tuple(iter_indices(self.bits))

    def issubset(self, other: 'VertexSet') -> bool:
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: 'VertexSet') -> bool:
        return self.bits & other.bits == 0

    def complement(self, n: int) -> 'VertexSet':
        return VertexSet(((1 << n) - 1) & ~self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels())

    def __contains__(self, label: Any) -> bool:
        return isinstance(label, int) and label >= 1 and bool(self.bits >> (label - 1) & 1)

    def __or__(self, other: 'VertexSet') -> 'VertexSet':
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: 'VertexSet') -> 'VertexSet':
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: 'VertexSet') -> 'VertexSet':
        return VertexSet(self.bits & ~other.bits)

    def __lt__(self, other: 'VertexSet') -> bool:
        return self.bits < other.bits

    def __str__(self) -> str:
        return '{' + ','.join(str(label) for label in self.labels()) + '}'

    def __repr__(self) -> str:
        return "<{}: {}>".format(self.__class__.__name__, self)

    def __eq__(self, other: Any) -> bool:
        # Only other VertexSet instances with the same bits are equal to each other.
        if isinstance(other, VertexSet):
            return self.bits == other.bits
        else:
            return False

    def __hash__(self) -> int:
        return hash(self.bits)
