"""
Reading and writing the ``.hg`` hypergraph file format.

The first non-comment line is ``n r``; every following non-comment line lists the r
vertex labels (1-indexed, space separated) of one edge. Lines starting with ``#`` are
comments. Canonical output lists the edges in colex order with single spaces and a
trailing newline.
"""
from typing import List, Optional, TextIO
import logging
import sys

from .hypergraph import ColoredFamily, Hypergraph
from .vertexset import VertexSet, mask_from_labels


logger = logging.getLogger(__name__)

STDIN_FILENAME = '-'


class HypergraphFormatError(IOError):
    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super().__init__(message)
        self.line_number = line_number


def parse(text: str, strict: bool = False) -> Hypergraph:
    """
    Parse the contents of a ``.hg`` file.

    Args:
        text:   the file contents.
        strict: if True, a repeated edge is an error; otherwise it is dropped with a
                warning.
    """
    header = None
    masks: List[int] = []
    seen = set()
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith('#'):
            continue
        try:
            numbers = [int(token) for token in line.split()]
        except ValueError:
            raise HypergraphFormatError(
                'expected whitespace-separated integers, got {!r}.'.format(line), line_number)

        if header is None:
            header = _parse_header(numbers, line_number)
            continue

        n, r = header
        for label in numbers:
            if not 1 <= label <= n:
                raise HypergraphFormatError(
                    'vertex {} is out of range 1..{}.'.format(label, n), line_number)
        distinct = set(numbers)
        if len(distinct) != r or len(numbers) != r:
            raise HypergraphFormatError(
                'edge has {} distinct vertices, expected exactly r={}.'.format(
                    len(distinct), r), line_number)
        mask = mask_from_labels(distinct)
        if mask in seen:
            if strict:
                raise HypergraphFormatError(
                    'duplicate edge {}.'.format(VertexSet(mask)), line_number)
            logger.warning('Line {}: dropping duplicate edge {}.'.format(
                line_number, VertexSet(mask)))
            continue
        seen.add(mask)
        masks.append(mask)

    if header is None:
        raise HypergraphFormatError('missing the "n r" header line.')
    n, r = header
    return Hypergraph(n, r, masks)


def _parse_header(numbers: List[int], line_number: int) -> tuple:
    if len(numbers) != 2:
        raise HypergraphFormatError(
            'the header must be "n r", got {} numbers.'.format(len(numbers)), line_number)
    n, r = numbers
    if n < 1 or not 1 <= r <= n:
        raise HypergraphFormatError(
            'the header needs n >= 1 and 1 <= r <= n, got n={}, r={}.'.format(n, r),
            line_number)
    return n, r


def serialize(hypergraph: Hypergraph) -> str:
    lines = ['{} {}'.format(hypergraph.n, hypergraph.r)]
    for edge in hypergraph:
        lines.append(' '.join(str(label) for label in edge.labels()))
    return '\n'.join(lines) + '\n'


def serialize_family(family: ColoredFamily) -> str:
    """
    Serialize each color in turn, preceded by a '# color i' comment line.
    """
    return ''.join(
        '# color {}\n{}'.format(color, serialize(member))
        for color, member in enumerate(family, start=1)
    )


def read_hypergraph(filename: str, strict: bool = False) -> Hypergraph:
    """
    Read a hypergraph from a file, or from standard input if the filename is '-'.
    """
    if filename == STDIN_FILENAME:
        return parse(sys.stdin.read(), strict=strict)
    with open(filename, 'r', encoding='utf-8') as file:
        return parse(file.read(), strict=strict)


def write_hypergraph(hypergraph: Hypergraph, file: TextIO) -> None:
    file.write(serialize(hypergraph))
