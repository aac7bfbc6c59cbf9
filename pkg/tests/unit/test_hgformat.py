import io
import logging

import pytest

from hyperext import hgformat
from hyperext.hgformat import (
    HypergraphFormatError, parse, read_hypergraph, serialize, serialize_family,
    write_hypergraph)
from hyperext.hypergraph import ColoredFamily, Hypergraph


def test_parse_skips_comments_and_blank_lines():
    text = '# a triangle\n\n3 2\n1 2\n# middle\n 3 1 \n2 3\n'

    hypergraph = parse(text)

    assert hypergraph == Hypergraph.from_labels(3, 2, [(1, 2), (1, 3), (2, 3)])


def test_serialize_is_canonical():
    hypergraph = Hypergraph.from_labels(5, 3, [(3, 4, 5), (2, 1, 3)])

    assert serialize(hypergraph) == '5 3\n1 2 3\n3 4 5\n'


def test_serialize_empty():
    assert serialize(Hypergraph.empty(4, 2)) == '4 2\n'


def test_serialize_family():
    family = ColoredFamily([
        Hypergraph.from_labels(4, 2, [(1, 2)]),
        Hypergraph.from_labels(4, 2, [(3, 4)]),
    ])

    assert serialize_family(family) == '# color 1\n4 2\n1 2\n# color 2\n4 2\n3 4\n'


def test_duplicate_edge_dropped_with_warning(caplog):
    with caplog.at_level(logging.WARNING, logger=hgformat.__name__):
        hypergraph = parse('3 2\n1 2\n2 1\n')

    assert len(hypergraph) == 1
    assert 'duplicate' in caplog.text


def test_duplicate_edge_strict():
    with pytest.raises(HypergraphFormatError) as e:
        parse('3 2\n1 2\n2 1\n', strict=True)

    assert e.value.line_number == 3


@pytest.mark.parametrize(
    'text, line_number', (
        ('', None),
        ('# only a comment\n', None),
        ('3\n', 1),
        ('2 3\n', 1),
        ('3 2\n1 x\n', 2),
        ('3 2\n1 4\n', 2),
        ('3 2\n1 2 3\n', 2),
        ('3 2\n1 1\n', 2),
    )
)
def test_malformed(text, line_number):
    with pytest.raises(HypergraphFormatError) as e:
        parse(text)

    assert e.value.line_number == line_number


def test_format_errors_are_io_errors():
    assert issubclass(HypergraphFormatError, IOError)


def test_read_and_write_file(tmp_path):
    hypergraph = Hypergraph.from_labels(4, 2, [(1, 2), (2, 4)])
    path = tmp_path / 'graph.hg'
    with open(str(path), 'w') as file:
        write_hypergraph(hypergraph, file)

    assert read_hypergraph(str(path)) == hypergraph


def test_read_from_standard_input(monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO('4 2\n3 4\n'))

    assert read_hypergraph('-') == Hypergraph.from_labels(4, 2, [(3, 4)])
