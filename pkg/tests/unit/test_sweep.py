import os

import pytest

from hyperext.sweep import (
    Bound, Sweep, SweepConfigParseError, cell_is_valid, get_sweeps, parse_grid, parse_range,
    run_sweeps, sweep_from_yaml)
from hyperext.verifier import KIND_EXTREMAL, KIND_HEAD_INTERSECTION, KIND_RAINBOW

assets_path = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'assets'))


class TestBound:
    @pytest.mark.parametrize(
        'text, expected', (
            ('7', 7),
            ('r*k+r-1', 8),
            ('k + r', 5),
            ('min(n, r*k+r-1)', 6),
            ('max(r, (n - 1) // 2)', 3),
            ('-k + n', 4),
        )
    )
    def test_evaluate(self, text, expected):
        bound = Bound(text, ('n', 'k', 'r'))

        assert bound.evaluate({'n': 6, 'k': 2, 'r': 3}) == expected

    @pytest.mark.parametrize(
        'text', (
            's + 1',
            '__import__("os")',
            'n ** 2',
            'n / 2',
            'n.real',
            '1.5',
            'min()',
            'n +',
        )
    )
    def test_rejected(self, text):
        with pytest.raises(SweepConfigParseError):
            Bound(text, ('n', 'k', 'r'))


def test_parse_range():
    variable = parse_range('s', 'r..min(n, r*k+r-1)', ('n', 'k', 'r'))

    assert list(variable.values({'n': 6, 'k': 2, 'r': 3})) == [3, 4, 5, 6]
    assert str(variable) == 's=r..min(n, r*k+r-1)'


def test_parse_single_value():
    variable = parse_range('k', '2', ())

    assert list(variable.values({})) == [2]


def test_parse_grid_keeps_commas_inside_calls():
    assert parse_grid('n=6..10, k=1..2, s=r..min(n, r*k+r-1)') == [
        ('n', '6..10'), ('k', '1..2'), ('s', 'r..min(n, r*k+r-1)')]


def test_parse_grid_needs_assignments():
    with pytest.raises(SweepConfigParseError):
        parse_grid('n=6, k')


class TestSweepFromYaml:
    def test_grid(self):
        sweep = sweep_from_yaml('Grid', {
            'kind': 'extremal',
            'grid': 'n=5..6, k=1, r=2, s=r..r*k+r-1',
        })

        assert list(sweep.cells()) == [
            {'n': 5, 'k': 1, 'r': 2, 's': 2},
            {'n': 5, 'k': 1, 'r': 2, 's': 3},
            {'n': 6, 'k': 1, 'r': 2, 's': 2},
            {'n': 6, 'k': 1, 'r': 2, 's': 3},
        ]

    def test_keys_and_options(self):
        sweep = sweep_from_yaml('Keys', {
            'kind': 'rainbow', 'n': '6..7', 'k': 2, 'r': 2, 't': 'r..k+r-2',
            'trials': 4, 'seed': 9,
        })

        assert isinstance(sweep, Sweep)
        assert sweep.options == {'trials': 4, 'seed': 9}
        assert len(list(sweep.cells())) == 2

    @pytest.mark.parametrize(
        'data', (
            {'grid': 'n=5, k=1, r=2, s=2'},
            {'kind': 'unknown', 'grid': 'n=5, k=1, r=2, s=2'},
            {'kind': 'extremal', 'grid': 'n=5, k=1, r=2'},
            {'kind': 'extremal', 'grid': 'n=5, k=1, r=2, t=2'},
            {'kind': 'extremal', 'grid': 'n=5, k=1, r=2, s=2', 'colour': 'red'},
            {'kind': 'extremal', 'grid': 'n=5, k=1, r=s, s=2'},
            ['not', 'a', 'mapping'],
        )
    )
    def test_invalid(self, data):
        with pytest.raises(SweepConfigParseError):
            sweep_from_yaml('Invalid', data)


class TestGetSweeps:
    def test_reads_in_file_order(self):
        sweeps = get_sweeps(os.path.join(assets_path, 'sweeps.yml'))

        assert [sweep.name for sweep in sweeps] == [
            'Upper regime, k=1', 'Pairs and triangles', 'Triangle heads', 'Rainbow pairs']
        assert [sweep.kind for sweep in sweeps] == [
            KIND_EXTREMAL, KIND_EXTREMAL, KIND_HEAD_INTERSECTION, KIND_RAINBOW]

    @pytest.mark.parametrize('filename', ('malformed.yml', 'invalid_sweeps.yml'))
    def test_invalid_file(self, filename):
        with pytest.raises(SweepConfigParseError):
            get_sweeps(os.path.join(assets_path, filename))

    def test_missing_file(self):
        with pytest.raises(IOError):
            get_sweeps(os.path.join(assets_path, 'missing.yml'))


@pytest.mark.parametrize(
    'kind, cell, expected', (
        (KIND_EXTREMAL, {'n': 6, 'k': 1, 'r': 2, 's': 3}, True),
        (KIND_EXTREMAL, {'n': 2, 'k': 1, 'r': 2, 's': 3}, False),
        (KIND_EXTREMAL, {'n': 6, 'k': 1, 'r': 2, 's': 4}, False),
        (KIND_EXTREMAL, {'n': 6, 'k': 1, 'r': 1, 's': 2}, False),
        (KIND_EXTREMAL, {'n': 6, 'k': 0, 'r': 2, 's': 2}, False),
        (KIND_HEAD_INTERSECTION, {'n': 6, 'k': 1, 'r': 2, 's': 3}, True),
        (KIND_HEAD_INTERSECTION, {'n': 6, 'k': 1, 'r': 2, 's': 2}, False),
        (KIND_RAINBOW, {'n': 6, 'k': 2, 'r': 2, 't': 2}, True),
        (KIND_RAINBOW, {'n': 6, 'k': 1, 'r': 2, 't': 2}, True),
        (KIND_RAINBOW, {'n': 6, 'k': 1, 'r': 2, 't': 3}, False),
        (KIND_RAINBOW, {'n': 6, 'k': 2, 'r': 2, 't': 3}, False),
    )
)
def test_cell_is_valid(kind, cell, expected):
    assert cell_is_valid(kind, cell) is expected


class TestRunSweeps:
    def test_reports_in_sweep_order(self):
        sweeps = get_sweeps(os.path.join(assets_path, 'sweeps.yml'))

        reports = run_sweeps(sweeps)

        assert [(report.details['sweep'], report.cell) for report in reports] == [
            ('Upper regime, k=1', {'n': 5, 'k': 1, 'r': 2, 's': 3}),
            ('Upper regime, k=1', {'n': 6, 'k': 1, 'r': 2, 's': 3}),
            ('Pairs and triangles', {'n': 5, 'k': 1, 'r': 2, 's': 2}),
            ('Pairs and triangles', {'n': 5, 'k': 1, 'r': 2, 's': 3}),
            ('Pairs and triangles', {'n': 6, 'k': 1, 'r': 2, 's': 2}),
            ('Pairs and triangles', {'n': 6, 'k': 1, 'r': 2, 's': 3}),
            ('Triangle heads', {'n': 6, 'k': 1, 'r': 2, 's': 3}),
            ('Rainbow pairs', {'n': 6, 'k': 2, 'r': 2, 't': 2}),
        ]
        assert not any(report.is_counterexample for report in reports)
        assert reports[-1].details['trials'] == 3
        assert reports[-1].details['seed'] == 7

    def test_parallel_matches_serial(self):
        sweeps = get_sweeps(os.path.join(assets_path, 'sweeps.yml'))

        serial = run_sweeps(sweeps)
        parallel = run_sweeps(sweeps, jobs=2)

        assert [report.to_dict(include_timing=False) for report in parallel] == \
            [report.to_dict(include_timing=False) for report in serial]

    def test_invalid_cells_skipped(self):
        sweep = sweep_from_yaml('Too wide', {
            'kind': 'extremal', 'grid': 'n=6, k=1, r=2, s=2..5'})

        reports = run_sweeps([sweep])

        assert [report.cell['s'] for report in reports] == [2, 3]
