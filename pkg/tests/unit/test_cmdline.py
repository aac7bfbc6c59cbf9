from unittest.mock import patch

import pytest

from hyperext import cmdline
from hyperext.cmdline import (
    EXIT_STATUS_BUDGET_EXCEEDED, EXIT_STATUS_ERROR, EXIT_STATUS_FAILURE, EXIT_STATUS_SUCCESS,
    _main, _normalise_verbosity, create_parser)
from hyperext.report import (
    FORMAT_JSON, VERBOSITY_HIGH, VERBOSITY_NORMAL, VERBOSITY_QUIET, JsonLinesReport,
    NormalReport)
from hyperext.search import BudgetExceeded, SearchStats
from hyperext.verifier import KIND_EXTREMAL, Status, VerificationReport


@pytest.mark.parametrize(
    'verbosity,is_quiet,expected_result', (
        (0, True, VERBOSITY_QUIET),
        (0, False, VERBOSITY_NORMAL),
        (1, False, VERBOSITY_HIGH),
        (1, True, "Invalid parameters: quiet and verbose called together. Choose one or the "
                  "other."),
        (2, False, "That level of verbosity is not supported. Maximum verbosity is -v."),
    )
)
def test_normalise_verbosity(verbosity, is_quiet, expected_result):
    if expected_result in (VERBOSITY_QUIET, VERBOSITY_NORMAL, VERBOSITY_HIGH):
        result = _normalise_verbosity(verbosity, is_quiet)
        assert result == expected_result
    else:
        with pytest.raises(RuntimeError) as e:
            _normalise_verbosity(verbosity, is_quiet)
        assert str(e.value) == expected_result


@pytest.mark.parametrize(
    'is_debug', (True, False)
)
@patch.object(cmdline, 'closed_form_clique_count', return_value=8)
@patch.object(cmdline, 'logging')
def test_debug(mock_logging, mock_closed_form, is_debug):
    argv = ['closed-form', '--n', '7', '--k', '2', '--r', '3', '--a', '3', '--s', '7']
    if is_debug:
        argv.append('--debug')

    _main(create_parser().parse_args(argv))

    if is_debug:
        mock_logging.basicConfig.assert_called_once_with(level=mock_logging.DEBUG)
    else:
        mock_logging.basicConfig.assert_not_called()


class TestParser:
    def test_verify_subcommand(self):
        args = create_parser().parse_args(
            ['verify', 'extremal', '--n', '6', '--k', '1', '--r', '2', '--s', '3', '--jobs',
             '2', '--max-nodes', '100'])

        assert args.command == 'verify'
        assert args.verify_command == 'extremal'
        assert (args.n, args.k, args.r, args.s) == (6, 1, 2, 3)
        assert args.jobs == 2
        assert args.max_nodes == 100
        assert not args.full_enumeration

    def test_file_defaults_to_standard_input(self):
        args = create_parser().parse_args(['nu'])

        assert args.file == '-'
        assert args.output_format == 'text'

    def test_missing_command(self):
        with pytest.raises(SystemExit) as e:
            create_parser().parse_args([])
        assert e.value.code == EXIT_STATUS_ERROR

    def test_missing_required_argument(self):
        with pytest.raises(SystemExit) as e:
            create_parser().parse_args(['construct', '--n', '6'])
        assert e.value.code == EXIT_STATUS_ERROR


class TestReportSelection:
    @patch.object(cmdline, 'closed_form_clique_count', return_value=8)
    @patch.object(NormalReport, 'output_value')
    def test_text(self, mock_output_value, mock_closed_form):
        _main(create_parser().parse_args(
            ['closed-form', '--n', '7', '--k', '2', '--r', '3', '--a', '3', '--s', '7']))

        mock_output_value.assert_called_once_with(8)

    @patch.object(cmdline, 'closed_form_clique_count', return_value=8)
    @patch.object(JsonLinesReport, 'output_value')
    def test_json(self, mock_output_value, mock_closed_form):
        _main(create_parser().parse_args(
            ['closed-form', '--n', '7', '--k', '2', '--r', '3', '--a', '3', '--s', '7',
             '--format', FORMAT_JSON]))

        mock_output_value.assert_called_once_with(8)


def _verification(status):
    return VerificationReport(KIND_EXTREMAL, {'n': 6, 'k': 1, 'r': 2, 's': 3}, 1, 1, status)


@pytest.mark.parametrize(
    'status, expected_exit_status', (
        (Status.CONFIRMED, EXIT_STATUS_SUCCESS),
        (Status.NOT_YET_ACTIVE, EXIT_STATUS_SUCCESS),
        (Status.COUNTEREXAMPLE, EXIT_STATUS_FAILURE),
        (None, EXIT_STATUS_BUDGET_EXCEEDED),
    )
)
@patch.object(cmdline, 'verify_extremal_cell')
def test_verification_exit_status(mock_verify, status, expected_exit_status):
    mock_verify.return_value = _verification(status)

    exit_status = _main(create_parser().parse_args(
        ['verify', 'extremal', '--n', '6', '--k', '1', '--r', '2', '--s', '3', '--quiet']))

    assert exit_status == expected_exit_status


@pytest.mark.parametrize(
    'exception, expected_exit_status', (
        (BudgetExceeded('node budget exceeded', SearchStats(nodes=6)),
         EXIT_STATUS_BUDGET_EXCEEDED),
        (ValueError('Bad cell.'), EXIT_STATUS_ERROR),
        (IOError('No such file.'), EXIT_STATUS_ERROR),
    )
)
@patch.object(cmdline, 'ConsolePrinter')
@patch.object(cmdline, 'closed_form_clique_count')
def test_errors(mock_closed_form, mock_printer, exception, expected_exit_status):
    mock_closed_form.side_effect = exception

    exit_status = _main(create_parser().parse_args(
        ['closed-form', '--n', '7', '--k', '2', '--r', '3', '--a', '3', '--s', '7']))

    assert exit_status == expected_exit_status
    mock_printer.print_error.assert_called_once_with(str(exception))


@patch.object(cmdline, 'ConsolePrinter')
def test_quiet_and_verbose_together(mock_printer):
    exit_status = _main(create_parser().parse_args(
        ['closed-form', '--n', '7', '--k', '2', '--r', '3', '--a', '3', '--s', '7', '-v',
         '--quiet']))

    assert exit_status == EXIT_STATUS_ERROR
    mock_printer.print_error.assert_called_once()
