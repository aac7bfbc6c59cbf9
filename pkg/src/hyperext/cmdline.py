from typing import Callable, Dict, Optional, Sequence
import argparse
import logging

from .cliques import count_cliques
from .extremal import build_extremal_family, closed_form_clique_count, rainbow_hypothesis_check
from .hgformat import STDIN_FILENAME, read_hypergraph, write_hypergraph
from .hypergraph import ColoredFamily, Hypergraph
from .inequalities import FAILS, binomial_inequality_suite
from .matchings import find_rainbow_matching, matching_number
from .report import (
    FORMAT_TEXT, FORMATS, VERBOSITY_HIGH, VERBOSITY_NORMAL, VERBOSITY_QUIET, BaseReport,
    ConsolePrinter, get_report_class)
from .search import Budget, BudgetExceeded
from .shifting import shift, stabilize
from .sweep import get_sweeps, run_sweeps
from .verifier import verify_extremal_cell, verify_head_intersection, verify_rainbow_cell


logger = logging.getLogger(__name__)

EXIT_STATUS_SUCCESS = 0
EXIT_STATUS_FAILURE = 1
EXIT_STATUS_ERROR = 2
EXIT_STATUS_BUDGET_EXCEEDED = 3


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--format',
        choices=FORMATS,
        default=FORMAT_TEXT,
        dest='output_format',
        help="Output format: 'text' for people, 'json' for one JSON object per line.",
    )
    parser.add_argument(
        '--jobs',
        type=int,
        default=1,
        help='Number of worker processes.',
    )
    parser.add_argument(
        '--max-nodes',
        type=int,
        default=None,
        help='Give up any single search after visiting this many nodes.',
    )
    parser.add_argument(
        '--max-seconds',
        type=float,
        default=None,
        help='Give up any single search after this many seconds.',
    )
    parser.add_argument(
        '--seed',
        type=int,
        default=0,
        help='Seed for randomized families.',
    )
    parser.add_argument(
        '--strict',
        action='store_true',
        help='Treat duplicate edges in input files as errors rather than warnings.',
    )
    parser.add_argument(
        '-v',
        '--verbose',
        action='count',
        default=0,
        dest='verbosity_count',
        help='Increase verbosity.',
    )
    parser.add_argument(
        '--quiet',
        action='store_true',
        dest='is_quiet',
        help='Only output results, and only the verification cells that did not confirm.',
    )
    parser.add_argument(
        '--debug',
        action='store_true',
        dest='is_debug',
        help='Whether to display debug information.',
    )


def _add_file_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        'file',
        nargs='?',
        default=STDIN_FILENAME,
        help="A .hg hypergraph file, or '-' for standard input (the default).",
    )


def _add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '-o',
        '--output',
        default=None,
        help='Write the hypergraph to this file instead of standard output.',
    )


def _add_cell_arguments(parser: argparse.ArgumentParser, last: str) -> None:
    for name in ('n', 'k', 'r', last):
        parser.add_argument('--{}'.format(name), type=int, required=True)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='hyperext',
        description='Exact clique counts, matchings and shifting for uniform hypergraphs, '
                    'and exhaustive checks of extremal bounds on small cases.',
    )
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    construct = commands.add_parser(
        'construct', help='Write the extremal family F(n, k, r, a) in .hg format.')
    for name in ('n', 'k', 'r', 'a'):
        construct.add_argument('--{}'.format(name), type=int, required=True)
    _add_output_argument(construct)

    count = commands.add_parser('count', help='Count the s-cliques of a hypergraph.')
    count.add_argument('--s', type=int, required=True)
    count.add_argument('--per-vertex', action='store_true',
                       help='Also count the s-cliques through every vertex.')
    _add_file_argument(count)

    nu = commands.add_parser('nu', help='Compute the matching number and a maximum matching.')
    _add_file_argument(nu)

    shift_parser = commands.add_parser('shift', help='Apply the shifting operator S_ij.')
    shift_parser.add_argument('--i', type=int, required=True)
    shift_parser.add_argument('--j', type=int, required=True)
    _add_file_argument(shift_parser)
    _add_output_argument(shift_parser)

    stabilize_parser = commands.add_parser(
        'stabilize', help='Shift until stable and summarize the shifts applied.')
    _add_file_argument(stabilize_parser)
    _add_output_argument(stabilize_parser)

    closed_form = commands.add_parser(
        'closed-form', help='The s-clique count of F(n, k, r, a), from its closed form.')
    for name in ('n', 'k', 'r', 'a', 's'):
        closed_form.add_argument('--{}'.format(name), type=int, required=True)

    verify = commands.add_parser('verify', help='Check extremal statements exhaustively.')
    checks = verify.add_subparsers(dest='verify_command', metavar='check')
    checks.required = True
    extremal = checks.add_parser(
        'extremal', help='Maximize s-cliques over r-graphs with matching number at most k.')
    _add_cell_arguments(extremal, 's')
    extremal.add_argument('--full-enumeration', action='store_true',
                          help='Walk every r-graph, not only the stable ones.')
    sweep = checks.add_parser('sweep', help='Run the parameter grids of a YAML file.')
    sweep.add_argument('--config', required=True, help='The YAML file describing the sweeps.')
    rainbow_check = checks.add_parser(
        'rainbow', help='Check the rainbow-matching statements on seeded families.')
    _add_cell_arguments(rainbow_check, 't')
    rainbow_check.add_argument('--trials', type=int, default=20)
    head = checks.add_parser(
        'head-intersection',
        help='Check that edges of qualifying stable r-graphs meet the head segment.')
    _add_cell_arguments(head, 's')

    rainbow = commands.add_parser(
        'rainbow', help='Search for a rainbow matching, one file per color.')
    rainbow.add_argument('files', nargs='+', help='One .hg file per color.')
    rainbow.add_argument('--check-hypothesis', action='store_true',
                         help='Also report, per color, the clique-count hypothesis.')
    rainbow.add_argument('--t', type=int, default=None,
                         help='Largest clique size for the hypothesis check.')

    ineq = commands.add_parser('ineq', help='Check the binomial estimates exactly.')
    for name in ('a', 'b', 'c'):
        ineq.add_argument('--{}'.format(name), type=int, required=True)
    ineq.add_argument('--p', type=int, default=None)
    ineq.add_argument('--x', default=None, help="A rational such as '1/3'.")

    for subparser in (construct, count, nu, shift_parser, stabilize_parser, closed_form,
                      extremal, sweep, rainbow_check, head, rainbow, ineq):
        _add_common_arguments(subparser)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)
    return _main(args)


def _main(args: argparse.Namespace) -> int:
    if args.is_debug:
        logging.basicConfig(level=logging.DEBUG)

    try:
        verbosity = _normalise_verbosity(args.verbosity_count, args.is_quiet)
    except Exception as e:
        ConsolePrinter.print_error(str(e))
        return EXIT_STATUS_ERROR

    report_class = get_report_class(args.output_format, verbosity)
    report = report_class()

    command = args.command
    if command == 'verify':
        command = 'verify {}'.format(args.verify_command)

    try:
        budget = Budget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)
        return COMMANDS[command](args, report, budget)
    except BudgetExceeded as e:
        ConsolePrinter.print_error(str(e))
        return EXIT_STATUS_BUDGET_EXCEEDED
    except (ValueError, IOError) as e:
        ConsolePrinter.print_error(str(e))
        return EXIT_STATUS_ERROR


def _normalise_verbosity(verbosity_count: int, is_quiet: bool) -> int:
    """
    Validate verbosity, and parse quiet mode into a verbosity level.

    Args:
        verbosity_count (int): the number of 'v's passed as command line arguments. For example,
                               -vv would be 2.
        is_quiet (bool):       whether the '--quiet' flag was passed.

    Returns:
        Verbosity level (int): either VERBOSITY_QUIET, VERBOSITY_NORMAL or VERBOSITY_HIGH.
    """
    VERBOSITY_BY_COUNT = (VERBOSITY_NORMAL, VERBOSITY_HIGH)

    if is_quiet:
        if verbosity_count > 0:
            raise RuntimeError(
                "Invalid parameters: quiet and verbose called together. Choose one or the other.")
        return VERBOSITY_QUIET

    try:
        return VERBOSITY_BY_COUNT[verbosity_count]
    except IndexError:
        raise RuntimeError(
            "That level of verbosity is not supported. "
            "Maximum verbosity is -{}.".format('v' * (len(VERBOSITY_BY_COUNT) - 1)))


def _read(args: argparse.Namespace) -> Hypergraph:
    return read_hypergraph(args.file, strict=args.strict)


def _emit_hypergraph(hypergraph: Hypergraph, args: argparse.Namespace,
                     report: BaseReport) -> None:
    if args.output is None:
        report.output_hypergraph(hypergraph)
    else:
        with open(args.output, 'w', encoding='utf-8') as file:
            write_hypergraph(hypergraph, file)
        logger.debug('Wrote {} to {}.'.format(hypergraph, args.output))


def _run_construct(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    _emit_hypergraph(build_extremal_family(args.n, args.k, args.r, args.a), args, report)
    return EXIT_STATUS_SUCCESS


def _run_count(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    count = count_cliques(_read(args), args.s, per_vertex=args.per_vertex, jobs=args.jobs)
    report.output_count(count)
    return EXIT_STATUS_SUCCESS


def _run_nu(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    size, matching = matching_number(_read(args), budget)
    report.output_matching(size, matching)
    return EXIT_STATUS_SUCCESS


def _run_shift(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    _emit_hypergraph(shift(_read(args), args.i, args.j), args, report)
    return EXIT_STATUS_SUCCESS


def _run_stabilize(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    trace = stabilize(_read(args))
    _emit_hypergraph(trace.result, args, report)
    report.output_trace(trace)
    return EXIT_STATUS_SUCCESS


def _run_closed_form(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    report.output_value(closed_form_clique_count(args.n, args.k, args.r, args.a, args.s))
    return EXIT_STATUS_SUCCESS


def _finish_verification(report: BaseReport) -> int:
    report.output_verifications()
    if report.has_counterexamples:
        return EXIT_STATUS_FAILURE
    if report.has_budget_exceeded:
        return EXIT_STATUS_BUDGET_EXCEEDED
    return EXIT_STATUS_SUCCESS


def _run_verify_extremal(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    report.add_verification(verify_extremal_cell(
        args.n, args.k, args.r, args.s, budget=budget, jobs=args.jobs,
        full_enumeration=args.full_enumeration))
    return _finish_verification(report)


def _run_verify_sweep(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    for verification in run_sweeps(get_sweeps(args.config), jobs=args.jobs, budget=budget):
        report.add_verification(verification)
    return _finish_verification(report)


def _run_verify_rainbow(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    report.add_verification(verify_rainbow_cell(
        args.n, args.k, args.r, args.t, trials=args.trials, seed=args.seed, budget=budget))
    return _finish_verification(report)


def _run_verify_head_intersection(args: argparse.Namespace, report: BaseReport,
                                  budget: Budget) -> int:
    report.add_verification(verify_head_intersection(
        args.n, args.k, args.r, args.s, budget=budget, jobs=args.jobs))
    return _finish_verification(report)


def _run_rainbow(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    if list(args.files).count(STDIN_FILENAME) > 1:
        raise ValueError('Standard input can only supply one color.')
    if args.check_hypothesis and args.t is None:
        raise ValueError('--check-hypothesis needs --t.')
    family = ColoredFamily([read_hypergraph(name, strict=args.strict) for name in args.files])
    matching = find_rainbow_matching(family, budget)
    verdicts = rainbow_hypothesis_check(family, args.t) if args.check_hypothesis else None
    report.output_rainbow(matching, verdicts)
    return EXIT_STATUS_SUCCESS if matching is not None else EXIT_STATUS_FAILURE


def _run_ineq(args: argparse.Namespace, report: BaseReport, budget: Budget) -> int:
    verdicts = binomial_inequality_suite(args.a, args.b, args.c, p=args.p, x=args.x)
    report.output_inequalities(verdicts)
    if any(verdict.status == FAILS for verdict in verdicts):
        return EXIT_STATUS_FAILURE
    return EXIT_STATUS_SUCCESS


COMMANDS: Dict[str, Callable[[argparse.Namespace, BaseReport, Budget], int]] = {
    'construct': _run_construct,
    'count': _run_count,
    'nu': _run_nu,
    'shift': _run_shift,
    'stabilize': _run_stabilize,
    'closed-form': _run_closed_form,
    'verify extremal': _run_verify_extremal,
    'verify sweep': _run_verify_sweep,
    'verify rainbow': _run_verify_rainbow,
    'verify head-intersection': _run_verify_head_intersection,
    'rainbow': _run_rainbow,
    'ineq': _run_ineq,
}
