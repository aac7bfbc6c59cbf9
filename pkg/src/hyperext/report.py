from typing import Any, Dict, List, Optional, Type
import json

import click

from .cliques import CliqueCount
from .hgformat import serialize
from .hypergraph import Hypergraph
from .inequalities import FAILS, HOLDS, InequalityVerdict
from .matchings import Matching, RainbowMatching
from .shifting import ShiftTrace
from .verifier import SCHEMA, Status, VerificationReport

VERBOSITY_QUIET = 0
VERBOSITY_NORMAL = 1
VERBOSITY_HIGH = 2

FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'
FORMATS = (FORMAT_TEXT, FORMAT_JSON)


def get_report_class(output_format: str, verbosity: int) -> Type['BaseReport']:
    if output_format == FORMAT_JSON:
        return JsonLinesReport
    return {
        VERBOSITY_QUIET: QuietReport,
        VERBOSITY_NORMAL: NormalReport,
        VERBOSITY_HIGH: VerboseReport,
    }[verbosity]


class BaseReport:
    """
    Collects command results and writes them to the console.

    Plain results (counts, hypergraphs, matchings) are written as soon as they are
    given. Verification reports are collected with add_verification and written by
    output_verifications.
    """
    def __init__(self) -> None:
        self.verifications: List[VerificationReport] = []
        self.has_counterexamples = False
        self.has_budget_exceeded = False

    def add_verification(self, report: VerificationReport) -> None:
        self.verifications.append(report)
        if report.is_counterexample:
            self.has_counterexamples = True
        if report.budget_exceeded:
            self.has_budget_exceeded = True

    # Plain results.

    def output_hypergraph(self, hypergraph: Hypergraph) -> None:
        click.echo(serialize(hypergraph), nl=False)

    def output_trace(self, trace: ShiftTrace) -> None:
        ConsolePrinter.print_note('Stabilized: {}.'.format(trace))

    def output_count(self, count: CliqueCount) -> None:
        ConsolePrinter.print(str(count.total))
        if count.per_vertex is not None:
            for label, value in sorted(count.per_vertex.items()):
                ConsolePrinter.print('{}: {}'.format(label, value))

    def output_matching(self, size: int, matching: Matching) -> None:
        ConsolePrinter.print(str(size))
        ConsolePrinter.print(str(matching))

    def output_value(self, value: int) -> None:
        ConsolePrinter.print(str(value))

    def output_rainbow(self, matching: Optional[RainbowMatching],
                       verdicts: Optional[List[bool]] = None) -> None:
        ConsolePrinter.print(str(matching) if matching is not None else 'none')
        for color, verdict in enumerate(verdicts or [], start=1):
            ConsolePrinter.print('color {}: hypothesis {}'.format(
                color, 'holds' if verdict else 'fails'))

    def output_inequalities(self, verdicts: List[InequalityVerdict]) -> None:
        for verdict in verdicts:
            ConsolePrinter.print_verdict(verdict)

    # Verification reports.

    def output_verifications(self) -> None:
        self._output_title()
        for report in self.verifications:
            self._output_verification(report)
        self._output_summary()

    def _output_title(self) -> None:
        ConsolePrinter.print_heading('Verification', ConsolePrinter.HEADING_LEVEL_ONE)

    def _output_verification(self, report: VerificationReport) -> None:
        ConsolePrinter.print_report_one_liner(report)
        if report.message:
            ConsolePrinter.indent_cursor()
            ConsolePrinter.print_error(report.message, bold=False, err=False)

    def _output_summary(self) -> None:
        ConsolePrinter.new_line()
        counts = {status: 0 for status in Status}
        budget_exceeded = 0
        for report in self.verifications:
            if report.status is None:
                budget_exceeded += 1
            else:
                counts[report.status] += 1
        summary = ('Cells: {} confirmed, {} not yet active, {} counterexamples, '
                   '{} over budget.').format(
            counts[Status.CONFIRMED], counts[Status.NOT_YET_ACTIVE],
            counts[Status.COUNTEREXAMPLE], budget_exceeded)
        if self.has_counterexamples or self.has_budget_exceeded:
            ConsolePrinter.print_error(summary, err=False)
        else:
            ConsolePrinter.print_success(summary)
        ConsolePrinter.new_line()


class NormalReport(BaseReport):
    pass


class QuietReport(NormalReport):
    """
    Report that only writes the results themselves: no headings, no trace summaries, and
    only the verification cells that did not confirm.
    """
    def output_trace(self, trace: ShiftTrace) -> None:
        pass

    def output_verifications(self) -> None:
        for report in self.verifications:
            if report.status is not Status.CONFIRMED:
                self._output_verification(report)


class VerboseReport(BaseReport):
    def output_trace(self, trace: ShiftTrace) -> None:
        super().output_trace(trace)
        for application in trace.applications:
            ConsolePrinter.print_note('    {}'.format(application))

    def _output_verification(self, report: VerificationReport) -> None:
        super()._output_verification(report)
        for key, value in sorted(report.details.items()):
            ConsolePrinter.indent_cursor()
            ConsolePrinter.print('{}: {}'.format(key, value))
        ConsolePrinter.indent_cursor()
        ConsolePrinter.print('search: {}'.format(report.stats))
        witness = report.witness_text()
        if witness is not None:
            ConsolePrinter.indent_cursor()
            ConsolePrinter.print('witness:', bold=True)
            for line in witness.splitlines():
                ConsolePrinter.indent_cursor()
                ConsolePrinter.indent_cursor()
                ConsolePrinter.print(line)


class JsonLinesReport(BaseReport):
    """
    Writes every result as one JSON object per line. Counts are decimal strings.
    """
    def _write(self, data: Dict[str, Any]) -> None:
        data['schema'] = SCHEMA
        click.echo(json.dumps(data, sort_keys=True))

    def output_hypergraph(self, hypergraph: Hypergraph) -> None:
        self._write({'hypergraph': serialize(hypergraph)})

    def output_trace(self, trace: ShiftTrace) -> None:
        self._write({
            'applications': [[item.i, item.j, item.moved] for item in trace.applications],
            'rounds': trace.rounds,
        })

    def output_count(self, count: CliqueCount) -> None:
        data: Dict[str, Any] = {'s': count.s, 'count': str(count.total)}
        if count.per_vertex is not None:
            data['per_vertex'] = {
                str(label): str(value) for label, value in count.per_vertex.items()}
        self._write(data)

    def output_matching(self, size: int, matching: Matching) -> None:
        self._write({
            'matching_number': str(size),
            'matching': [list(edge.labels()) for edge in matching],
        })

    def output_value(self, value: int) -> None:
        self._write({'value': str(value)})

    def output_rainbow(self, matching: Optional[RainbowMatching],
                       verdicts: Optional[List[bool]] = None) -> None:
        data: Dict[str, Any] = {
            'rainbow_matching': None if matching is None else [
                [color, list(edge.labels())] for color, edge in matching.picks],
        }
        if verdicts is not None:
            data['hypothesis'] = verdicts
        self._write(data)

    def output_inequalities(self, verdicts: List[InequalityVerdict]) -> None:
        self._write({'inequalities': [verdict.to_dict() for verdict in verdicts]})

    def output_verifications(self) -> None:
        for report in self.verifications:
            click.echo(report.to_json())


class ConsolePrinter:
    ERROR = 'error'
    SUCCESS = 'success'
    WARNING = 'warning'
    COLORS = {
        ERROR: 'red',
        SUCCESS: 'green',
        WARNING: 'yellow',
    }

    HEADING_LEVEL_ONE = 1

    HEADING_MAP = {
        HEADING_LEVEL_ONE: ('=', True),
    }

    INDENT_SIZE = 4

    STATUS_STYLES = {
        Status.CONFIRMED: ('CONFIRMED', SUCCESS),
        Status.NOT_YET_ACTIVE: ('NOT YET ACTIVE', WARNING),
        Status.COUNTEREXAMPLE: ('COUNTEREXAMPLE', ERROR),
        None: ('BUDGET EXCEEDED', ERROR),
    }

    @classmethod
    def print_heading(cls, text, level, style=None):
        """
        Prints the supplied text to the console, formatted as a heading.

        Args:
            text (str): the text to format as a heading.
            level (int): the level of heading to display (one of the keys of HEADING_MAP).
            style (str, optional): ERROR or SUCCESS style to apply (default None).
        Usage:

            ConsolePrinter.print_heading('Foo', ConsolePrinter.HEADING_LEVEL_ONE)
        """
        is_bold = True
        color = cls.COLORS[style] if style else None
        line_char, show_line_above = cls.HEADING_MAP[level]
        heading_line = line_char * len(text)

        if show_line_above:
            click.secho(heading_line, bold=is_bold, fg=color)
        click.secho(text, bold=is_bold, fg=color)
        click.secho(heading_line, bold=is_bold, fg=color)
        click.echo()

    @classmethod
    def print(cls, text, bold=False):
        """
        Prints a line to the console.
        """
        click.secho(text, bold=bold)

    @classmethod
    def print_note(cls, text):
        """
        Prints a line to standard error, leaving standard output free for piping.
        """
        click.secho(text, err=True)

    @classmethod
    def print_success(cls, text, bold=True):
        """
        Prints a line to the console, formatted as a success.
        """
        click.secho(text, fg=cls.COLORS[cls.SUCCESS], bold=bold)

    @classmethod
    def print_error(cls, text, bold=True, err=True):
        """
        Prints a line formatted as an error, to standard error unless err is False.
        """
        click.secho(text, fg=cls.COLORS[cls.ERROR], bold=bold, err=err)

    @classmethod
    def indent_cursor(cls):
        """
        Indents the cursor ready to print a line.
        """
        click.echo(' ' * cls.INDENT_SIZE, nl=False)

    @classmethod
    def new_line(cls):
        click.echo()

    @classmethod
    def print_verdict(cls, verdict: InequalityVerdict) -> None:
        click.secho('({}) {} '.format(verdict.identifier, verdict.statement), nl=False)
        style = {HOLDS: cls.SUCCESS, FAILS: cls.ERROR}.get(verdict.status, cls.WARNING)
        text = verdict.status.upper()
        if verdict.message:
            text += ' ({})'.format(verdict.message)
        click.secho(text, fg=cls.COLORS[style], bold=True)

    @classmethod
    def print_report_one_liner(cls, report: VerificationReport) -> None:
        click.secho('{} '.format(report.kind), nl=False)
        click.secho(', '.join('{}={}'.format(name, value)
                              for name, value in report.cell.items()), nl=False)
        if report.regime is not None:
            click.secho(' ({})'.format(report.regime), nl=False)
        click.secho(': claimed {}, observed {} '.format(
            report.claimed_bound, report.observed_max), nl=False)
        text, style = cls.STATUS_STYLES[report.status]
        click.secho(text, fg=cls.COLORS[style], bold=True)
