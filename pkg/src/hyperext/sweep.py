"""
Parameter sweeps read from a YAML file.

Each top-level key names a sweep:

    Upper regime, small k:
        kind: extremal
        grid: "n=6..10, k=1..2, r=2..3, s=r..min(n, r*k+r-1)"

    Rainbow boundary:
        kind: rainbow
        n: 6..8
        k: 2..3
        r: 2
        t: r..k+r-2
        trials: 20
        seed: 7

Each variable is bound to an inclusive range `lo..hi` or a single value. The bounds are
integer expressions over the variables written before it, using + - * //, parentheses,
min(...) and max(...).
"""
from multiprocessing import Pool
from typing import Any, Dict, Iterator, List, Optional, Tuple
import ast
import logging

import yaml

from .extremal import ExtremalParams, rainbow_t_range, theorem_bound
from .search import UNLIMITED, Budget
from .verifier import (
    KIND_EXTREMAL, KIND_HEAD_INTERSECTION, KIND_RAINBOW, VerificationReport,
    verify_extremal_cell, verify_head_intersection, verify_rainbow_cell)


logger = logging.getLogger(__name__)

VARIABLES_BY_KIND = {
    KIND_EXTREMAL: ('n', 'k', 'r', 's'),
    KIND_HEAD_INTERSECTION: ('n', 'k', 'r', 's'),
    KIND_RAINBOW: ('n', 'k', 'r', 't'),
}

OPTION_KEYS = ('trials', 'seed', 'full_enumeration')

_BINARY_OPERATORS = {
    ast.Add: lambda left, right: left + right,
    ast.Sub: lambda left, right: left - right,
    ast.Mult: lambda left, right: left * right,
    ast.FloorDiv: lambda left, right: left // right,
}
_FUNCTIONS = {'min': min, 'max': max}


class SweepConfigParseError(IOError):
    pass


class Bound:
    """
    An integer expression over earlier sweep variables.
    """
    def __init__(self, text: str, known: Tuple[str, ...]) -> None:
        self.text = text.strip()
        try:
            tree = ast.parse(self.text, mode='eval')
        except SyntaxError:
            raise SweepConfigParseError('Could not parse expression {!r}.'.format(self.text))
        self._check(tree.body, known)
        self._tree = tree.body

    def _check(self, node: ast.AST, known: Tuple[str, ...]) -> None:
        if isinstance(node, ast.BinOp) and type(node.op) in _BINARY_OPERATORS:
            self._check(node.left, known)
            self._check(node.right, known)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            self._check(node.operand, known)
        elif isinstance(node, ast.Constant) and type(node.value) is int:
            pass
        elif isinstance(node, ast.Name):
            if node.id not in known:
                raise SweepConfigParseError(
                    '{!r} uses {!r}, which is not defined before it.'.format(self.text, node.id))
        elif (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id in _FUNCTIONS and node.args and not node.keywords):
            for argument in node.args:
                self._check(argument, known)
        else:
            raise SweepConfigParseError(
                'Unsupported syntax in {!r}: only integers, earlier variables, + - * //, '
                'min and max are allowed.'.format(self.text))

    def evaluate(self, bindings: Dict[str, int]) -> int:
        return self._evaluate(self._tree, bindings)

    def _evaluate(self, node: ast.AST, bindings: Dict[str, int]) -> int:
        if isinstance(node, ast.BinOp):
            operator = _BINARY_OPERATORS[type(node.op)]
            return operator(self._evaluate(node.left, bindings),
                            self._evaluate(node.right, bindings))
        if isinstance(node, ast.UnaryOp):
            return -self._evaluate(node.operand, bindings)
        if isinstance(node, ast.Constant):
            return node.value
        if isinstance(node, ast.Name):
            return bindings[node.id]
        assert isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
        return _FUNCTIONS[node.func.id](
            *(self._evaluate(argument, bindings) for argument in node.args))

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


class VariableRange:
    def __init__(self, name: str, low: Bound, high: Bound) -> None:
        self.name = name
        self.low = low
        self.high = high

    def values(self, bindings: Dict[str, int]) -> range:
        return range(self.low.evaluate(bindings), self.high.evaluate(bindings) + 1)

    def __str__(self) -> str:
        return '{}={}..{}'.format(self.name, self.low, self.high)

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


def parse_range(name: str, text: str, known: Tuple[str, ...]) -> VariableRange:
    text = str(text)
    if '..' in text:
        low_text, high_text = text.split('..', 1)
    else:
        low_text = high_text = text
    return VariableRange(name, Bound(low_text, known), Bound(high_text, known))


def _split_top_level(text: str) -> List[str]:
    """
    Split on commas that are not inside parentheses.
    """
    parts = []
    depth = 0
    current = ''
    for character in text:
        if character == '(':
            depth += 1
        elif character == ')':
            depth -= 1
        if character == ',' and depth == 0:
            parts.append(current)
            current = ''
        else:
            current += character
    parts.append(current)
    return [part.strip() for part in parts if part.strip()]


def parse_grid(text: str) -> List[Tuple[str, str]]:
    """
    Split a grid such as "n=6..10, k=1..2" into (variable, range text) pairs.
    """
    assignments = []
    for part in _split_top_level(text):
        if '=' not in part:
            raise SweepConfigParseError('Expected "variable=range", got {!r}.'.format(part))
        name, range_text = part.split('=', 1)
        assignments.append((name.strip(), range_text.strip()))
    return assignments


class Sweep:
    """
    A named grid of cells of one kind, with the options passed to every cell.
    """
    def __init__(self, name: str, kind: str, ranges: List[VariableRange],
                 options: Optional[Dict[str, Any]] = None) -> None:
        self.name = name
        self.kind = kind
        self.ranges = ranges
        self.options = options if options else {}

    def cells(self) -> Iterator[Dict[str, int]]:
        """
        Yield every binding of the variables, varying the last-written variable fastest.
        """
        yield from self._cells(0, {})

    def _cells(self, position: int, bindings: Dict[str, int]) -> Iterator[Dict[str, int]]:
        if position == len(self.ranges):
            yield dict(bindings)
            return
        variable = self.ranges[position]
        for value in variable.values(bindings):
            bindings[variable.name] = value
            yield from self._cells(position + 1, bindings)
        bindings.pop(variable.name, None)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


def sweep_from_yaml(key: str, data: Dict) -> Sweep:
    if not isinstance(data, dict):
        raise SweepConfigParseError("'{}' must be a mapping.".format(key))
    kind = data.get('kind')
    if kind not in VARIABLES_BY_KIND:
        raise SweepConfigParseError("'{}' needs a kind, one of {}.".format(
            key, ', '.join(sorted(VARIABLES_BY_KIND))))
    expected = VARIABLES_BY_KIND[kind]

    if 'grid' in data:
        assignments = parse_grid(str(data['grid']))
    else:
        assignments = [(name, str(value)) for name, value in data.items() if name in expected]

    names = tuple(name for name, _ in assignments)
    if sorted(names) != sorted(expected):
        raise SweepConfigParseError("'{}' must bind exactly the variables {}, got {}.".format(
            key, ', '.join(expected), ', '.join(names) or 'none'))

    ranges = []
    for position, (name, text) in enumerate(assignments):
        ranges.append(parse_range(name, text, names[:position]))

    unknown = set(data) - set(expected) - set(OPTION_KEYS) - {'kind', 'grid'}
    if unknown:
        raise SweepConfigParseError("'{}' has unknown keys: {}.".format(
            key, ', '.join(sorted(unknown))))
    options = {option: data[option] for option in OPTION_KEYS if option in data}
    return Sweep(key, kind, ranges, options)


def get_sweeps(filename: str) -> List[Sweep]:
    """
    Read the sweeps defined in a YAML file, in file order.
    """
    with open(filename, 'r') as file:
        try:
            data_from_yaml = yaml.safe_load(file)
        except Exception as e:
            logger.debug(e)
            raise SweepConfigParseError('Could not parse {}.'.format(filename))
    if not isinstance(data_from_yaml, dict) or not data_from_yaml:
        raise SweepConfigParseError('{} does not define any sweeps.'.format(filename))
    return [sweep_from_yaml(str(key), data) for key, data in data_from_yaml.items()]


def cell_is_valid(kind: str, cell: Dict[str, int]) -> bool:
    """
    Whether the cell can be checked at all. Cells outside the statements' ranges are
    skipped.
    """
    n, k, r = cell['n'], cell['k'], cell['r']
    if not 1 <= r <= n or k < 1:
        return False
    if kind == KIND_EXTREMAL:
        if r < 2:
            return False
        try:
            theorem_bound(ExtremalParams(n, k, r, cell['s']))
        except ValueError:
            return False
        return True
    if kind == KIND_HEAD_INTERSECTION:
        return r >= 2 and k + r <= cell['s'] <= r * k + r - 1
    return cell['t'] in rainbow_t_range(k, r)


def run_cell(kind: str, cell: Dict[str, int], options: Dict[str, Any],
             budget: Budget = UNLIMITED) -> VerificationReport:
    if kind == KIND_EXTREMAL:
        return verify_extremal_cell(
            cell['n'], cell['k'], cell['r'], cell['s'], budget=budget,
            full_enumeration=bool(options.get('full_enumeration', False)))
    if kind == KIND_HEAD_INTERSECTION:
        return verify_head_intersection(cell['n'], cell['k'], cell['r'], cell['s'],
                                        budget=budget)
    return verify_rainbow_cell(
        cell['n'], cell['k'], cell['r'], cell['t'], trials=int(options.get('trials', 20)),
        seed=int(options.get('seed', 0)), budget=budget)


def _run_task(task: Tuple) -> VerificationReport:
    name, kind, cell, options, budget = task
    report = run_cell(kind, cell, options, budget)
    report.details['sweep'] = name
    return report


def run_sweeps(sweeps: List[Sweep], jobs: int = 1,
               budget: Budget = UNLIMITED) -> List[VerificationReport]:
    """
    Check every valid cell of every sweep, one cell per job.

    Returns:
        The reports, in sweep order and then in cell order, whatever order the cells
        finish in.
    """
    tasks = []
    for sweep in sweeps:
        for cell in sweep.cells():
            if not cell_is_valid(sweep.kind, cell):
                logger.debug('{}: skipping invalid cell {}.'.format(sweep, cell))
                continue
            tasks.append((sweep.name, sweep.kind, cell, sweep.options, budget))
    logger.debug('Running {} cells over {} workers.'.format(len(tasks), jobs))
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            return pool.map(_run_task, tasks)
    return [_run_task(task) for task in tasks]
