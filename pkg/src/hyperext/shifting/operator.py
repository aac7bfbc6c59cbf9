from typing import List, Tuple
import logging

from ..hypergraph import Hypergraph
from .precedence import lower_covers


logger = logging.getLogger(__name__)


class ShiftApplication:
    """
    One application of S_ij that moved at least one edge.
    """
    def __init__(self, i: int, j: int, moved: int) -> None:
        self.i = i
        self.j = j
        self.moved = moved

    def __eq__(self, other) -> bool:
        if isinstance(other, ShiftApplication):
            return (self.i, self.j, self.moved) == (other.i, other.j, other.moved)
        else:
            return False

    def __hash__(self) -> int:
        return hash((self.i, self.j, self.moved))

    def __str__(self) -> str:
        return 'S({},{}) moved {}'.format(self.i, self.j, self.moved)

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


class ShiftTrace:
    """
    The record of one stabilization run.

    Attributes:
        applications: the shifts that moved edges, in the order applied.
        rounds:       the number of sweeps over all pairs that moved at least one edge.
        result:       the stable hypergraph reached.
    """
    def __init__(self, applications: List[ShiftApplication], rounds: int,
                 result: Hypergraph) -> None:
        self.applications = applications
        self.rounds = rounds
        self.result = result

    @property
    def moved(self) -> int:
        return sum(application.moved for application in self.applications)

    def __str__(self) -> str:
        return '{} shifts moved {} edges in {} rounds'.format(
            len(self.applications), self.moved, self.rounds)

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


def _check_pair(hypergraph: Hypergraph, i: int, j: int) -> None:
    if not 1 <= i < j <= hypergraph.n:
        raise ValueError('Shifting needs 1 <= i < j <= n={}, got i={}, j={}.'.format(
            hypergraph.n, i, j))


def _shift_with_count(hypergraph: Hypergraph, i: int, j: int) -> Tuple[Hypergraph, int]:
    bit_i = 1 << (i - 1)
    bit_j = 1 << (j - 1)
    masks = []
    moved = 0
    for mask in hypergraph.masks:
        if mask & bit_j and not mask & bit_i:
            target = mask ^ bit_j | bit_i
            if not hypergraph.has_mask(target):
                masks.append(target)
                moved += 1
                continue
        masks.append(mask)
    if not moved:
        return hypergraph, 0
    return Hypergraph._from_masks(hypergraph.n, hypergraph.r, masks), moved


def shift(hypergraph: Hypergraph, i: int, j: int) -> Hypergraph:
    """
    Apply S_ij: every edge E containing j but not i becomes E - {j} + {i}, unless that set
    is already an edge.
    """
    _check_pair(hypergraph, i, j)
    return _shift_with_count(hypergraph, i, j)[0]


def stabilize(hypergraph: Hypergraph) -> ShiftTrace:
    """
    Sweep all pairs (i, j), i < j, in lexicographic order until a whole sweep moves no
    edge.

    Every moved edge lowers the potential, so the loop terminates.
    """
    applications: List[ShiftApplication] = []
    rounds = 0
    current = hypergraph
    while True:
        moved_this_round = False
        for i in range(1, current.n + 1):
            for j in range(i + 1, current.n + 1):
                current, moved = _shift_with_count(current, i, j)
                if moved:
                    applications.append(ShiftApplication(i, j, moved))
                    moved_this_round = True
        if not moved_this_round:
            break
        rounds += 1
    logger.debug('Stabilized {} with {} shifts in {} rounds.'.format(
        hypergraph, len(applications), rounds))
    return ShiftTrace(applications, rounds, current)


def is_stable(hypergraph: Hypergraph) -> bool:
    """
    Whether the hypergraph is a downset of ≺, checked on cover relations: every lower
    cover of an edge is an edge.
    """
    return all(
        hypergraph.has_mask(cover)
        for mask in hypergraph.masks for cover in lower_covers(mask)
    )


def is_shift_fixed(hypergraph: Hypergraph) -> bool:
    """
    Whether S_ij leaves the hypergraph unchanged for every i < j.
    """
    n = hypergraph.n
    return all(
        _shift_with_count(hypergraph, i, j)[1] == 0
        for i in range(1, n + 1) for j in range(i + 1, n + 1)
    )


def potential(hypergraph: Hypergraph) -> int:
    """
    The sum of the vertex labels over all edges.
    """
    return sum(sum(edge.labels()) for edge in hypergraph)
