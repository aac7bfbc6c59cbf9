from typing import Optional, Sequence
import logging
import time


logger = logging.getLogger(__name__)


class SearchStats:
    """
    Progress counters for an exhaustive search.
    """
    def __init__(self, nodes: int = 0, emitted: int = 0, millis: int = 0) -> None:
        self.nodes = nodes
        self.emitted = emitted
        self.millis = millis

    def merge(self, other: 'SearchStats') -> 'SearchStats':
        return SearchStats(
            nodes=self.nodes + other.nodes,
            emitted=self.emitted + other.emitted,
            millis=max(self.millis, other.millis),
        )

    def __str__(self) -> str:
        return '{} nodes, {} emitted, {} ms'.format(self.nodes, self.emitted, self.millis)

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


class BudgetExceeded(RuntimeError):
    """
    Raised when a search runs past its node or time budget. Searches never return a
    partial answer instead.
    """
    def __init__(self, reason: str, stats: SearchStats) -> None:
        super().__init__('{} (progress: {})'.format(reason, stats))
        self.reason = reason
        self.stats = stats

    def __reduce__(self):
        # Worker processes send the exception back pickled.
        return self.__class__, (self.reason, self.stats)


class Budget:
    """
    Node and wall-clock limits for an exhaustive search. None means unlimited.

    Usage:
        tracker = Budget(max_nodes=10 ** 6).start('matching number')
        while searching:
            tracker.tick()
    """
    def __init__(self, max_nodes: Optional[int] = None,
                 max_seconds: Optional[float] = None) -> None:
        if max_nodes is not None and max_nodes < 1:
            raise ValueError('The node budget must be a positive integer.')
        if max_seconds is not None and max_seconds <= 0:
            raise ValueError('The time budget must be positive.')
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds

    def start(self, label: str) -> 'BudgetTracker':
        return BudgetTracker(self, label)

    def __repr__(self) -> str:
        return '<{}: max_nodes={}, max_seconds={}>'.format(
            self.__class__.__name__, self.max_nodes, self.max_seconds)


UNLIMITED = Budget()


class BudgetTracker:
    # The clock is only read every CLOCK_INTERVAL nodes.
    CLOCK_INTERVAL = 1024

    def __init__(self, budget: Budget, label: str) -> None:
        self.budget = budget
        self.label = label
        self.stats = SearchStats()
        self._started = time.monotonic()

    def tick(self) -> None:
        stats = self.stats
        stats.nodes += 1
        max_nodes = self.budget.max_nodes
        if max_nodes is not None and stats.nodes > max_nodes:
            self._exceeded('node budget of {} exceeded'.format(max_nodes))
        if (self.budget.max_seconds is not None
                and stats.nodes % self.CLOCK_INTERVAL == 0
                and time.monotonic() - self._started > self.budget.max_seconds):
            self._exceeded('time budget of {}s exceeded'.format(self.budget.max_seconds))

    def emit(self) -> None:
        self.stats.emitted += 1

    def finish(self) -> SearchStats:
        self.stats.millis = self.elapsed_millis()
        logger.debug('{}: finished after {}.'.format(self.label, self.stats))
        return self.stats

    def elapsed_millis(self) -> int:
        return int((time.monotonic() - self._started) * 1000)

    def _exceeded(self, reason: str) -> None:
        self.stats.millis = self.elapsed_millis()
        logger.debug('{}: {}.'.format(self.label, reason))
        raise BudgetExceeded('{}: {}'.format(self.label, reason), self.stats)


class HereditaryConstraint:
    """
    A property of edge families that is closed under taking subfamilies, tested
    incrementally: if a family fails it, every family containing it fails too.
    """
    def admits(self, masks: Sequence[int], new_mask: int) -> bool:
        """
        Whether adding new_mask to a family that already satisfies the constraint keeps it
        satisfied.
        """
        raise NotImplementedError
