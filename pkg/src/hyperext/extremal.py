"""
The extremal families F(n, k, r, a) and their closed-form clique counts.

F(n, k, r, a) is the r-graph on [n] whose edges are the r-sets meeting the head segment
[ak + a - 1] in at least a vertices. Its matching number is at most k: each edge uses a
head vertices and the head has fewer than a(k + 1) of them.
"""
from enum import Enum
from fractions import Fraction
from math import comb, floor
from typing import Any, List, Optional, Tuple
import logging

from .cliques import clique_count
from .hypergraph import ColoredFamily, Hypergraph, all_r_subsets
from .inequalities import E_UPPER
from .vertexset import VertexSet, popcount


logger = logging.getLogger(__name__)


class Regime(Enum):
    LOWER = 'lower'
    MIDDLE = 'middle'
    UPPER = 'upper'

    def __str__(self) -> str:
        return self.value


def level(k: int, r: int, s: int) -> int:
    """
    The head-intersection level a = floor((s - r) / k) + 1.
    """
    return (s - r) // k + 1


def regime_of(k: int, r: int, s: int) -> Regime:
    """
    Raises:
        ValueError if s lies outside r <= s <= rk + r - 1, or r < 2.
    """
    if r < 2:
        raise ValueError('The clique regimes need r >= 2, got r={}.'.format(r))
    if (r - 1) * k + r <= s <= r * k + r - 1:
        return Regime.UPPER
    if k + r <= s <= (r - 1) * (k + 1):
        return Regime.MIDDLE
    if r <= s <= k + r - 1:
        return Regime.LOWER
    raise ValueError('s={} lies outside every regime for k={}, r={} '
                     '(need {} <= s <= {}).'.format(s, k, r, r, r * k + r - 1))


class ExtremalParams:
    """
    A parameter cell (n, k, r, s) for the clique-maximization problem, together with its
    level a and its regime.
    """
    def __init__(self, n: int, k: int, r: int, s: int) -> None:
        if k < 1:
            raise ValueError('The matching bound must satisfy k >= 1, got k={}.'.format(k))
        if not 1 <= r <= n:
            raise ValueError('Uniformity must satisfy 1 <= r <= n, got r={}, n={}.'.format(r, n))
        if s < r:
            raise ValueError('Clique size s={} is smaller than the uniformity r={}.'.format(
                s, r))
        self.n = n
        self.k = k
        self.r = r
        self.s = s
        self.a = level(k, r, s)

    @property
    def regime(self) -> Regime:
        return regime_of(self.k, self.r, self.s)

    @property
    def head_size(self) -> int:
        return self.a * self.k + self.a - 1

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.n, self.k, self.r, self.s

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, ExtremalParams):
            return self.as_tuple() == other.as_tuple()
        else:
            return False

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __str__(self) -> str:
        return 'n={}, k={}, r={}, s={}'.format(*self.as_tuple())

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


def _check_family_params(n: int, k: int, r: int, a: int) -> None:
    if k < 0:
        raise ValueError('The matching bound must be non-negative, got k={}.'.format(k))
    if not n >= r >= a >= 1:
        raise ValueError('Need n >= r >= a >= 1, got n={}, r={}, a={}.'.format(n, r, a))
    if n < a * k + a - 1:
        raise ValueError('The head segment [{}] does not fit in {} vertices.'.format(
            a * k + a - 1, n))


def build_extremal_family(n: int, k: int, r: int, a: int) -> Hypergraph:
    """
    Build F(n, k, r, a): the r-sets with at least a vertices in [ak + a - 1].
    """
    _check_family_params(n, k, r, a)
    head = VertexSet.interval(a * k + a - 1).bits
    return Hypergraph._from_masks(
        n, r, (mask for mask in all_r_subsets(n, r) if popcount(mask & head) >= a))


def _clique_sum(n: int, head_size: int, r: int, a: int, s: int) -> int:
    """
    Sum over i >= s - r + a of C(head_size, i) * C(n - head_size, s - i).

    For s < r every s-set counts, matching the vacuous convention for cliques smaller than
    an edge.
    """
    low = max(0, s - r + a)
    high = min(s, head_size)
    return sum(comb(head_size, i) * comb(n - head_size, s - i) for i in range(low, high + 1))


def closed_form_clique_count(n: int, k: int, r: int, a: int, s: int) -> int:
    """
    The number of s-cliques of F(n, k, r, a): the s-sets with at least s - r + a vertices
    in the head segment.
    """
    _check_family_params(n, k, r, a)
    if s < r:
        raise ValueError('Clique size s={} is smaller than the uniformity r={}.'.format(s, r))
    return _clique_sum(n, a * k + a - 1, r, a, s)


def recurrence_sides(n: int, k: int, r: int, s: int) -> Tuple[int, int]:
    """
    Returns:
        K_s(F(n-1, k-1, r, 1)) + K_{s-1}(F(n-1, k-1, r, 1)), and K_s(F(n, k, r, 1)).
    """
    if k < 2:
        raise ValueError('The recurrence needs k >= 2, got k={}.'.format(k))
    if s < r:
        raise ValueError('The recurrence needs s >= r, got s={}, r={}.'.format(s, r))
    if n - 1 < r or n - 1 < k - 1:
        raise ValueError('The recurrence needs n - 1 >= max(r, k - 1), got n={}.'.format(n))
    smaller = _clique_sum(n - 1, k - 1, r, 1, s) + _clique_sum(n - 1, k - 1, r, 1, s - 1)
    return smaller, _clique_sum(n, k, r, 1, s)


def recurrence_check(n: int, k: int, r: int, s: int) -> bool:
    """
    Whether K_s(F(n-1, k-1, r, 1)) + K_{s-1}(F(n-1, k-1, r, 1)) = K_s(F(n, k, r, 1)).
    """
    left, right = recurrence_sides(n, k, r, s)
    if left != right:
        logger.debug('Recurrence fails at n={}, k={}, r={}, s={}: {} != {}.'.format(
            n, k, r, s, left, right))
    return left == right


def _n_star_terms(k: int, r: int, s: int) -> Tuple[Fraction, Fraction, Fraction]:
    if not r <= s <= (r - 1) * (k + 1):
        raise ValueError('n* needs r <= s <= (r-1)(k+1), got k={}, r={}, s={}.'.format(k, r, s))
    a = level(k, r, s)
    if a >= r:
        raise ValueError('n* is undefined when a = r.')
    base = Fraction(r, a)
    exponent = Fraction(s - r + a, r - a)
    factor = Fraction(r * k + r - 1 - s, s)
    return base, exponent, factor


def n_star(k: int, r: int, s: int) -> float:
    """
    n* = (r/a)^((s-r+a)/(r-a)) * (rk+r-1-s)/s. Below n*, the complete-head family
    F(n, k, r, r) has more s-cliques than F(n, k, r, a).
    """
    base, exponent, factor = _n_star_terms(k, r, s)
    return float(base) ** float(exponent) * float(factor)


def n_star_exact(k: int, r: int, s: int) -> Optional[Fraction]:
    """
    n* as an exact rational, when its exponent is an integer; otherwise None.
    """
    base, exponent, factor = _n_star_terms(k, r, s)
    if exponent.denominator != 1:
        return None
    return base ** exponent.numerator * factor


def n_star_floor(k: int, r: int, s: int) -> int:
    """
    The largest integer m <= n*, decided exactly: m <= base^(p/q) * factor exactly when
    (m / factor)^q <= base^p.
    """
    base, exponent, factor = _n_star_terms(k, r, s)
    p, q = exponent.numerator, exponent.denominator

    def at_most_n_star(m: int) -> bool:
        return m <= 0 or (Fraction(m) / factor) ** q <= base ** p

    m = max(floor(n_star(k, r, s)), 0)
    while not at_most_n_star(m):
        m -= 1
    while at_most_n_star(m + 1):
        m += 1
    return m


def complete_head_clique_count(k: int, r: int, s: int) -> int:
    """
    C(rk + r - 1, s), the s-clique count of F(n, k, r, r) for any n >= rk + r - 1.
    """
    return comb(r * k + r - 1, s)


def crossover_failures(k: int, r: int, s: int) -> List[int]:
    """
    Returns:
        Every n with max(r, ak + a - 1) <= n <= floor(n*) at which C(rk + r - 1, s) does not
        exceed the s-clique count of F(n, k, r, a).
    """
    a = level(k, r, s)
    complete_head = complete_head_clique_count(k, r, s)
    failures = []
    for n in range(max(r, a * k + a - 1), n_star_floor(k, r, s) + 1):
        if complete_head <= closed_form_clique_count(n, k, r, a, s):
            failures.append(n)
    return failures


def crossover_check(k: int, r: int, s: int) -> bool:
    return not crossover_failures(k, r, s)


class TheoremBound:
    """
    The maximum number of s-cliques claimed for r-graphs with matching number at most k,
    in one parameter cell.

    Attributes:
        bound:     the s-clique count of the regime's extremal family.
        regime:    the regime of s.
        a:         the head-intersection level used by the family.
        gap_bound: upper regime only: every r-graph below the maximum has at most this
                   many s-cliques.
    """
    def __init__(self, bound: int, regime: Regime, a: int,
                 gap_bound: Optional[int] = None) -> None:
        self.bound = bound
        self.regime = regime
        self.a = a
        self.gap_bound = gap_bound

    def __str__(self) -> str:
        text = '{} ({} regime, a={})'.format(self.bound, self.regime, self.a)
        if self.gap_bound is not None:
            text += ', gap bound {}'.format(self.gap_bound)
        return text

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


def theorem_bound(params: ExtremalParams) -> TheoremBound:
    """
    The claimed maximum for the cell. The n-threshold of the regime is not enforced here.

    Raises:
        ValueError if s is in no regime, or the regime's family does not fit in n vertices.
    """
    regime = params.regime
    n, k, r, s = params.as_tuple()
    if regime is Regime.LOWER:
        return TheoremBound(closed_form_clique_count(n, k, r, 1, s), regime, 1)
    if regime is Regime.MIDDLE:
        a = params.a
        return TheoremBound(closed_form_clique_count(n, k, r, a, s), regime, a)
    if n < r * k + r - 1:
        raise ValueError('The upper regime needs n >= rk + r - 1 = {}, got n={}.'.format(
            r * k + r - 1, n))
    return TheoremBound(
        complete_head_clique_count(k, r, s), regime, r,
        gap_bound=comb(r * k + r - 1, s) - comb(r * k - 1, s - r),
    )


def hypothesis_threshold(params: ExtremalParams) -> Fraction:
    """
    The smallest n (as a rational) from which the bound is proved, with e replaced by an
    upper bound so that meeting the threshold is rigorous.
    """
    k, r, s, a = params.k, params.r, params.s, params.a
    regime = params.regime
    if regime is Regime.LOWER:
        return 4 * (E_UPPER * r) ** (s - r + 2) * k
    if regime is Regime.MIDDLE:
        return 4 * r * r * k * (E_UPPER * r / (a - 1)) ** (s - r + a)
    return Fraction(r * k + r - 1)


def head_intersection_threshold(k: int, r: int) -> Fraction:
    return Fraction(r * k + r - 1)


def rainbow_t_range(k: int, r: int) -> range:
    """
    The clique sizes t for which the rainbow statements are made: r <= t <= k + r - 2.

    With one color the range collapses to t = r, where the hypothesis says F_1 has an edge.
    """
    return range(r, max(r, k + r - 2) + 1)


def check_rainbow_t(k: int, r: int, t: int) -> None:
    if k < 1:
        raise ValueError('Rainbow families need k >= 1 colors, got k={}.'.format(k))
    allowed = rainbow_t_range(k, r)
    if t not in allowed:
        raise ValueError('Need {} <= t <= {}, got t={} with k={}, r={}.'.format(
            allowed.start, allowed.stop - 1, t, k, r))


def rainbow_threshold(k: int, r: int, t: int) -> Fraction:
    """
    4k(t - r + 2)(er)^(t - r + 2), with e replaced by an upper bound.
    """
    return 4 * k * (t - r + 2) * (E_UPPER * r) ** (t - r + 2)


def meets_threshold(n: int, threshold: Fraction) -> bool:
    return n >= threshold


def rainbow_hypothesis_check(family: ColoredFamily, t: int) -> List[bool]:
    """
    For each color i, whether some s in [r, t] has K_s(F_i) > K_s(F(n, k-1, r, 1)).

    Raises:
        ValueError unless t is in rainbow_t_range(k, r).
    """
    n, k, r = family.n, family.k, family.r
    check_rainbow_t(k, r, t)
    thresholds = {s: closed_form_clique_count(n, k - 1, r, 1, s) for s in range(r, t + 1)}
    verdicts = []
    for member in family:
        verdicts.append(any(
            clique_count(member, s) > thresholds[s] for s in range(r, t + 1)))
    return verdicts
