"""
Exact checks of the binomial estimates used throughout the extremal arguments.

Powers of e are never evaluated in floating point. e lies strictly between the rationals
E_LOWER (the Taylor sum up to 1/20!) and E_UPPER (that sum plus 2/21!, which exceeds the
tail), so an upper estimate involving e holds whenever it holds with E_LOWER in place of
e, and fails whenever it fails with E_UPPER.
"""
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Union
import logging


logger = logging.getLogger(__name__)

E_LOWER = sum(Fraction(1, factorial(i)) for i in range(21))
E_UPPER = E_LOWER + Fraction(2, factorial(21))

HOLDS = 'holds'
FAILS = 'fails'
UNDECIDED = 'undecided'
NOT_APPLICABLE = 'not-applicable'

STATEMENTS = {
    1: 'C(a,b) <= (e*a/b)^b',
    2: 'C(b,c) <= (b/a)^c * C(a,c)',
    3: 'C(a,c) <= ((a-c)/(b-c))^c * C(b,c)',
    4: 'C(a,c) <= (e*a/b)^c * C(b,c)',
    5: '(1+x)^p <= 1 + p^2*x',
}

Rational = Union[int, str, Fraction]


class InequalityVerdict:
    def __init__(self, identifier: int, status: str, message: str = '') -> None:
        self.identifier = identifier
        self.status = status
        self.message = message

    @property
    def statement(self) -> str:
        return STATEMENTS[self.identifier]

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def to_dict(self) -> dict:
        return {
            'id': self.identifier,
            'statement': self.statement,
            'status': self.status,
            'message': self.message,
        }

    def __str__(self) -> str:
        text = '({}) {}: {}'.format(self.identifier, self.statement, self.status)
        if self.message:
            text += ' ({})'.format(self.message)
        return text

    def __repr__(self) -> str:
        return '<{}: {}>'.format(self.__class__.__name__, self)


def _compare(identifier: int, left: Fraction, right: Fraction) -> InequalityVerdict:
    if left <= right:
        return InequalityVerdict(identifier, HOLDS)
    return InequalityVerdict(identifier, FAILS, '{} > {}'.format(left, right))


def _compare_with_e(identifier: int, left: int, right_at) -> InequalityVerdict:
    """
    Compare left <= right(e), where right is increasing in e and given as a function of a
    rational stand-in for e.
    """
    if left <= right_at(E_LOWER):
        return InequalityVerdict(identifier, HOLDS)
    if left > right_at(E_UPPER):
        return InequalityVerdict(identifier, FAILS)
    return InequalityVerdict(identifier, UNDECIDED, 'too close to decide with rational bounds')


def check_binomial_upper_bound(a: int, b: int) -> InequalityVerdict:
    if b < 1:
        return InequalityVerdict(1, NOT_APPLICABLE, 'needs b >= 1')
    return _compare_with_e(1, comb(a, b), lambda e: (e * a / b) ** b)


def check_ratio_lower(a: int, b: int, c: int) -> InequalityVerdict:
    if a < 1:
        return InequalityVerdict(2, NOT_APPLICABLE, 'needs a >= 1')
    return _compare(2, Fraction(comb(b, c)), Fraction(b, a) ** c * comb(a, c))


def check_ratio_shifted(a: int, b: int, c: int) -> InequalityVerdict:
    if b <= c:
        return InequalityVerdict(3, NOT_APPLICABLE, 'needs b > c')
    return _compare(3, Fraction(comb(a, c)), Fraction(a - c, b - c) ** c * comb(b, c))


def check_ratio_with_e(a: int, b: int, c: int) -> InequalityVerdict:
    if b < 1:
        return InequalityVerdict(4, NOT_APPLICABLE, 'needs b >= 1')
    return _compare_with_e(4, comb(a, c), lambda e: (e * a / b) ** c * comb(b, c))


def check_power_bound(p: int, x: Rational) -> InequalityVerdict:
    x = Fraction(x)
    if p < 1 or not 0 < x <= Fraction(1, p):
        return InequalityVerdict(5, NOT_APPLICABLE, 'needs p >= 1 and 0 < x <= 1/p')
    return _compare(5, (1 + x) ** p, 1 + p * p * x)


def binomial_inequality_suite(a: int, b: int, c: int, p: Optional[int] = None,
                              x: Optional[Rational] = None) -> List[InequalityVerdict]:
    """
    Evaluate the five binomial estimates exactly.

    Args:
        a, b, c: integers with a >= b >= c >= 0, for the first four estimates.
        p, x:    an integer p >= 1 and a rational 0 < x <= 1/p, for the power estimate.
                 Either may be omitted, in which case that estimate is not applicable.

    Returns:
        One verdict per estimate, in order. Precondition violations give a
        'not-applicable' verdict rather than an error.
    """
    verdicts = []
    if a >= b >= c >= 0:
        verdicts.extend([
            check_binomial_upper_bound(a, b),
            check_ratio_lower(a, b, c),
            check_ratio_shifted(a, b, c),
            check_ratio_with_e(a, b, c),
        ])
    else:
        verdicts.extend(
            InequalityVerdict(identifier, NOT_APPLICABLE, 'needs a >= b >= c >= 0')
            for identifier in (1, 2, 3, 4)
        )
    if p is None or x is None:
        verdicts.append(InequalityVerdict(5, NOT_APPLICABLE, 'p and x not given'))
    else:
        verdicts.append(check_power_bound(p, x))
    logger.debug('Inequalities for a={}, b={}, c={}, p={}, x={}: {}'.format(
        a, b, c, p, x, [verdict.status for verdict in verdicts]))
    return verdicts
