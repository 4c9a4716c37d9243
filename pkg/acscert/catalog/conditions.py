"""
Which criterion certifies ACS < 0 for a catalog family.

Integer hypotheses are decided in exact rational arithmetic, so boundary cases such as
4 m2 = 3 m1 + 10 fail the strict inequality. Regular leaves with m1 < 5 fall back to the
simplex programs of max ACS'.
"""

import logging
from fractions import Fraction

from acscert.isoparametric import max_acs, simple_upper_bound, focal_acs_upper
from .fkm import delta
from .providerbase import FKM, FOCAL

MIN_MULTIPLICITY = 'min-multiplicity-at-least-5'
SIMPLEX_QP = 'simplex-qp'
FOCAL_GAP = 'focal-multiplicity-gap'
CLIFFORD_STIEFEL = 'clifford-stiefel-dimension'
NONE = 'none'


class ConditionVerdict(object):

    """ Outcome of check_conditions.

    :param certified: Whether the criterion certifies ACS < 0
    :param criterion: Name of the criterion that was applied
    :param inequality: The hypothesis with the family's numbers filled in
    :param bound: Upper bound of ACS that goes with the criterion, when there is one
    :param numeric_threshold: The criterion rests on a numeric simplex search rather than a proven threshold (m1 = 4)
    :param upper_bound_semantics: max ACS' only bounds max ACS (m1 = 1)
    """

    def __init__(self, certified, criterion, inequality, bound=None, numeric_threshold=False, upper_bound_semantics=False, qp=None):
        self.certified = certified
        self.criterion = criterion
        self.inequality = inequality
        self.bound = bound
        self.numeric_threshold = numeric_threshold
        self.upper_bound_semantics = upper_bound_semantics
        self.qp = qp

    def to_jsonable(self):
        return {
            'certified': self.certified,
            'criterion': self.criterion,
            'inequality': self.inequality,
            'numeric_threshold': self.numeric_threshold,
            'upper_bound_semantics': self.upper_bound_semantics,
        }

    def __repr__(self):
        return 'ConditionVerdict(certified={}, criterion={!r})'.format(self.certified, self.criterion)


def _focal(family):
    m1, m2 = family.focal_pair
    bound = focal_acs_upper((m1, m2))
    if family.kind == FKM:
        m, k = family.parameters['m'], family.parameters['k']
        threshold = Fraction(7 * m + 14, 4 * delta(m))
        holds = Fraction(k) > threshold
        return ConditionVerdict(holds, CLIFFORD_STIEFEL if holds else NONE,
                                'k > (7m + 14) / (4 delta(m)): {} > {}'.format(k, threshold), bound)

    holds = Fraction(m2) > Fraction(3 * m1 + 10, 4)
    return ConditionVerdict(holds, FOCAL_GAP if holds else NONE,
                            'm2 > (3 m1 + 10) / 4: {} > {}'.format(m2, Fraction(3 * m1 + 10, 4)), bound)


def check_conditions(family, solver=None):
    """ Evaluates the applicable hypothesis for the family and reports the certifying criterion.

    :type family: acscert.catalog.ExampleFamily
    :param solver: Simplex solver for regular leaves with m1 < 5
    :rtype: ConditionVerdict
    """
    if family.leaf == FOCAL:
        verdict = _focal(family)
    else:
        m = family.multiplicities
        if m.m1 >= 5:
            verdict = ConditionVerdict(True, MIN_MULTIPLICITY, 'm1 >= 5: {} >= 5'.format(m.m1), simple_upper_bound(m))
        else:
            result = max_acs(m, solver)
            holds = result.value < 0
            verdict = ConditionVerdict(holds, SIMPLEX_QP if holds else NONE, "max ACS' < 0: {!r} < 0".format(result.value), result.value,
                                       numeric_threshold=m.m1 == 4, upper_bound_semantics=m.m1 == 1, qp=result)

    logging.info('%s: %s (%s)', family.tag, verdict.criterion, verdict.inequality)
    return verdict
