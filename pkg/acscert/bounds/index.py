"""
Index-bound constants, in exact rational arithmetic.

ACS < 0 for a minimal immersion into R^d gives ind >= b_1 / C(d, 2). Composing with the
quadratic Veronese-type map R^d -> R^(d(d+3)/2) makes the bound hold for every immersion into a
sphere of R^d, with constant 1 / C(d(d+3)/2, 2) = 8 / (d (d+3) (d^2 + 3d - 2)).
"""

from fractions import Fraction
from math import comb

from acscert.errors import InvalidParameter


class IndexBoundConstant(object):

    """ The constants of one ambient dimension d.

    :param d: Ambient Euclidean dimension
    :type d: int
    """

    def __init__(self, d):
        self.d = d
        self.acs_constant = acs_index_constant(d) if d >= 2 else None
        self.robust_constant = robust_index_constant(d)
        self.veronese_target_dim = veronese_dim(d)

    def identity_holds(self):
        """ robust_constant == 1 / C(veronese_target_dim, 2), exactly """
        return self.robust_constant == Fraction(1, comb(self.veronese_target_dim, 2))

    def __repr__(self):
        return 'IndexBoundConstant(d={}, acs={}, robust={})'.format(self.d, self.acs_constant, self.robust_constant)


def acs_index_constant(d):
    """ 1 / C(d, 2) = 2 / (d (d - 1))

    :rtype: fractions.Fraction
    """
    if d < 2:
        raise InvalidParameter('the ACS index constant needs d >= 2, got {}'.format(d))
    return Fraction(1, comb(d, 2))


def robust_index_constant(d):
    """ 8 / (d (d+3) (d^2 + 3d - 2))

    :rtype: fractions.Fraction
    """
    if d < 1:
        raise InvalidParameter('the robust index constant needs d >= 1, got {}'.format(d))
    return Fraction(8, d * (d + 3) * (d * d + 3 * d - 2))


def veronese_dim(d):
    """ d + d(d+1)/2 = d(d+3)/2 """
    if d < 1:
        raise InvalidParameter('veronese_dim needs d >= 1, got {}'.format(d))
    return d * (d + 3) // 2


def index_bound_constant(d):
    """ :rtype: IndexBoundConstant """
    return IndexBoundConstant(d)
