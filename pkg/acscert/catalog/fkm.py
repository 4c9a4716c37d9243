"""
Dimensions of Clifford systems and multiplicities of FKM families
"""

import collections

from acscert.errors import NoIsoparametricFamily, InvalidParameter

# delta(1..8), delta(m + 8) = 16 delta(m)
_DELTA_TABLE = (1, 2, 4, 4, 8, 8, 8, 8)

FkmMultiplicities = collections.namedtuple('FkmMultiplicities', ['m1', 'm2', 'exceptional'])


def delta(m):
    """ Smallest l admitting a Clifford system P_0..P_m on R^2l

    :type m: int
    :rtype: int
    """
    if m < 1:
        raise InvalidParameter('delta(m) needs m >= 1, got {}'.format(m))
    q, r = divmod(m - 1, 8)
    return 16 ** q * _DELTA_TABLE[r]


def fkm_multiplicities(m, k):
    """ Multiplicities of the FKM family of a Clifford system with m + 1 matrices on R^2l, l = k delta(m).

    The pair (m, l - m - 1) is returned sorted. It is flagged exceptional when the order flips,
    i.e. 0 < l - m - 1 < m.

    :rtype: FkmMultiplicities
    """
    if m < 1 or k < 1:
        raise InvalidParameter('FKM families need m >= 1 and k >= 1, got m={}, k={}'.format(m, k))
    second = k * delta(m) - m - 1
    if second < 1:
        raise NoIsoparametricFamily('l - m - 1 = {} < 1 for m={}, k={}: no isoparametric family'.format(second, m, k))
    return FkmMultiplicities(min(m, second), max(m, second), second < m)
