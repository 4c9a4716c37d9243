"""
Killing-normalized inner products on su(n), sp(n) and the quaternionic Grassmannian tangent spaces
"""

from acscert.errors import ShapeMismatch, FieldMismatch, InvalidParameter
from .matrix import COMPLEX, QUATERNION


class KillingMetric(object):

    """ The bi-invariant inner product <X, Y> = c_n Re tr(X Y*).

    :param field: COMPLEX (SU(n), c_n = 2n) or QUATERNION (Sp(n) and Grassmannians, c_n = 4(n + 1))
    :type field: str

    :param n: Matrix size of the group (for Grassmannians the n of Gr_d(H^n))
    :type n: int
    """

    def __init__(self, field, n):
        if field not in (COMPLEX, QUATERNION):
            raise FieldMismatch('Killing metrics are defined over complex or quaternionic matrices, not {}'.format(field))
        if n < 1:
            raise InvalidParameter('n must be positive, got {}'.format(n))
        self.field = field
        self.n = n

    @property
    def c_n(self):
        return 2 * self.n if self.field == COMPLEX else 4 * (self.n + 1)

    def inner(self, X, Y):
        """ c_n Re tr(X Y*) for matrices of any (equal) shape, batched """
        return self.c_n * X.re_inner(Y)

    def norm2(self, X):
        return self.inner(X, X)

    def __eq__(self, other):
        return isinstance(other, KillingMetric) and (self.field, self.n) == (other.field, other.n)

    def __hash__(self):
        return hash((self.field, self.n))

    def __repr__(self):
        return 'KillingMetric({}, n={}, c_n={})'.format(self.field, self.n, self.c_n)


def killing_inner(X, Y, metric):
    """ Killing inner product of two square matrices over the metric's field.

    :type X: acscert.algebra.Matrix
    :type Y: acscert.algebra.Matrix
    :type metric: KillingMetric
    :rtype: float (or array for batched input)
    """
    if X.field != metric.field or Y.field != metric.field:
        raise FieldMismatch('metric over {} applied to {} and {} matrices'.format(metric.field, X.field, Y.field))
    if X.shape != Y.shape:
        raise ShapeMismatch('shapes differ: {} vs {}'.format(X.shape, Y.shape))
    if not X.is_square:
        raise ShapeMismatch('Killing inner product needs square matrices, got {}'.format(X.shape))
    value = metric.inner(X, Y)
    return float(value) if not X.batch_shape and not Y.batch_shape else value
