"""
The compact Lie algebras su(n) and sp(n) as subspaces of complex / quaternionic matrices
"""

import numpy

from acscert.errors import FieldMismatch, ShapeMismatch, InvalidParameter
from .killing import KillingMetric
from .matrix import Matrix, COMPLEX, QUATERNION

SU = 'su'
SP = 'sp'


class LieAlgebra(object):

    """ su(n) (traceless skew-Hermitian complex) or sp(n) (skew-Hermitian quaternionic) matrices.

    :param kind: 'su' or 'sp'
    :param n: Matrix size
    """

    def __init__(self, kind, n):
        kind = kind.lower()
        if kind not in (SU, SP):
            raise InvalidParameter('unknown Lie algebra {!r}, expected su or sp'.format(kind))
        if n < 1 or (kind == SU and n < 2):
            raise InvalidParameter('{}({}) is trivial or undefined'.format(kind, n))
        self.kind = kind
        self.n = n

    @property
    def field(self):
        return COMPLEX if self.kind == SU else QUATERNION

    @property
    def metric(self):
        return KillingMetric(self.field, self.n)

    @property
    def dim(self):
        n = self.n
        return n * n - 1 if self.kind == SU else n * (2 * n + 1)

    @property
    def name(self):
        return '{}({})'.format(self.kind, self.n)

    def project(self, A):
        """ Skew-Hermitian part (A - A*)/2, trace removed for su(n) """
        if A.shape != (self.n, self.n):
            raise ShapeMismatch('{} needs {}x{} matrices, got {}'.format(self.name, self.n, self.n, A.shape))
        if A.field != self.field:
            A = A.astype(self.field)
        X = (A - A.adjoint()) * 0.5
        if self.kind == SU:
            t = X.trace() / self.n
            idx = numpy.arange(self.n)
            X.data[..., idx, idx] -= t[..., None]
        return X

    def contains(self, X, atol=1e-12):
        if X.field != self.field or X.shape != (self.n, self.n):
            return False
        skew = (X + X.adjoint()).max_abs() <= atol
        if self.kind == SU:
            return skew and bool(numpy.all(numpy.abs(X.trace()) <= atol))
        return skew

    def orthonormal_basis(self):
        """ A basis orthonormal for the Killing metric, stacked as one batched Matrix of length dim """
        n = self.n
        units = range(1, 4) if self.kind == SP else (1,)
        elements = []

        def entry(i, j, unit, value):
            if self.field == COMPLEX:
                m = numpy.zeros((n, n), dtype=complex)
                m[i, j] = value * (1j if unit == 1 else 1.0)
            else:
                m = numpy.zeros((n, n, 4))
                m[i, j, unit] = value
            return m

        # diagonal part
        if self.kind == SU:
            for k in range(1, n):
                d = numpy.zeros(n)
                d[:k] = 1.0
                d[k] = -k
                d /= numpy.sqrt(k * (k + 1))
                elements.append(numpy.diag(1j * d))
        else:
            for i in range(n):
                for u in units:
                    elements.append(entry(i, i, u, 1.0))

        # off-diagonal part
        s = 1.0 / numpy.sqrt(2.0)
        for i in range(n):
            for j in range(i + 1, n):
                elements.append(entry(i, j, 0, s) - entry(j, i, 0, s))
                for u in units:
                    elements.append(entry(i, j, u, s) + entry(j, i, u, s))

        basis = Matrix(numpy.array(elements), self.field) * (1.0 / numpy.sqrt(self.metric.c_n))
        assert len(basis) == self.dim
        return basis

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self):
        return hash((self.kind, self.n))

    def __repr__(self):
        return 'LieAlgebra({!r}, {})'.format(self.kind, self.n)


def project_lie_algebra(A, algebra):
    """ Projects a square matrix onto su(n) or sp(n).

    :param A: Square matrix; real or complex input is promoted for sp(n)
    :type A: acscert.algebra.Matrix
    :param algebra: LieAlgebra, or 'su' / 'sp' (size taken from A)
    :rtype: acscert.algebra.Matrix
    """
    if not A.is_square:
        raise ShapeMismatch('projection needs a square matrix, got {}'.format(A.shape))
    if not isinstance(algebra, LieAlgebra):
        algebra = LieAlgebra(algebra, A.rows)
    if A.field == QUATERNION and algebra.kind == SU:
        raise FieldMismatch('quaternionic matrix cannot be projected to {}'.format(algebra.name))
    return algebra.project(A)
