"""
Equivariant Einstein embeddings of SU(n), Sp(n) and the quaternionic Grassmannians into spheres
"""

from fractions import Fraction

import numpy

from acscert.algebra import KillingMetric, LieAlgebra, Matrix, COMPLEX, QUATERNION, UnitPairSampler, GrassmannPairSampler
from acscert.errors import InvalidParameter

SU = 'SU'
SP = 'Sp'
GRASSMANN = 'GrassmannH'

KINDS = (SU, SP, GRASSMANN)


class EmbeddingFamily(object):

    """ One embedding: SU(n) in C^{n x n}, Sp(n) in H^{n x n}, or Gr_d(H^n) in the traceless quaternion-Hermitian matrices.

    :param kind: SU, SP or GRASSMANN
    :type kind: str
    :param n: Matrix size
    :type n: int
    :param d: Plane dimension, Grassmannians only
    :type d: int
    """

    def __init__(self, kind, n, d=None):
        if kind not in KINDS:
            raise InvalidParameter('unknown embedding {!r}, expected one of {}'.format(kind, ', '.join(KINDS)))
        if kind == GRASSMANN:
            if d is None or not 1 <= d < n:
                raise InvalidParameter('GrassmannH needs 1 <= d < n, got d={}, n={}'.format(d, n))
        else:
            if d is not None:
                raise InvalidParameter('{} takes no plane dimension'.format(kind))
            if (kind == SU and n < 2) or n < 1:
                raise InvalidParameter('{}({}) is not a valid group here'.format(kind, n))
        self.kind = kind
        self.n = n
        self.d = d

    @classmethod
    def su(cls, n):
        return cls(SU, n)

    @classmethod
    def sp(cls, n):
        return cls(SP, n)

    @classmethod
    def grassmannian(cls, d, n):
        return cls(GRASSMANN, n, d)

    @property
    def is_group(self):
        return self.kind != GRASSMANN

    @property
    def field(self):
        return COMPLEX if self.kind == SU else QUATERNION

    @property
    def metric(self):
        return KillingMetric(self.field, self.n)

    @property
    def c_n(self):
        return self.metric.c_n

    @property
    def algebra(self):
        if not self.is_group:
            raise AttributeError('Grassmannians have no Lie algebra of tangent vectors here')
        return LieAlgebra(self.kind.lower(), self.n)

    @property
    def name(self):
        if self.is_group:
            return '{}({})'.format(self.kind, self.n)
        return '{}({},{})'.format(self.kind, self.d, self.n)

    @property
    def dim(self):
        n, d = self.n, self.d
        return {SU: n * n - 1, SP: n * (2 * n + 1), GRASSMANN: 4 * d * (n - d) if d else 0}[self.kind]

    @property
    def einstein_constant(self):
        return Fraction(1, 4) if self.is_group else Fraction(1, 2)

    @property
    def radius2(self):
        """ Squared radius of the sphere containing the embedding """
        if self.is_group:
            return Fraction(self.n * self.c_n)
        return Fraction(self.c_n * self.d * (self.n - self.d), self.n)

    @property
    def ambient_dim(self):
        n = self.n
        return {SU: 2 * n * n, SP: 4 * n * n, GRASSMANN: 2 * n * n - n - 1}[self.kind]

    def constant_term(self):
        """ -4E + 2 dim / r^2, exact """
        return -4 * self.einstein_constant + 2 * self.dim / self.radius2

    def closed_form_constant(self):
        n = self.n
        return {SU: Fraction(-1, n * n), SP: Fraction(-1, 2 * (n + 1)), GRASSMANN: Fraction(-2, n + 1)}[self.kind]

    def proven_bound(self):
        """ Upper bound of ACS over all tangent pairs, None for SU(n) where the sign depends on n """
        if self.kind == SP:
            return Fraction(-1, 4 * self.n + 4)
        if self.kind == GRASSMANN:
            return Fraction(-3, 2 * (self.n + 1))
        return None

    def base_point(self):
        """ The point of the embedding the tangent vectors are attached to: I for groups, diag((n-d) I, -d I)/n for Grassmannians """
        if self.is_group:
            return Matrix.identity(self.n, self.field)
        diag = numpy.concatenate([numpy.full(self.d, self.n - self.d), numpy.full(self.n - self.d, -self.d)]) / self.n
        out = Matrix.zeros(self.n, self.n, QUATERNION)
        out.data[numpy.arange(self.n), numpy.arange(self.n), 0] = diag
        return out

    def sampler(self, seed=0, strict=False, max_retries=16):
        if self.is_group:
            return UnitPairSampler(self.algebra, self.metric, seed, max_retries)
        return GrassmannPairSampler(self.d, self.n, seed, strict, max_retries)

    def __eq__(self, other):
        return isinstance(other, EmbeddingFamily) and (self.kind, self.n, self.d) == (other.kind, other.n, other.d)

    def __hash__(self):
        return hash((self.kind, self.n, self.d))

    def __repr__(self):
        return 'EmbeddingFamily({})'.format(self.name)
