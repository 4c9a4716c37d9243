"""
Seeded sampling of Killing-orthonormal tangent pairs (X, N).

Entries are standard normal, projected onto the Lie algebra (or taken as they are for
Grassmannian tangent vectors) and Gram-Schmidt orthonormalized in the Killing metric.
A sampler is a value: the same seed always reproduces the same pairs.
"""

import logging

import numpy

from acscert.errors import DegenerateSample, FieldMismatch, InvalidParameter
from .killing import KillingMetric
from .matrix import Matrix, QUATERNION
from .quaternion import Quaternion

DEFAULT_MAX_RETRIES = 16

# squared norm below which an orthogonalized draw counts as parallel to X
DEGENERACY_THRESHOLD = 1e-20


class _PairSampler(object):

    def __init__(self, seed=0, max_retries=DEFAULT_MAX_RETRIES):
        self.seed = seed
        self.max_retries = max_retries

    def _draw_raw(self, rng, size):
        raise NotImplementedError

    def _unit(self, X):
        """ Rescales X to the sampler's target norm """
        raise NotImplementedError

    def _orthogonalize(self, X, N):
        raise NotImplementedError

    def draw_batch(self, size, rng=None):
        """ Draws size pairs as two batched matrices.

        :param size: Number of pairs
        :param rng: Generator to use instead of one seeded with self.seed
        :type rng: numpy.random.Generator
        :rtype: tuple(Matrix, Matrix)
        """
        if rng is None:
            rng = numpy.random.default_rng(self.seed)
        X, N = self._draw_raw(rng, size)
        X = self._unit(X)
        N, norms = self._orthogonalize(X, N)

        bad = numpy.flatnonzero(norms < DEGENERACY_THRESHOLD)
        retries = 0
        while bad.size:
            if retries >= self.max_retries:
                raise DegenerateSample('{} draw(s) stayed degenerate after {} retries'.format(bad.size, retries))
            logging.info('Redrawing %d degenerate sample(s) (retry %d)', bad.size, retries + 1)
            _, N_new = self._draw_raw(rng, bad.size)
            N_fix, norms_fix = self._orthogonalize(X[bad], N_new)
            N.data[bad] = N_fix.data
            norms[bad] = norms_fix
            bad = bad[norms_fix < DEGENERACY_THRESHOLD]
            retries += 1

        return X, self._unit(N)

    def draw(self):
        """ One pair, deterministic in self.seed

        :rtype: tuple(Matrix, Matrix)
        """
        X, N = self.draw_batch(1)
        return X[0], N[0]


class UnitPairSampler(_PairSampler):

    """ Killing-orthonormal pairs in su(n) or sp(n).

    :param algebra: The Lie algebra to sample from
    :type algebra: acscert.algebra.LieAlgebra

    :param metric: Killing metric, the algebra's own when omitted
    :type metric: KillingMetric

    :param seed: Seed of the generator
    :type seed: int
    """

    def __init__(self, algebra, metric=None, seed=0, max_retries=DEFAULT_MAX_RETRIES):
        super(UnitPairSampler, self).__init__(seed, max_retries)
        metric = metric or algebra.metric
        if metric.field != algebra.field:
            raise FieldMismatch('{} metric for {}'.format(metric.field, algebra.name))
        self.algebra = algebra
        self.metric = metric

    def _draw_raw(self, rng, size):
        n = self.algebra.n
        X = self.algebra.project(Matrix.standard_normal(rng, n, n, self.algebra.field, (size,)))
        N = self.algebra.project(Matrix.standard_normal(rng, n, n, self.algebra.field, (size,)))
        return X, N

    def _unit(self, X):
        return X / numpy.sqrt(self.metric.norm2(X))

    def _orthogonalize(self, X, N):
        N = N - X * self.metric.inner(N, X)
        return N, self.metric.norm2(N)


class GrassmannPairSampler(_PairSampler):

    """ Tangent pairs of the quaternionic Grassmannian Gr_d(H^n), X, N in H^{d x (n-d)} with
    tr(XX*) = tr(NN*) = 1/(2 c_n) and Re tr(XN*) = 0.

    :param strict: Also force the imaginary parts of tr(XN*) to vanish, i.e. N orthogonal to X, iX, jX and kX
    :type strict: bool
    """

    def __init__(self, d, n, seed=0, strict=False, max_retries=DEFAULT_MAX_RETRIES):
        super(GrassmannPairSampler, self).__init__(seed, max_retries)
        if not 1 <= d < n:
            raise InvalidParameter('Grassmannian needs 1 <= d < n, got d={}, n={}'.format(d, n))
        if strict and d * (n - d) < 2:
            raise DegenerateSample('strict orthogonality leaves no room for N in H^{}x{}'.format(d, n - d))
        self.d = d
        self.n = n
        self.strict = strict
        self.metric = KillingMetric(QUATERNION, n)

    @property
    def target_trace(self):
        """ tr(XX*) of a Killing-unit tangent vector """
        return 1.0 / (2 * self.metric.c_n)

    def _draw_raw(self, rng, size):
        shape = (self.d, self.n - self.d, QUATERNION, (size,))
        return Matrix.standard_normal(rng, *shape), Matrix.standard_normal(rng, *shape)

    def _unit(self, X):
        return X * numpy.sqrt(self.target_trace / X.frobenius_norm2())

    def _orthogonalize(self, X, N):
        # X, iX, jX, kX are mutually orthogonal with equal norms
        directions = Quaternion.units() if self.strict else Quaternion.units()[:1]
        for u in directions:
            uX = X.left_multiply(u)
            N = N - uX * (N.re_inner(uX) / self.target_trace)
        return N, N.frobenius_norm2()


def sample_unit_pair(algebra, metric=None, seed=0):
    """ Killing-orthonormal pair (X, N) in su(n) or sp(n), deterministic in seed

    :rtype: tuple(Matrix, Matrix)
    """
    return UnitPairSampler(algebra, metric, seed).draw()


def grassmann_sample_pair(d, n, seed=0, strict=False):
    """ Constrained tangent pair of Gr_d(H^n), deterministic in seed

    :rtype: tuple(Matrix, Matrix)
    """
    return GrassmannPairSampler(d, n, seed, strict).draw()
