"""
The minimization behind the sign of ACS on SU(n).

With X' = sqrt(2n) X and N' = sqrt(2n) N the Killing constraints become tr(X'^2) = tr(N'^2) = -1
and tr(X'N') = 0, and ACS = -1/n^2 - a/(2n) where a = tr((X'N')^2) + tr(N'^4). The minimum
a_n of that objective decides the sign: b_n = 1/n^2 + a_n/(2n) > 0 iff every pair has ACS < 0.

Conjugating N' to i diag(z) leaves the reduced problem

    minimize  min_{i<j} z_i z_j + sum_i z_i^4   subject to  sum z = 0, sum z^2 = 1

since tr((X'N')^2) = sum_jk |X'_jk|^2 z_j z_k is a weighted mean of the products z_j z_k.
"""

import logging
from fractions import Fraction

import numpy
import scipy.optimize

from acscert.algebra import Matrix, COMPLEX
from acscert.errors import InvalidParameter
from .families import EmbeddingFamily
from .acs import acs_value, pair_defect

EXPLICIT_EVEN_N = 'explicit-even-n'
PADDED_ODD_N = 'padded-odd-n'
SAMPLED = 'sampled'


class MinimizerWitness(object):

    """ A pair of su(n) matrices together with the value it achieves.

    :param X: Tangent vector
    :param N: Tangent vector
    :param value: Achieved objective (trace-normalized pairs) or ACS value (Killing-unit pairs)
    :param construction: EXPLICIT_EVEN_N, PADDED_ODD_N or SAMPLED
    """

    def __init__(self, X, N, value, construction):
        self.X = X
        self.N = N
        self.value = value
        self.construction = construction

    @property
    def n(self):
        return self.X.rows

    def trace_defect(self):
        """ Violation of tr(X^2) = tr(N^2) = -1, tr(XN) = 0 and membership in su(n) """
        X, N = self.X, self.N
        return max(abs((X @ X).trace() + 1), abs((N @ N).trace() + 1), abs((X @ N).trace()),
                   abs(X.trace()), abs(N.trace()), (X + X.adjoint()).max_abs(), (N + N.adjoint()).max_abs())

    def killing_defect(self):
        return float(pair_defect(EmbeddingFamily.su(self.n), self.X, self.N))

    def __repr__(self):
        return 'MinimizerWitness(n={}, value={!r}, construction={!r})'.format(self.n, self.value, self.construction)


def _explicit_diagonal(n):
    """ z of the even-n minimizer: -sqrt((n+2)/4n), +sqrt((n+2)/4n), then -+sqrt(1/2n) alternating """
    z = numpy.empty(n)
    z[0], z[1] = -numpy.sqrt((n + 2) / (4.0 * n)), numpy.sqrt((n + 2) / (4.0 * n))
    z[2:] = numpy.sqrt(1.0 / (2 * n)) * numpy.where(numpy.arange(n - 2) % 2 == 0, -1.0, 1.0)
    return z


def _pair_from_diagonal(z):
    n = len(z)
    N = Matrix(numpy.diag(1j * z), COMPLEX)
    x = numpy.zeros((n, n), dtype=complex)
    x[0, 1], x[1, 0] = numpy.sqrt(0.5), -numpy.sqrt(0.5)
    return Matrix(x, COMPLEX), N


def objective(X, N):
    """ tr((XN)^2) + tr(N^4) """
    XN, NN = X @ N, N @ N
    return float(numpy.real((XN @ XN).trace() + (NN @ NN).trace()))


def explicit_even_minimizer(n):
    """ Trace-normalized pair achieving a_n = (2 - n)/(8n) for even n

    :rtype: MinimizerWitness
    """
    if n < 2 or n % 2:
        raise InvalidParameter('the explicit minimizer needs an even n >= 2, got {}'.format(n))
    X, N = _pair_from_diagonal(_explicit_diagonal(n))
    return MinimizerWitness(X, N, objective(X, N), EXPLICIT_EVEN_N)


def a_n_closed(n):
    """ a_n = (2 - n)/(8n), even n only """
    if n < 2 or n % 2:
        raise InvalidParameter('a_n has a closed form for even n >= 2 only, got {}'.format(n))
    return Fraction(2 - n, 8 * n)


def reduced_objective(z):
    """ min_{i<j} z_i z_j + sum z^4 for the rows of z """
    z = numpy.atleast_2d(z)
    s = numpy.sort(z, axis=1)
    # the smallest product pairs the extremes or the two smallest / largest entries
    products = numpy.minimum.reduce([s[:, 0] * s[:, -1], s[:, 0] * s[:, 1], s[:, -1] * s[:, -2]])
    return products + numpy.sum(z ** 4, axis=1)


def _normalize(z):
    z = numpy.atleast_2d(z)
    z = z - z.mean(axis=1, keepdims=True)
    return z / numpy.linalg.norm(z, axis=1, keepdims=True)


def _descend(z0, tolerance):
    """ SLSQP on the smooth surrogate z_0 z_1 + sum z^4 after moving the extreme pair to the front """
    order = numpy.argsort(z0)
    z0 = z0[numpy.concatenate([[order[0], order[-1]], order[1:-1]])]
    result = scipy.optimize.minimize(
        lambda z: z[0] * z[1] + numpy.sum(z ** 4),
        z0,
        jac=lambda z: 4 * z ** 3 + numpy.concatenate([[z[1], z[0]], numpy.zeros(len(z) - 2)]),
        method='SLSQP',
        constraints=[{'type': 'eq', 'fun': lambda z: numpy.sum(z), 'jac': lambda z: numpy.ones_like(z)},
                     {'type': 'eq', 'fun': lambda z: z @ z - 1.0, 'jac': lambda z: 2 * z}],
        options={'ftol': tolerance, 'maxiter': 500})
    return _normalize(result.x)[0]


def _padded(z, n):
    out = numpy.zeros(n)
    out[:len(z)] = z
    return out


def estimate_a_n(n, samples=2000, seed=0, restarts=32, tolerance=1e-10):
    """ Upper estimate of a_n by random search on the reduced problem followed by local descents.

    Starts are the best random samples plus embeddings of the explicit minimizers of smaller even
    sizes (for odd n the (n-1) minimizer padded with a zero, so the estimate never exceeds a_{n-1}).

    :param samples: Random points of the search phase
    :param seed: Seed of the search
    :param restarts: Number of local descents
    :param tolerance: Stopping tolerance of the descent
    :rtype: float
    """
    if n < 2:
        raise InvalidParameter('a_n needs n >= 2, got {}'.format(n))
    if n == 2:
        # the constraint set is {+-(1, -1)/sqrt(2)}
        return float(reduced_objective(numpy.array([1.0, -1.0]) / numpy.sqrt(2.0))[0])

    rng = numpy.random.default_rng(seed)
    starts = []
    if n % 2:
        starts.append(_padded(_explicit_diagonal(n - 1), n))
    elif n >= 4:
        starts.append(_normalize(_padded(_explicit_diagonal(n - 2), n) + 1e-3 * rng.standard_normal(n))[0])

    cloud = _normalize(rng.standard_normal((max(samples, restarts), n)))
    values = reduced_objective(cloud)
    starts += list(cloud[numpy.argsort(values)[:max(restarts - len(starts), 0)]])

    best = min(float(reduced_objective(z)[0]) for z in starts)
    for z0 in starts:
        z = _descend(z0, tolerance)
        if abs(z.sum()) < 1e-9 and abs(z @ z - 1) < 1e-9:
            best = min(best, float(reduced_objective(z)[0]))
    logging.debug('estimate_a_n(%d): %.12g from %d starts', n, best, len(starts))
    return best


def b_n_closed(n):
    """ b_n = 1/n^2 + a_n/(2n) = (18 - n)/(16 n^2) for even n """
    if n < 2 or n % 2:
        raise InvalidParameter('b_n has a closed form for even n only, got {}; use b_n_bracket'.format(n))
    return Fraction(1, n * n) + a_n_closed(n) / (2 * n)


def b_n_bracket(n):
    """ Bounds of b_n for odd n from a_{n+1} <= a_n <= a_{n-1}

    :rtype: tuple(Fraction, Fraction)
    """
    if n < 3 or n % 2 == 0:
        raise InvalidParameter('the bracket is for odd n >= 3, got {}'.format(n))
    base = Fraction(1, n * n)
    return base + a_n_closed(n + 1) / (2 * n), base + a_n_closed(n - 1) / (2 * n)


def positive_witness(n):
    """ Killing-unit pair of su(n) with ACS > 0, for n > 18.

    Even n rescale the explicit minimizer (ACS = -b_n). Odd n embed the (n-1) minimizer.

    :rtype: MinimizerWitness
    """
    if n <= 18:
        raise InvalidParameter('ACS < 0 holds for n < 18 and ACS <= 0 at n = 18, no positive witness for n={}'.format(n))
    size = n if n % 2 == 0 else n - 1
    z = _padded(_explicit_diagonal(size), n)
    X, N = _pair_from_diagonal(z)
    scale = 1.0 / numpy.sqrt(2.0 * n)
    X, N = X * scale, N * scale
    value = acs_value(EmbeddingFamily.su(n), X, N)
    if value <= 0:
        raise ArithmeticError('witness for n={} has ACS {!r} <= 0'.format(n, value))
    return MinimizerWitness(X, N, value, EXPLICIT_EVEN_N if size == n else PADDED_ODD_N)
