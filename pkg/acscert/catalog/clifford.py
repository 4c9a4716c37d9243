"""
Integer Clifford systems and the FKM polynomial.

A Clifford system P_0..P_m on R^2l is built from m - 1 anticommuting skew-symmetric complex
structures E_i on R^delta(m):

    P_0 = [[I, 0], [0, -I]],  P_1 = [[0, I], [I, 0]],  P_1+i = [[0, E_i], [-E_i, 0]]

The E_i are left multiplications by imaginary units of the Cayley-Dickson algebra of
dimension delta(m) (reals, complex numbers, quaternions, octonions) for m <= 8. Beyond that
the m -> m + 8 step tensors with the 16-dimensional module. k > 1 copies are stacked block
diagonally. Every entry is -1, 0 or +1, so the relations are checked exactly.
"""

import functools
import logging

import numpy
import scipy.linalg

from acscert.errors import ShapeMismatch, InvalidParameter
from .fkm import delta


def _cd_conj(x):
    if len(x) == 1:
        return x.copy()
    h = len(x) // 2
    return numpy.concatenate([_cd_conj(x[:h]), -x[h:]])


def cayley_dickson_product(x, y):
    """ (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)) on integer vectors of length 2^j """
    if len(x) == 1:
        return x * y
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    return numpy.concatenate([
        cayley_dickson_product(a, c) - cayley_dickson_product(_cd_conj(d), b),
        cayley_dickson_product(d, a) + cayley_dickson_product(b, _cd_conj(c)),
    ])


def _left_multiplication(unit, dim):
    e = numpy.eye(dim, dtype=numpy.int64)
    return numpy.column_stack([cayley_dickson_product(e[unit], e[j]) for j in range(dim)])


@functools.lru_cache(maxsize=None)
def complex_structures(count):
    """ count anticommuting skew-symmetric integer matrices with square -I, on R^delta(count + 1)

    :rtype: tuple of numpy.ndarray
    """
    dim = delta(count + 1)
    if count < 8:
        out = tuple(_left_multiplication(unit, dim) for unit in range(1, count + 1))
    else:
        # F_a = P_0 P_a from the 9-matrix system on R^16, omega = F_1...F_8 anticommutes with all F_a
        base = clifford_system(8).matrices
        f = [base[0] @ p for p in base[1:]]
        omega = functools.reduce(numpy.matmul, f)
        rest = complex_structures(count - 8)
        inner = delta(count - 7)
        out = tuple(numpy.kron(fa, numpy.eye(inner, dtype=numpy.int64)) for fa in f) + \
            tuple(numpy.kron(omega, e) for e in rest)
    for e in out:
        e.setflags(write=False)
    return out


class CliffordSystem(object):

    """ Symmetric matrices P_0..P_m on R^2l with P_i^2 = I and P_i P_j = -P_j P_i.

    :param m: Number of matrices minus one
    :type m: int
    :param matrices: Integer matrices P_0..P_m
    :type matrices: list of numpy.ndarray
    """

    def __init__(self, m, matrices):
        if len(matrices) != m + 1:
            raise ValueError('a Clifford system with m={} needs {} matrices, got {}'.format(m, m + 1, len(matrices)))
        self.m = m
        self.matrices = list(matrices)

    @property
    def l(self):
        return self.matrices[0].shape[0] // 2

    @property
    def dim(self):
        return self.matrices[0].shape[0]

    def relations_hold(self):
        """ Checks symmetry, P_i^2 = I and anticommutation in exact integer arithmetic """
        identity = numpy.eye(self.dim, dtype=numpy.int64)
        for i, p in enumerate(self.matrices):
            if not numpy.array_equal(p, p.T) or not numpy.array_equal(p @ p, identity):
                logging.debug('P_%d is not a symmetric involution', i)
                return False
            for j in range(i + 1, len(self.matrices)):
                q = self.matrices[j]
                if numpy.any(p @ q + q @ p):
                    logging.debug('P_%d and P_%d do not anticommute', i, j)
                    return False
        return True

    def __repr__(self):
        return 'CliffordSystem(m={}, l={})'.format(self.m, self.l)


@functools.lru_cache(maxsize=64)
def _irreducible(m):
    d = delta(m)
    eye, zero = numpy.eye(d, dtype=numpy.int64), numpy.zeros((d, d), dtype=numpy.int64)
    matrices = [numpy.block([[eye, zero], [zero, -eye]]), numpy.block([[zero, eye], [eye, zero]])]
    matrices += [numpy.block([[zero, e], [-e, zero]]) for e in complex_structures(m - 1)]
    return tuple(matrices)


def clifford_system(m, k=1):
    """ Clifford system P_0..P_m on R^(2 k delta(m))

    :rtype: CliffordSystem
    """
    if m < 1 or k < 1:
        raise InvalidParameter('Clifford systems need m >= 1 and k >= 1, got m={}, k={}'.format(m, k))
    matrices = _irreducible(m)
    if k > 1:
        matrices = [numpy.kron(numpy.eye(k, dtype=numpy.int64), p) for p in matrices]
    return CliffordSystem(m, [numpy.array(p) for p in matrices])


def _check_dim(system, x):
    x = numpy.asarray(x, dtype=float)
    if x.shape != (system.dim,):
        raise ShapeMismatch('vector of length {} for a Clifford system on R^{}'.format(x.shape, system.dim))
    return x


def fkm_polynomial(system, x):
    """ H(x) = sum_i (x^T P_i x)^2

    :type system: CliffordSystem
    :rtype: float
    """
    x = _check_dim(system, x)
    return float(sum((x @ p @ x) ** 2 for p in system.matrices))


def on_clifford_stiefel(system, x, tolerance=1e-12):
    """ Whether x is a unit vector with x^T P_i x = 0 for every i """
    x = _check_dim(system, x)
    return abs(x @ x - 1.0) <= tolerance and all(abs(x @ p @ x) <= tolerance for p in system.matrices)


def clifford_stiefel_point(system):
    """ A unit x with x^T P_i x = 0 for all i, or None when there is none of this form (l <= m).

    x = u + w with u, w in the +1 / -1 eigenspaces of P_0, |u|^2 = |w|^2 = 1/2, and w
    orthogonal to P_1 u, ..., P_m u.

    :rtype: numpy.ndarray
    """
    p0 = system.matrices[0].astype(float)
    eigenvalues, vectors = numpy.linalg.eigh(p0)
    minus, plus = vectors[:, eigenvalues < 0], vectors[:, eigenvalues > 0]
    u = plus[:, 0]
    images = numpy.array([p.astype(float) @ u for p in system.matrices[1:]])
    free = scipy.linalg.null_space(images @ minus)
    if free.shape[1] == 0:
        logging.info('%r has no Clifford-Stiefel point (l <= m)', system)
        return None
    w = minus @ free[:, 0]
    return (u + w / numpy.linalg.norm(w)) / numpy.sqrt(2.0)
