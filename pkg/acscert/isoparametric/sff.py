"""
Second fundamental forms as explicit tensors and the ACS quantity evaluated from them.

Used as an independent check of the reduced formulas: everything here works on raw
tangent vectors in an orthonormal frame.
"""

import numpy

from acscert.errors import ConstraintViolation, ShapeMismatch
from .curvature import _as_multiplicities


class SffTensor(object):

    """ Symmetric bilinear form II with values in R^codim, stored as entries[j, k, :] = II(e_j, e_k).

    :param entries: Array shaped (n, n, codim)
    :type entries: numpy.ndarray
    """

    def __init__(self, entries):
        entries = numpy.asarray(entries, dtype=float)
        if entries.ndim != 3 or entries.shape[0] != entries.shape[1]:
            raise ShapeMismatch('second fundamental form needs shape (n, n, codim), got {}'.format(entries.shape))
        if not numpy.array_equal(entries, numpy.swapaxes(entries, 0, 1)):
            raise ValueError('second fundamental form is not symmetric')
        self.entries = entries

    @property
    def n(self):
        return self.entries.shape[0]

    @property
    def codim(self):
        return self.entries.shape[2]

    def __call__(self, X, Y):
        return numpy.einsum('j,k,jkc->c', X, Y, self.entries)

    def partial(self, X):
        """ II(X, e_k) for every frame vector, shaped (n, codim) """
        return numpy.einsum('j,jkc->kc', X, self.entries)

    def mean_curvature(self):
        return numpy.einsum('jjc->c', self.entries)


def build_sff(normals, m):
    """ II(e_j, e_k) = delta_jk xi_i(j) in a frame adapted to E_1..E_4 (sizes m1, m2, m1, m2, in that order)

    :type normals: CurvatureNormalSystem
    :type m: Multiplicities
    :rtype: SffTensor
    """
    m = _as_multiplicities(m)
    labels = numpy.repeat(numpy.arange(4), m.per_distribution)
    entries = numpy.zeros((m.n, m.n, 2))
    entries[numpy.arange(m.n), numpy.arange(m.n)] = normals.xi[labels]
    return SffTensor(entries)


def _check_pair(X, N, tolerance):
    defect = max(abs(X @ X - 1.0), abs(N @ N - 1.0), abs(X @ N))
    if defect > tolerance:
        raise ConstraintViolation('(X, N) is not orthonormal, defect {:.3g}'.format(defect), defect)


def acs_from_sff(sff, H, X, N, tolerance=1e-9):
    """ ACS(X, N) = -<H, II(X,X) + II(N,N)> + 2|II(X,.)|^2 + 2|II(N,.)|^2 + <II(X,X), II(N,N)> - 2|II(X,N)|^2 - |II(N,N)|^2

    :type sff: SffTensor
    :param H: Mean curvature vector
    :param X: Unit tangent vector
    :param N: Unit tangent vector orthogonal to X
    :rtype: float
    """
    X, N, H = (numpy.asarray(v, dtype=float) for v in (X, N, H))
    if X.shape != (sff.n,) or N.shape != (sff.n,):
        raise ShapeMismatch('tangent vectors must have length {}'.format(sff.n))
    _check_pair(X, N, tolerance)

    xx, nn, xn = sff(X, X), sff(N, N), sff(X, N)
    value = -H @ (xx + nn)
    value += 2.0 * numpy.sum(sff.partial(X) ** 2) + 2.0 * numpy.sum(sff.partial(N) ** 2)
    value += xx @ nn - 2.0 * xn @ xn - nn @ nn
    return float(value)


def ricci_from_sff(sff, H=None):
    """ Ricci tensor by the Gauss equation for a submanifold of Euclidean space,
    Ric_jk = <H, II_jk> - sum_l <II_jl, II_lk>

    :rtype: numpy.ndarray
    """
    H = sff.mean_curvature() if H is None else numpy.asarray(H, dtype=float)
    return numpy.einsum('c,jkc->jk', H, sff.entries) - numpy.einsum('jlc,lkc->jk', sff.entries, sff.entries)


def distribution_weights(m, X):
    """ |x_i|^2 for the components of X along E_1..E_4 """
    m = _as_multiplicities(m)
    labels = numpy.repeat(numpy.arange(4), m.per_distribution)
    return numpy.bincount(labels, weights=numpy.asarray(X, dtype=float) ** 2, minlength=4)


def mixed_normal(normals, m, X, N):
    """ II(X, N) = sum_i <x_i, y_i> xi_i """
    m = _as_multiplicities(m)
    labels = numpy.repeat(numpy.arange(4), m.per_distribution)
    inner = numpy.bincount(labels, weights=numpy.asarray(X, dtype=float) * numpy.asarray(N, dtype=float), minlength=4)
    return inner @ normals.xi


def realize_pair(m, s, t):
    """ Orthonormal (X, N) with |x_i|^2 = s_i, |y_i|^2 = t_i and <x_i, y_i> = 0 for every distribution.

    Only possible when every distribution carrying both weights has dimension at least 2.

    :rtype: tuple(numpy.ndarray, numpy.ndarray)
    """
    m = _as_multiplicities(m)
    s, t = numpy.asarray(s, dtype=float), numpy.asarray(t, dtype=float)
    X, N = numpy.zeros(m.n), numpy.zeros(m.n)
    offset = 0
    for i, size in enumerate(m.per_distribution):
        if s[i] > 0 and t[i] > 0 and size < 2:
            raise ValueError('distribution E_{} has dimension 1 and cannot carry orthogonal x_{}, y_{}'.format(i + 1, i + 1, i + 1))
        X[offset] = numpy.sqrt(max(s[i], 0.0))
        N[offset + 1 if size > 1 else offset] = numpy.sqrt(max(t[i], 0.0))
        offset += size
    return X, N
