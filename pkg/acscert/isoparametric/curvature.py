"""
Curvature normals of isoparametric hypersurfaces with four principal curvatures.

The normal section of a leaf is a 2-plane. The leaf through the unit vector
p = (cos theta, sin theta) has the four curvature normals xi_i = -alpha_i / <alpha_i, p>
with multiplicities (m1, m2, m1, m2).
"""

import numpy

from acscert.errors import InvalidParameter

ALPHAS = numpy.array([[1.0, -1.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
ALPHAS.setflags(write=False)


class Multiplicities(object):

    """ Multiplicities (m1, m2) of the curvature distributions, m1 = m3 and m2 = m4.

    :param m1: Smaller multiplicity
    :type m1: int
    :param m2: Larger multiplicity
    :type m2: int

    :param ordered: Reject m1 > m2. The focal bounds are also evaluated for unordered pairs.
    :type ordered: bool
    """

    def __init__(self, m1, m2, ordered=True):
        if int(m1) != m1 or int(m2) != m2 or m1 < 1 or m2 < 1:
            raise InvalidParameter('multiplicities must be positive integers, got ({}, {})'.format(m1, m2))
        if ordered and m1 > m2:
            raise InvalidParameter('multiplicities must be ordered m1 <= m2, got ({}, {})'.format(m1, m2))
        self.m1 = int(m1)
        self.m2 = int(m2)

    @classmethod
    def sorted_pair(cls, a, b):
        return cls(min(a, b), max(a, b))

    @property
    def n(self):
        """ Dimension of the hypersurface """
        return 2 * (self.m1 + self.m2)

    @property
    def per_distribution(self):
        return (self.m1, self.m2, self.m1, self.m2)

    @property
    def focal_dim(self):
        """ Dimension of the focal manifold M+ (distribution E_1 collapsed) """
        return self.m1 + 2 * self.m2

    def as_tuple(self):
        return (self.m1, self.m2)

    def __eq__(self, other):
        return isinstance(other, Multiplicities) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return 'Multiplicities({}, {})'.format(self.m1, self.m2)


def _as_multiplicities(m, ordered=True):
    return m if isinstance(m, Multiplicities) else Multiplicities(*m, ordered=ordered)


class CurvatureNormalSystem(object):

    """ The four curvature normals of the leaf through p = (cos theta, sin theta).

    :param theta: Angle of the leaf in the section
    :type theta: float
    """

    alphas = ALPHAS

    def __init__(self, theta):
        self.theta = float(theta)
        self.p = numpy.array([numpy.cos(theta), numpy.sin(theta)])
        self.xi = -ALPHAS / (ALPHAS @ self.p)[:, None]

    def gram(self):
        """ G_ij = <xi_i, xi_j> """
        return self.xi @ self.xi.T

    def norms2(self):
        return numpy.einsum('ij,ij->i', self.xi, self.xi)

    def mean_curvature(self, weights):
        """ sum_i weights_i xi_i """
        return numpy.asarray(weights, dtype=float) @ self.xi

    def __repr__(self):
        return 'CurvatureNormalSystem(theta={!r})'.format(self.theta)


def minimal_angle(m):
    """ Angle of the minimal leaf, 1/2 arctan(sqrt(m2/m1)).

    :type m: Multiplicities or tuple
    :rtype: float
    """
    m = _as_multiplicities(m)
    return 0.5 * numpy.arctan(numpy.sqrt(m.m2 / m.m1))


def volume_profile(m, theta):
    """ cos^m1(2 theta) sin^m2(2 theta) / 2^m2, proportional to the volume of the leaf at theta """
    m = _as_multiplicities(m)
    theta = numpy.asarray(theta, dtype=float)
    return numpy.cos(2 * theta) ** m.m1 * numpy.sin(2 * theta) ** m.m2 / 2.0 ** m.m2


def volume_profile_derivative(m, theta):
    m = _as_multiplicities(m)
    theta = numpy.asarray(theta, dtype=float)
    c, s = numpy.cos(2 * theta), numpy.sin(2 * theta)
    # d/dtheta of c^m1 s^m2 = 2 c^(m1-1) s^(m2-1) (m2 c^2 - m1 s^2)
    return 2.0 * c ** (m.m1 - 1) * s ** (m.m2 - 1) * (m.m2 * c * c - m.m1 * s * s) / 2.0 ** m.m2


def curvature_normals(m):
    """ Curvature normal system of the minimal leaf

    :type m: Multiplicities or tuple
    :rtype: CurvatureNormalSystem
    """
    return CurvatureNormalSystem(minimal_angle(m))


FOCAL_POINT = numpy.array([1.0, 1.0]) / numpy.sqrt(2.0)


def focal_normals():
    """ Curvature normals of the focal manifold M+ at p = (1, 1)/sqrt(2), one per surviving distribution E_2, E_3, E_4 """
    return -ALPHAS[1:] / (ALPHAS[1:] @ FOCAL_POINT)[:, None]


def focal_section_bound():
    """ 5 max ||xi_i||^2 over the focal curvature normals, exactly 10 """
    xi = focal_normals()
    top = numpy.max(numpy.einsum('ij,ij->i', xi, xi))
    return int(round(5 * top))
