"""
Curvature diagnostics of minimal isoparametric hypersurfaces and bounds for their focal manifolds
"""

from fractions import Fraction

from .curvature import _as_multiplicities, focal_section_bound


def ricci_eigenvalues(normals, m):
    """ Ricci eigenvalues lambda_i = <xi_i, H> - |xi_i|^2 = n - |xi_i|^2 on a minimal leaf.

    :return: [(lambda_i, multiplicity_i)] for E_1..E_4
    :rtype: list of tuple
    """
    m = _as_multiplicities(m)
    return [(float(m.n - norm2), mult) for norm2, mult in zip(normals.norms2(), m.per_distribution)]


def extreme_sectional(normals):
    """ Sectional curvature <xi_1, xi_4> of a plane spanned by unit vectors of E_1 and E_4 """
    return float(normals.xi[0] @ normals.xi[3])


def focal_acs_upper(m):
    """ Upper bound -2(m1 + 2 m2) + 10 + 5 m1 for ACS on the focal manifold M+.

    10 is five times the largest squared focal curvature normal, 5 m1 bounds the terms of the
    normal directions collapsed into the focal manifold.

    :rtype: int
    """
    m = _as_multiplicities(m, ordered=False)
    return -2 * m.focal_dim + focal_section_bound() + 5 * m.m1


def focal_acs_negative(m):
    """ Exact test focal_acs_upper(m) < 0, equivalently m2 > (3 m1 + 10) / 4 """
    m = _as_multiplicities(m, ordered=False)
    return Fraction(m.m2) > Fraction(3 * m.m1 + 10, 4)


def focal_ricci_lower(m):
    """ Lower bound (m1 + 2 m2) - m1 - 2 = 2 m2 - 2 for the Ricci curvature of M+ on unit vectors

    :rtype: int
    """
    m = _as_multiplicities(m, ordered=False)
    return m.focal_dim - m.m1 - 2
