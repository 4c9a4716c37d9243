"""
ACS of the Einstein embeddings, in closed form and through the explicit second fundamental form.

For an Einstein minimal embedding into a sphere the quantity reduces to

    ACS(X, N) = (-4E + 2 dim / r^2) + <II(X,X), II(N,N)> - 2 |II(X,N)|^2 - |II(N,N)|^2

with inner products of the ambient matrix space scaled like the Killing metric. The closed forms
below are what this collapses to for the groups (II(X,Y) = (XY + YX)/2) and for the
Grassmannians.
"""

import numpy

from acscert.algebra import Matrix, QUATERNION
from acscert.errors import ConstraintViolation, ShapeMismatch, FieldMismatch


def _max_abs(A):
    axes = tuple(range(len(A.batch_shape), A.data.ndim))
    return numpy.max(numpy.abs(A.data), axis=axes)


def pair_defect(family, X, N):
    """ Largest violation of the family's unit / orthogonality / membership constraints, per batch element """
    metric = family.metric
    if family.is_group:
        defects = [
            numpy.abs(metric.norm2(X) - 1.0),
            numpy.abs(metric.norm2(N) - 1.0),
            numpy.abs(metric.inner(X, N)),
            _max_abs(X + X.adjoint()),
            _max_abs(N + N.adjoint()),
        ]
        if family.field != QUATERNION:
            defects += [numpy.abs(X.trace()), numpy.abs(N.trace())]
    else:
        target = 1.0 / (2 * metric.c_n)
        defects = [
            numpy.abs(X.frobenius_norm2() - target),
            numpy.abs(N.frobenius_norm2() - target),
            numpy.abs(X.re_inner(N)),
        ]
    return numpy.maximum.reduce(defects)


def _check_shapes(family, X, N):
    shape = (family.n, family.n) if family.is_group else (family.d, family.n - family.d)
    for A in (X, N):
        if A.field != family.field:
            raise FieldMismatch('{} needs {} matrices, got {}'.format(family.name, family.field, A.field))
        if A.shape != shape:
            raise ShapeMismatch('{} needs {}x{} matrices, got {}'.format(family.name, shape[0], shape[1], A.shape))


def check_pair(family, X, N, tolerance=1e-9):
    """ Raises ConstraintViolation unless (X, N) is an admissible tangent pair of family """
    _check_shapes(family, X, N)
    defect = float(numpy.max(pair_defect(family, X, N)))
    if defect > tolerance:
        raise ConstraintViolation('tangent pair violates the {} constraints by {:.3g}'.format(family.name, defect), defect)


def acs_values(family, X, N):
    """ Closed-form ACS for (batches of) admissible pairs, without constraint checks

    :rtype: numpy.ndarray or float
    """
    const = float(family.closed_form_constant())
    if family.is_group:
        metric = family.metric
        NN = N @ N
        return const - metric.inner(N @ X, X @ N) - metric.norm2(NN)
    A, B = X @ N.adjoint(), N @ N.adjoint()
    return const - 8 * family.c_n * ((A @ A).re_trace() + (B @ B).re_trace())


def acs_value(family, X, N, tolerance=1e-9):
    """ ACS of the tangent pair (X, N).

    SU(n): -1/n^2 - <NX, XN> - |N^2|^2; Sp(n): -1/(2(n+1)) - <NX, XN> - |N^2|^2 (Killing metric);
    GrassmannH(d, n): -2/(n+1) - 8 c_n Re tr(XN*XN* + NN*NN*).

    :type family: EmbeddingFamily
    :type X: acscert.algebra.Matrix
    :type N: acscert.algebra.Matrix
    :rtype: float
    """
    if X.batch_shape or N.batch_shape:
        raise ShapeMismatch('acs_value takes single pairs, use acs_values for batches')
    check_pair(family, X, N, tolerance)
    return float(acs_values(family, X, N))


def build_group_sff(family, X, Y):
    """ II(X, Y) = (XY + YX)/2 of the group embedding """
    if not family.is_group:
        raise ValueError('{} is not a group embedding'.format(family.name))
    return (X @ Y + Y @ X) * 0.5


def build_grassmann_sff(d, n, X, N):
    """ II(X, N) = -diag(XN* + NX*, -(X*N + N*X)) for X, N in H^{d x (n-d)}

    :rtype: acscert.algebra.Matrix
    """
    for A in (X, N):
        if A.field != QUATERNION:
            raise FieldMismatch('Grassmannian tangent vectors are quaternionic, got {}'.format(A.field))
        if A.shape != (d, n - d):
            raise ShapeMismatch('Gr_{}(H^{}) tangent vectors are {}x{}, got {}'.format(d, n, d, n - d, A.shape))
    upper = X @ N.adjoint() + N @ X.adjoint()
    lower = X.adjoint() @ N + N.adjoint() @ X
    return -Matrix.block_diag(upper, -lower)


def _sff(family):
    if family.is_group:
        return lambda A, B: build_group_sff(family, A, B)
    return lambda A, B: build_grassmann_sff(family.d, family.n, A, B)


def acs_via_sff(family, X, N, tolerance=1e-9):
    """ ACS from the explicit second fundamental form and the family's constant term, independent of the closed forms """
    check_pair(family, X, N, tolerance)
    sff, metric = _sff(family), family.metric
    xx, nn, xn = sff(X, X), sff(N, N), sff(X, N)
    value = float(family.constant_term()) + metric.inner(xx, nn) - 2 * metric.norm2(xn) - metric.norm2(nn)
    return float(value)


def _grassmann_basis(family):
    """ Basis of H^{d x (n-d)} orthonormal for c_n Re tr(XY*) scaled so that tr(ee*) = 1/(2 c_n) """
    d, k = family.d, family.n - family.d
    data = numpy.zeros((4 * d * k, d, k, 4))
    index = 0
    for a in range(d):
        for b in range(k):
            for unit in range(4):
                data[index, a, b, unit] = 1.0
                index += 1
    return Matrix(data, QUATERNION) * (1.0 / numpy.sqrt(2 * family.c_n))


def mean_curvature(family):
    """ Trace of II over an orthonormal basis of the tangent space

    For a minimal embedding into the sphere of radius r this is -(dim / r^2) times the base point.

    :rtype: acscert.algebra.Matrix
    """
    sff = _sff(family)
    basis = family.algebra.orthonormal_basis() if family.is_group else _grassmann_basis(family)
    total = sff(basis, basis)
    return Matrix(total.data.sum(axis=0), total.field)
