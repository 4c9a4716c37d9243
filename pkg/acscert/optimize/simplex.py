"""
Exact maximization of a concave quadratic over the standard simplex by face enumeration.

Every nonempty face of the simplex is visited. On a face the stationarity system of the
objective restricted to the face's affine hull is solved directly, feasible stationary points
are kept and the best one wins. For the four-dimensional programs met here this means 15 tiny
linear solves and no iteration at all.
"""

import functools
import itertools
import logging
import threading
import warnings

import numpy
import scipy.linalg

from acscert.errors import NonConcaveProgram, ShapeMismatch, InvalidParameter

# warning filters are process-wide, vertex programs run on several threads
_WARNINGS_LOCK = threading.Lock()


class SimplexQuadraticProgram(object):

    """ Q(t) = constant + linear . t + t^T quadratic t over {t >= 0, sum(t) = 1}

    :param constant: Constant term
    :type constant: float

    :param linear: Linear coefficients, one per coordinate
    :type linear: numpy.ndarray

    :param quadratic: Square matrix of the quadratic form, symmetrized on construction
    :type quadratic: numpy.ndarray
    """

    def __init__(self, constant, linear, quadratic):
        linear = numpy.asarray(linear, dtype=float)
        quadratic = numpy.asarray(quadratic, dtype=float)
        if linear.ndim != 1 or quadratic.shape != (linear.size, linear.size):
            raise ShapeMismatch('linear part has shape {} but quadratic part {}'.format(linear.shape, quadratic.shape))
        self.constant = float(constant)
        self.linear = linear
        self.quadratic = 0.5 * (quadratic + quadratic.T)

    @property
    def dim(self):
        return self.linear.size

    def value(self, t):
        """ Objective at t, or at every row of a (..., dim) array """
        t = numpy.asarray(t, dtype=float)
        return self.constant + t @ self.linear + numpy.einsum('...i,ij,...j->...', t, self.quadratic, t)

    def gradient(self, t):
        return self.linear + 2.0 * self.quadratic @ numpy.asarray(t, dtype=float)

    def max_eigenvalue(self):
        return float(numpy.linalg.eigvalsh(self.quadratic)[-1])

    def gradient_bound(self):
        """ Upper bound of the gradient's Euclidean norm on the simplex """
        return float(numpy.linalg.norm(self.linear) + 2.0 * numpy.linalg.norm(self.quadratic, 2))

    def __repr__(self):
        return 'SimplexQuadraticProgram(dim={}, constant={!r})'.format(self.dim, self.constant)


class SimplexSolution(object):

    """ Result of FaceEnumerationSolver.solve

    :param value: Maximum of the objective
    :param point: Maximizer, nonnegative and summing to one
    :param face: Sorted tuple of the coordinates of the face the maximizer was found on
    :param stationarity_residual: KKT residual at point (equality on the face, inequality off it)
    """

    def __init__(self, value, point, face, stationarity_residual, faces_examined=0, faces_feasible=0, fallbacks=0):
        self.value = value
        self.point = point
        self.face = face
        self.stationarity_residual = stationarity_residual
        self.faces_examined = faces_examined
        self.faces_feasible = faces_feasible
        self.fallbacks = fallbacks

    def stats(self):
        return {
            'faces_examined': self.faces_examined,
            'faces_feasible': self.faces_feasible,
            'fallbacks': self.fallbacks,
            'stationarity_residual': self.stationarity_residual,
        }

    def __repr__(self):
        return 'SimplexSolution(value={!r}, face={})'.format(self.value, self.face)


class FaceEnumerationSolver(object):

    """ Face enumeration solver for SimplexQuadraticProgram.

    :param concavity_tolerance: Largest eigenvalue of the quadratic part still accepted
    :type concavity_tolerance: float

    :param pivot_tolerance: Smallest LU pivot (absolute) of a face system before it counts as singular
    :type pivot_tolerance: float

    :param residual_tolerance: Least-squares candidates of singular faces are only kept below this residual
    :type residual_tolerance: float

    :param feasibility_tolerance: Candidates with a coordinate below -feasibility_tolerance lie outside the simplex
    :type feasibility_tolerance: float
    """

    # the incumbent is only replaced by a strictly better candidate
    IMPROVEMENT = 1e-12

    def __init__(self, concavity_tolerance=1e-10, pivot_tolerance=1e-12, residual_tolerance=1e-9, feasibility_tolerance=1e-12):
        self.concavity_tolerance = concavity_tolerance
        self.pivot_tolerance = pivot_tolerance
        self.residual_tolerance = residual_tolerance
        self.feasibility_tolerance = feasibility_tolerance

    @classmethod
    def from_config(cls, cfg):
        return cls(concavity_tolerance=cfg.APP_QP_CONCAVITY_TOLERANCE, pivot_tolerance=cfg.APP_QP_PIVOT_TOLERANCE,
                   residual_tolerance=cfg.APP_QP_RESIDUAL_TOLERANCE, feasibility_tolerance=cfg.APP_QP_FEASIBILITY_TOLERANCE)

    @staticmethod
    def faces(dim):
        """ All nonempty faces, smallest first and lexicographic within a size """
        return [face for size in range(1, dim + 1) for face in itertools.combinations(range(dim), size)]

    def check_concave(self, prog):
        top = prog.max_eigenvalue()
        if top > self.concavity_tolerance:
            raise NonConcaveProgram('quadratic part has eigenvalue {:.6g} > {:.1g}, program is not concave'.format(top, self.concavity_tolerance), top)

    def _solve_face(self, prog, face):
        """ Stationary point of prog on the affine hull of face.

        :return: (t_face, fallback) with t_face None when the face has no acceptable candidate
        """
        idx = list(face)
        k = len(idx)
        kkt = numpy.zeros((k + 1, k + 1))
        kkt[:k, :k] = 2.0 * prog.quadratic[numpy.ix_(idx, idx)]
        kkt[:k, k] = -1.0
        kkt[k, :k] = 1.0
        rhs = numpy.concatenate([-prog.linear[idx], [1.0]])

        with _WARNINGS_LOCK, warnings.catch_warnings():
            # an exactly singular face raises here and goes to least squares
            warnings.simplefilter('error', scipy.linalg.LinAlgWarning)
            try:
                lu, piv = scipy.linalg.lu_factor(kkt, check_finite=False)
            except scipy.linalg.LinAlgWarning:
                lu = None
        if lu is not None and numpy.min(numpy.abs(numpy.diag(lu))) >= self.pivot_tolerance:
            return scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)[:k], False

        z = scipy.linalg.lstsq(kkt, rhs, check_finite=False)[0]
        residual = numpy.linalg.norm(kkt @ z - rhs)
        if residual < self.residual_tolerance:
            return z[:k], True
        logging.debug('Face %s: singular system, least-squares residual %.3g rejected', face, residual)
        return None, True

    def kkt_residual(self, prog, point, face):
        g = prog.gradient(point)
        on = numpy.zeros(prog.dim, dtype=bool)
        on[list(face)] = True
        lam = g[on].mean()
        residual = numpy.max(numpy.abs(g[on] - lam))
        if not on.all():
            residual = max(residual, numpy.max(numpy.maximum(g[~on] - lam, 0.0)))
        return float(residual)

    def solve(self, prog):
        """ Global maximum of a concave program over the simplex

        :type prog: SimplexQuadraticProgram
        :rtype: SimplexSolution
        """
        self.check_concave(prog)

        best = None
        examined = feasible = fallbacks = 0
        for face in self.faces(prog.dim):
            examined += 1
            t_face, fallback = self._solve_face(prog, face)
            fallbacks += fallback
            if t_face is None or numpy.min(t_face) < -self.feasibility_tolerance:
                continue
            feasible += 1

            point = numpy.zeros(prog.dim)
            point[list(face)] = numpy.clip(t_face, 0.0, None)
            point /= point.sum()
            value = float(prog.value(point))

            if best is None or value > best[0] + self.IMPROVEMENT:
                best = (value, point, face)

        # vertices always give a candidate
        assert best is not None
        value, point, face = best
        logging.debug('Simplex QP: %d faces, %d feasible, %d fallbacks, max %.12g on face %s', examined, feasible, fallbacks, value, face)
        return SimplexSolution(value, point, face, self.kkt_residual(prog, point, face), examined, feasible, fallbacks)


def maximize_over_simplex(prog, solver=None):
    """ Global maximum of a concave quadratic over the standard simplex

    :type prog: SimplexQuadraticProgram
    :param solver: Solver to use, one with default tolerances if omitted
    :type solver: FaceEnumerationSolver
    :rtype: SimplexSolution
    """
    return (solver or FaceEnumerationSolver()).solve(prog)


class GridOracleResult(object):

    """ Brute-force maximum over the grid points of the simplex.

    :param value: Best grid value
    :param point: Grid point attaining it
    :param step: Grid spacing actually used (1/N)
    :param resolution_bound: L * step * sqrt(dim), the true maximum is at most value + resolution_bound
    :param points_evaluated: Number of grid points
    """

    def __init__(self, value, point, step, resolution_bound, points_evaluated):
        self.value = value
        self.point = point
        self.step = step
        self.resolution_bound = resolution_bound
        self.points_evaluated = points_evaluated

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return 'GridOracleResult(value={!r}, step={!r}, resolution_bound={!r})'.format(self.value, self.step, self.resolution_bound)


@functools.lru_cache(maxsize=None)
def _compositions(parts, total):
    """ All nonnegative integer vectors of length parts summing to total """
    if parts == 1:
        out = numpy.array([[total]], dtype=numpy.int32)
    else:
        out = numpy.concatenate([
            numpy.column_stack([numpy.full(len(rest), first, dtype=numpy.int32), rest])
            for first in range(total + 1)
            for rest in (_compositions(parts - 1, total - first),)
        ])
    out.setflags(write=False)
    return out


def grid_oracle(prog, step):
    """ Maximum of prog over all simplex points whose coordinates are multiples of step.

    :type prog: SimplexQuadraticProgram
    :param step: Grid spacing, 0 < step <= 0.25, rounded so that 1/step is an integer
    :rtype: GridOracleResult
    """
    if not 0 < step <= 0.25:
        raise InvalidParameter('grid step must lie in (0, 0.25], got {}'.format(step))
    divisions = int(round(1.0 / step))
    if abs(divisions * step - 1.0) > 1e-9:
        logging.warning('Grid step %g does not divide 1, using %g', step, 1.0 / divisions)
    step = 1.0 / divisions

    grid = _compositions(prog.dim, divisions)
    # rows come sorted by the first coordinate, one slab per value keeps the temporaries small
    bounds = numpy.searchsorted(grid[:, 0], numpy.arange(divisions + 2))
    best_value, best_point = -numpy.inf, None
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        slab = grid[lo:hi] * step
        values = prog.value(slab)
        i = int(numpy.argmax(values))
        if values[i] > best_value:
            best_value, best_point = float(values[i]), slab[i]

    bound = prog.gradient_bound() * step * numpy.sqrt(prog.dim)
    return GridOracleResult(best_value, best_point, step, float(bound), len(grid))
