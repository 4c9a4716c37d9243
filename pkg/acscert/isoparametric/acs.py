"""
The reduced quantity ACS' on the product of two 3-simplices and its exact maximization.

For an orthogonal pair (X, N) with X = sum x_i, N = sum y_i split along the curvature
distributions, s_i = |x_i|^2 and t_i = |y_i|^2 are points of the simplex. ACS' is affine in s
and concave quadratic in t, so its maximum is the best of four simplex programs, one per
vertex s = e_k.
"""

import concurrent.futures
import functools
import logging

import numpy

import config
from acscert.optimize import SimplexQuadraticProgram, FaceEnumerationSolver
from .curvature import Multiplicities, curvature_normals, _as_multiplicities


def acs_prime(normals, m, s, t):
    """ ACS'(s, t) = -2n + sum_ij (s_i - t_i) t_j <xi_i, xi_j> + 2 sum_i (s_i + t_i) |xi_i|^2 on a minimal leaf

    :type normals: CurvatureNormalSystem
    :type m: Multiplicities
    :param s: Point of the 3-simplex
    :param t: Point of the 3-simplex
    :rtype: float
    """
    m = _as_multiplicities(m)
    s, t = numpy.asarray(s, dtype=float), numpy.asarray(t, dtype=float)
    return float(-2 * m.n + (s - t) @ normals.gram() @ t + 2.0 * (s + t) @ normals.norms2())


def acs_prime_general(normals, weights, s, t):
    """ ACS'(s, t) without assuming minimality, the mean curvature being sum_i weights_i xi_i.

    :param weights: Multiplicity of every distribution, e.g. Multiplicities.per_distribution
    """
    s, t = numpy.asarray(s, dtype=float), numpy.asarray(t, dtype=float)
    weights = numpy.asarray(weights, dtype=float)
    G = normals.gram()
    # sum_ij -w_i (s_j + t_j) G_ij == -<H, sum_j (s_j + t_j) xi_j>
    return float(-(weights @ G) @ (s + t) + (s - t) @ G @ t + 2.0 * (s + t) @ normals.norms2())


def s_program(normals, m, s):
    """ ACS'(s, .) as a simplex program in t """
    m = _as_multiplicities(m)
    s = numpy.asarray(s, dtype=float)
    G = normals.gram()
    diag = normals.norms2()
    return SimplexQuadraticProgram(-2 * m.n + 2.0 * s @ diag, G @ s + 2.0 * diag, -G)


def vertex_program(normals, m, k):
    """ ACS'(e_k, .) as a simplex program in t

    :param k: Vertex index 0..3
    :rtype: SimplexQuadraticProgram
    """
    return s_program(normals, m, numpy.eye(4)[k])


class MaxAcsResult(object):

    """ Maximum of ACS' over both simplices. upper_bound_semantics is set for m1 = 1, where max ACS' only bounds max ACS from above.

    :type multiplicities: Multiplicities
    :param value: The maximum
    :param vertex: Index k of the maximizing s-vertex e_k
    :param t: Maximizing t
    :param solutions: SimplexSolution of every vertex program
    """

    def __init__(self, multiplicities, value, vertex, t, solutions):
        self.multiplicities = multiplicities
        self.value = value
        self.vertex = vertex
        self.s = numpy.eye(4)[vertex]
        self.t = t
        self.solutions = solutions

    @property
    def upper_bound_semantics(self):
        return self.multiplicities.m1 == 1

    def stats(self):
        return {
            'vertex_values': [sol.value for sol in self.solutions],
            'faces_examined': sum(sol.faces_examined for sol in self.solutions),
            'fallbacks': sum(sol.fallbacks for sol in self.solutions),
            'stationarity_residual': max(sol.stationarity_residual for sol in self.solutions),
            'argmax_vertex': self.vertex,
            'argmax_t': list(self.t),
            'upper_bound_semantics': self.upper_bound_semantics,
        }

    def __iter__(self):
        return iter((self.value, self.s, self.t))

    def __repr__(self):
        return 'MaxAcsResult(value={!r}, vertex={}, t={})'.format(self.value, self.vertex, self.t)


def max_acs(m, solver=None, threads=None):
    """ Maximum of ACS' over the product of simplices via the four vertex programs.

    :type m: Multiplicities or tuple
    :param solver: Simplex solver, default tolerances if omitted
    :type solver: FaceEnumerationSolver
    :param threads: Worker threads for the vertex programs, ACS_CERT_THREADS if omitted
    :rtype: MaxAcsResult
    """
    m = _as_multiplicities(m)
    solver = solver or FaceEnumerationSolver()
    normals = curvature_normals(m)
    programs = [vertex_program(normals, m, k) for k in range(4)]

    workers = min(4, threads or config.thread_count())
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            solutions = list(pool.map(solver.solve, programs))
    else:
        solutions = [solver.solve(prog) for prog in programs]

    vertex = 0
    for k, sol in enumerate(solutions):
        if sol.value > solutions[vertex].value + solver.IMPROVEMENT:
            vertex = k

    if m.m1 == 1:
        logging.info('m1 = 1: max ACS\' for %s only bounds max ACS from above', m)
    logging.debug('max ACS\' for %s: %.12g at vertex %d', m, solutions[vertex].value, vertex)
    return MaxAcsResult(m, solutions[vertex].value, vertex, solutions[vertex].point, solutions)


def simple_upper_bound(m):
    """ -2n + (10 (m1 + m2) / m1) (1 + sqrt(m2 / (m1 + m2))), an upper bound of max ACS' in terms of the multiplicities only """
    m = _as_multiplicities(m)
    total = m.m1 + m.m2
    return -2.0 * m.n + 10.0 * total / m.m1 * (1.0 + numpy.sqrt(m.m2 / total))


@functools.lru_cache(maxsize=16)
def m1_four_threshold(max_m2=400):
    """ Smallest m2 >= 4 with max ACS'(4, m2) < 0, searched up to max_m2.

    Numeric evidence only. The search does not show that every larger m2 stays negative.

    :return: The threshold, None if no m2 up to max_m2 qualifies
    :rtype: int
    """
    for m2 in range(4, max_m2 + 1):
        if max_acs(Multiplicities(4, m2), threads=1).value < 0:
            logging.info('m1 = 4: first certified negative max ACS\' at m2 = %d', m2)
            return m2
    return None
