"""
Unit tests for explicit second fundamental forms of isoparametric hypersurfaces
"""
import unittest

import numpy

from acscert.errors import ConstraintViolation, ShapeMismatch
from acscert.isoparametric import Multiplicities, SffTensor, curvature_normals, build_sff, acs_from_sff, acs_prime, \
    ricci_from_sff, ricci_eigenvalues, realize_pair, distribution_weights, mixed_normal, max_acs
from tests.base import BaseTestCase


class SffTestCase(BaseTestCase):

    PAIRS = 100

    def random_frame_pair(self, n):
        X = self.rng.standard_normal(n)
        X /= numpy.linalg.norm(X)
        N = self.rng.standard_normal(n)
        N -= (N @ X) * X
        return X, N / numpy.linalg.norm(N)

    def test_reduced_identity(self):
        for pair in ((5, 5), (6, 9)):
            m = Multiplicities(*pair)
            normals = curvature_normals(m)
            sff = build_sff(normals, m)
            H = sff.mean_curvature()
            for _ in range(self.PAIRS):
                X, N = self.random_frame_pair(m.n)
                s, t = distribution_weights(m, X), distribution_weights(m, N)
                xn = mixed_normal(normals, m, X, N)
                expected = acs_prime(normals, m, s, t) - 2 * xn @ xn
                self.assertAlmostEqual(acs_from_sff(sff, H, X, N), expected, delta=1e-9)

    def test_mean_curvature_of_minimal_leaf(self):
        m = Multiplicities(3, 4)
        normals = curvature_normals(m)
        numpy.testing.assert_allclose(build_sff(normals, m).mean_curvature(), -m.n * normals.p, atol=1e-10)

    def test_ricci_from_sff(self):
        m = Multiplicities(2, 3)
        normals = curvature_normals(m)
        ricci = ricci_from_sff(build_sff(normals, m))
        expected = numpy.repeat([value for value, _ in ricci_eigenvalues(normals, m)], m.per_distribution)
        numpy.testing.assert_allclose(numpy.diag(ricci), expected, atol=1e-10)
        numpy.testing.assert_allclose(ricci - numpy.diag(numpy.diag(ricci)), 0.0, atol=1e-12)

    def test_realize_pair(self):
        m = Multiplicities(2, 3)
        normals = curvature_normals(m)
        result = max_acs(m, threads=1)
        X, N = realize_pair(m, result.s, result.t)
        numpy.testing.assert_allclose(distribution_weights(m, X), result.s, atol=1e-12)
        numpy.testing.assert_allclose(distribution_weights(m, N), result.t, atol=1e-12)
        numpy.testing.assert_allclose(mixed_normal(normals, m, X, N), 0.0, atol=1e-12)
        sff = build_sff(normals, m)
        self.assertAlmostEqual(acs_from_sff(sff, sff.mean_curvature(), X, N), result.value, delta=1e-9)

    def test_realize_pair_needs_room(self):
        s = t = numpy.array([0.5, 0.0, 0.5, 0.0])
        with self.assertRaises(ValueError):
            realize_pair((1, 3), s, t)

    def test_validation(self):
        with self.assertRaises(ShapeMismatch):
            SffTensor(numpy.zeros((3, 2, 1)))
        entries = numpy.zeros((2, 2, 1))
        entries[0, 1, 0] = 1.0
        with self.assertRaises(ValueError):
            SffTensor(entries)

        m = Multiplicities(1, 1)
        sff = build_sff(curvature_normals(m), m)
        X = numpy.array([1.0, 0, 0, 0])
        with self.assertRaises(ConstraintViolation):
            acs_from_sff(sff, sff.mean_curvature(), X, X)
        with self.assertRaises(ShapeMismatch):
            acs_from_sff(sff, sff.mean_curvature(), X[:3], X[:3])


if __name__ == "__main__":
    unittest.main()
