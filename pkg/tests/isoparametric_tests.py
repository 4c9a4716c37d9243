"""
Unit tests for curvature normals, the reduced quantity ACS' and its maximum
"""
import functools
import unittest

import numpy
from hypothesis import given, strategies as st

from acscert.isoparametric import Multiplicities, CurvatureNormalSystem, curvature_normals, minimal_angle, volume_profile, \
    volume_profile_derivative, acs_prime, acs_prime_general, vertex_program, max_acs, simple_upper_bound, m1_four_threshold, \
    ricci_eigenvalues, extreme_sectional
from acscert.isoparametric.acs import s_program
from tests.base import BaseTestCase


def simplex_point(rng, dim=4):
    return rng.dirichlet(numpy.ones(dim))


class CurvatureNormalTestCase(BaseTestCase):

    @given(st.floats(min_value=0.01, max_value=numpy.pi / 4 - 0.01))
    def test_normals_meet_p(self, theta):
        normals = CurvatureNormalSystem(theta)
        numpy.testing.assert_allclose(normals.xi @ normals.p, -1.0, atol=1e-12)

    def test_minimal_leaf_mean_curvature(self):
        for pair in ((1, 1), (2, 7), (5, 5), (6, 9), (4, 35)):
            m = Multiplicities(*pair)
            normals = curvature_normals(m)
            numpy.testing.assert_allclose(normals.mean_curvature(m.per_distribution), -m.n * normals.p, atol=1e-10)

    def test_minimal_angle_is_critical(self):
        for pair in ((1, 2), (3, 4), (6, 9)):
            m = Multiplicities(*pair)
            theta = minimal_angle(m)
            ratio = volume_profile_derivative(m, theta) / volume_profile(m, theta)
            assert abs(ratio) < 1e-9, 'minimal leaf is a critical point of the volume'
            assert volume_profile(m, theta) > volume_profile(m, theta - 1e-3)
            assert volume_profile(m, theta) > volume_profile(m, theta + 1e-3)

    def test_minimal_angle_maximizes_volume(self):
        grid = numpy.arange(1e-5, numpy.pi / 4, 1e-5)
        theta = grid[numpy.argmax(volume_profile((6, 9), grid))]
        self.assertAlmostEqual(theta, minimal_angle((6, 9)), delta=1e-4)

    def test_multiplicities(self):
        m = Multiplicities(6, 9)
        assert m.n == 30 and m.focal_dim == 24
        assert m.per_distribution == (6, 9, 6, 9)
        assert Multiplicities.sorted_pair(9, 6) == m
        with self.assertRaises(ValueError):
            Multiplicities(9, 6)
        with self.assertRaises(ValueError):
            Multiplicities(0, 3)
        assert Multiplicities(9, 6, ordered=False).m1 == 9


class AcsPrimeTestCase(BaseTestCase):

    def test_vertex_programs_agree(self):
        m = Multiplicities(3, 7)
        normals = curvature_normals(m)
        for k in range(4):
            prog = vertex_program(normals, m, k)
            for _ in range(10):
                t = simplex_point(self.rng)
                self.assertAlmostEqual(float(prog.value(t)), acs_prime(normals, m, numpy.eye(4)[k], t), places=10)

    def test_t_hessian_is_minus_twice_gram(self):
        for pair in ((2, 5), (5, 5), (6, 9)):
            m = Multiplicities(*pair)
            normals = curvature_normals(m)
            G = normals.gram()
            assert numpy.linalg.eigvalsh(G)[0] >= -1e-12 * numpy.abs(G).max(), 'Gram matrix is positive semidefinite'
            s = simplex_point(self.rng)
            numpy.testing.assert_allclose(2.0 * s_program(normals, m, s).quadratic, -2.0 * G, rtol=0, atol=1e-12)

            # ACS'(s, .) is quadratic, so unit second differences give the Hessian exactly
            f = functools.partial(acs_prime, normals, m, s)
            E = numpy.eye(4)
            scale = max(1.0, abs(f(numpy.zeros(4))), float(numpy.abs(G).max()))
            for i in range(4):
                for j in range(4):
                    second = f(E[i] + E[j]) - f(E[i]) - f(E[j]) + f(numpy.zeros(4))
                    self.assertAlmostEqual(second, -2.0 * G[i, j], delta=1e-12 * scale)

    def test_affine_in_s(self):
        for pair in ((1, 4), (3, 7), (6, 9)):
            m = Multiplicities(*pair)
            normals = curvature_normals(m)
            for _ in range(20):
                s, s2, t = simplex_point(self.rng), simplex_point(self.rng), simplex_point(self.rng)
                lam = self.rng.uniform()
                lhs = acs_prime(normals, m, lam * s + (1 - lam) * s2, t)
                rhs = lam * acs_prime(normals, m, s, t) + (1 - lam) * acs_prime(normals, m, s2, t)
                self.assertAlmostEqual(lhs, rhs, delta=1e-12 * max(1.0, abs(lhs)))

    def test_general_form_reduces_on_minimal_leaf(self):
        m = Multiplicities(2, 5)
        normals = curvature_normals(m)
        for _ in range(20):
            s, t = simplex_point(self.rng), simplex_point(self.rng)
            self.assertAlmostEqual(acs_prime_general(normals, m.per_distribution, s, t), acs_prime(normals, m, s, t), places=9)

    def test_maximum_dominates_samples(self):
        m = Multiplicities(3, 4)
        normals = curvature_normals(m)
        result = max_acs(m, threads=1)
        for _ in range(200):
            s, t = simplex_point(self.rng), simplex_point(self.rng)
            assert acs_prime(normals, m, s, t) <= result.value + 1e-9, 'ACS\' is affine in s, so vertices suffice'
        value, s, t = result
        self.assertAlmostEqual(acs_prime(normals, m, s, t), value, places=9)

    def test_min_multiplicity_five_sweep(self):
        for m1 in range(5, 13):
            for m2 in range(m1, 61):
                m = Multiplicities(m1, m2)
                result = max_acs(m, threads=1)
                assert result.value < 0, 'max ACS\' < 0 for {}'.format(m)
                assert result.value <= simple_upper_bound(m) + 1e-9, 'simple bound holds for {}'.format(m)

    def test_threads_do_not_change_the_result(self):
        m = Multiplicities(4, 11)
        assert max_acs(m, threads=1).value == max_acs(m, threads=4).value

    def test_upper_bound_semantics(self):
        assert max_acs((1, 6), threads=1).upper_bound_semantics
        assert not max_acs((2, 6), threads=1).upper_bound_semantics

    def test_stats(self):
        stats = max_acs((5, 5), threads=1).stats()
        assert stats['faces_examined'] == 60
        assert len(stats['vertex_values']) == 4
        assert stats['stationarity_residual'] < 1e-8

    def test_m1_four_threshold(self):
        threshold = m1_four_threshold(60)
        assert threshold is not None, 'some m2 <= 60 certifies m1 = 4'
        assert max_acs((4, threshold), threads=1).value < 0
        assert threshold == 4 or max_acs((4, threshold - 1), threads=1).value >= 0


class DiagnosticsTestCase(BaseTestCase):

    def test_ricci_positive_when_acs_negative(self):
        for pair in ((5, 5), (6, 9), (5, 20), (4, 35)):
            m = Multiplicities(*pair)
            if max_acs(m, threads=1).value >= 0:
                continue
            eigenvalues = ricci_eigenvalues(curvature_normals(m), m)
            assert [mult for _, mult in eigenvalues] == list(m.per_distribution)
            assert all(value > 0 for value, _ in eigenvalues), 'Ricci positive on {}'.format(m)

    def test_extreme_sectional_grows(self):
        values = [extreme_sectional(curvature_normals((4, m2))) for m2 in (100, 10 ** 4, 10 ** 6)]
        assert all(v < 0 for v in values)
        assert abs(values[0]) < abs(values[1]) < abs(values[2])

        # asymptotic to -|xi_1|
        gaps = []
        for m2, value in zip((100, 10 ** 4, 10 ** 6), values):
            xi_1 = curvature_normals((4, m2)).xi[0]
            gaps.append(abs(value / -numpy.sqrt(xi_1 @ xi_1) - 1.0))
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 1e-2


if __name__ == "__main__":
    unittest.main()
