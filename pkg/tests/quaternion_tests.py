"""
Unit tests for scalar quaternions
"""
import unittest

from hypothesis import given, strategies as st

from acscert.algebra import Quaternion
from tests.base import BaseTestCase

component = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, component, component, component, component)


def close(p, q, tol=1e-9):
    return all(abs(a - b) <= tol * (1 + abs(b)) for a, b in zip(p.to_array(), q.to_array()))


class QuaternionTestCase(BaseTestCase):

    def test_units(self):
        one, i, j, k = Quaternion.units()
        assert i * j == k, 'ij = k'
        assert j * i == -k, 'ji = -k'
        assert j * k == i and k * i == j
        for u in (i, j, k):
            assert u * u == -one, 'unit squares to -1'

    def test_real_scalars(self):
        q = Quaternion(1, 2, 3, 4)
        assert 2 * q == q * 2 == Quaternion(2, 4, 6, 8)
        assert q + 1 == Quaternion(2, 2, 3, 4)
        assert 1 - q == Quaternion(0, -2, -3, -4)
        assert q.real == 1.0

    @given(quaternions, quaternions)
    def test_norm_is_multiplicative(self, p, q):
        assert abs((p * q).norm() - p.norm() * q.norm()) <= 1e-9 * (1 + p.norm() * q.norm())

    @given(quaternions, quaternions, quaternions)
    def test_associative(self, p, q, r):
        assert close((p * q) * r, p * (q * r), 1e-9 * (1 + p.norm() * q.norm() * r.norm()))

    @given(quaternions, quaternions)
    def test_conjugate_reverses_products(self, p, q):
        assert close((p * q).conj(), q.conj() * p.conj())

    @given(quaternions)
    def test_inverse(self, q):
        if q.norm() < 1e-3:
            return
        assert close(q * q.inverse(), Quaternion(1), 1e-9)
        assert close(q.inverse() * q, Quaternion(1), 1e-9)

    def test_zero_has_no_inverse(self):
        with self.assertRaises(ZeroDivisionError):
            Quaternion().inverse()

    def test_array_round_trip(self):
        q = Quaternion(0.5, -1, 2, 7)
        assert Quaternion.from_array(q.to_array()) == q
        with self.assertRaises(ValueError):
            Quaternion.from_array([1, 2, 3])

    def test_no_mixing_with_other_types(self):
        with self.assertRaises(TypeError):
            Quaternion(1) + 'a'


if __name__ == "__main__":
    unittest.main()
