"""
Unit tests for real, complex and quaternionic matrices
"""
import unittest

import numpy

from acscert.algebra import Matrix, Quaternion, REAL, COMPLEX, QUATERNION
from acscert.errors import FieldMismatch, ShapeMismatch
from tests.base import BaseTestCase


class MatrixTestCase(BaseTestCase):

    def quaternionic(self, rows, cols, batch=()):
        return Matrix.standard_normal(self.rng, rows, cols, QUATERNION, batch)

    def test_product_matches_scalar_quaternions(self):
        A, B = self.quaternionic(2, 3), self.quaternionic(3, 2)
        C = A @ B
        for i in range(2):
            for k in range(2):
                expected = sum((Quaternion.from_array(A.data[i, j]) * Quaternion.from_array(B.data[j, k]) for j in range(3)), Quaternion())
                numpy.testing.assert_allclose(C.data[i, k], expected.to_array(), atol=1e-12)

    def test_adjoint_of_product(self):
        A, B = self.quaternionic(3, 3), self.quaternionic(3, 3)
        assert (A @ B).adjoint().allclose(B.adjoint() @ A.adjoint(), atol=1e-12), '(AB)* = B*A*'

    def test_real_trace_is_cyclic(self):
        A, B = self.quaternionic(3, 4), self.quaternionic(4, 3)
        self.assertAlmostEqual(float((A @ B).re_trace()), float((B @ A).re_trace()), places=12)

    def test_re_inner_is_frobenius(self):
        A, B = self.quaternionic(3, 3), self.quaternionic(3, 3)
        self.assertAlmostEqual(float(A.re_inner(B)), float((A @ B.adjoint()).re_trace()), places=12)
        C = Matrix(self.rng.standard_normal((3, 3)) + 1j * self.rng.standard_normal((3, 3)))
        self.assertAlmostEqual(float(C.frobenius_norm2()), float(numpy.sum(numpy.abs(C.data) ** 2)), places=12)

    def test_identity(self):
        A = self.quaternionic(3, 3)
        assert (Matrix.identity(3, QUATERNION) @ A).allclose(A)
        assert (A @ Matrix.identity(3, QUATERNION)).allclose(A)

    def test_batched_product(self):
        A, B = self.quaternionic(2, 2, (5,)), self.quaternionic(2, 2, (5,))
        C = A @ B
        assert C.batch_shape == (5,)
        assert len(C) == 5
        for b in range(5):
            assert C[b].allclose(A[b] @ B[b], atol=1e-12)

    def test_scaling_by_batch_array(self):
        A = self.quaternionic(2, 2, (3,))
        scaled = A * numpy.array([1.0, 2.0, 3.0])
        assert scaled[2].allclose(A[2] * 3.0)

    def test_complex_scaling(self):
        D = Matrix(numpy.diag([1.0, -1.0]).astype(complex)) * 0.5j
        assert D.field == COMPLEX
        numpy.testing.assert_allclose(D.data, numpy.diag([0.5j, -0.5j]), atol=1e-15)
        numpy.testing.assert_allclose((1j * Matrix.identity(2, COMPLEX)).data, 1j * numpy.eye(2), atol=1e-15)
        numpy.testing.assert_allclose((Matrix.identity(2, COMPLEX) / 2j).data, -0.5j * numpy.eye(2), atol=1e-15)

        A = self.quaternionic(2, 2)
        _, i, _, _ = Quaternion.units()
        assert (A * (2 - 3j)).allclose(A * 2.0 - A.left_multiply(i) * 3.0)

        B = self.quaternionic(2, 2, (3,))
        scaled = B * numpy.array([1j, 2.0, -1j])
        assert scaled[0].allclose(B[0].left_multiply(i))
        assert scaled[1].allclose(B[1] * 2.0)

        with self.assertRaises(FieldMismatch):
            Matrix.identity(2, REAL) * 1j

    def test_left_multiply(self):
        A = self.quaternionic(2, 2)
        _, i, _, _ = Quaternion.units()
        out = A.left_multiply(i)
        expected = i * Quaternion.from_array(A.data[0, 1])
        numpy.testing.assert_allclose(out.data[0, 1], expected.to_array(), atol=1e-12)
        with self.assertRaises(FieldMismatch):
            Matrix.identity(2, COMPLEX).left_multiply(i)

    def test_promotion(self):
        C = Matrix(numpy.array([[1 + 2j, 0], [3j, -1]]))
        Q = C.astype(QUATERNION)
        numpy.testing.assert_allclose(Q.data[0, 0], [1, 2, 0, 0])
        numpy.testing.assert_allclose(Q.data[1, 0], [0, 3, 0, 0])
        with self.assertRaises(FieldMismatch):
            Q.astype(REAL)

    def test_block_diag(self):
        D = Matrix.block_diag(Matrix.identity(2, QUATERNION), Matrix.identity(3, QUATERNION) * 2.0)
        assert D.shape == (5, 5)
        numpy.testing.assert_allclose(D.re_trace(), 8.0)

    def test_mismatches(self):
        with self.assertRaises(FieldMismatch):
            Matrix.identity(2, COMPLEX) + Matrix.identity(2, QUATERNION)
        with self.assertRaises(ShapeMismatch):
            Matrix.identity(2, REAL) @ Matrix.identity(3, REAL)
        with self.assertRaises(ShapeMismatch):
            Matrix(numpy.zeros((2, 2)), QUATERNION)
        with self.assertRaises(IndexError):
            Matrix.identity(2)[0]


if __name__ == "__main__":
    unittest.main()
