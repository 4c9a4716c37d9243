"""
Dense small matrices over the reals, the complex numbers and the quaternions.

Quaternionic entries are stored as 4 real components in a trailing axis, so a batch of
quaternionic r x c matrices is an array shaped (..., r, c, 4). Real and complex matrices
use plain numpy arrays shaped (..., r, c). Leading axes are batch axes and every operation
broadcasts over them.
"""

import numpy

from acscert.errors import ShapeMismatch, FieldMismatch
from .quaternion import HAMILTON, CONJUGATE, Quaternion

REAL = 'real'
COMPLEX = 'complex'
QUATERNION = 'quaternion'

FIELDS = (REAL, COMPLEX, QUATERNION)


def _promote(data, source, target):
    """ Embeds entries of field source into field target (R < C < H) """
    if source == target:
        return data
    if target == COMPLEX:
        return data.astype(complex)
    # R or C into H
    out = numpy.zeros(data.shape + (4,))
    out[..., 0] = data.real
    if source == COMPLEX:
        out[..., 1] = data.imag
    return out


class Matrix(object):

    """ A (batch of) dense matrices with entries in one of the three division algebras.

    :param data: Entry array, see module docstring for the layout
    :type data: numpy.ndarray

    :param field: One of REAL, COMPLEX, QUATERNION. Inferred from the dtype when omitted (quaternionic data needs it explicitly).
    :type field: str
    """

    __array_priority__ = 100

    def __init__(self, data, field=None):
        data = numpy.asarray(data)
        if field is None:
            field = COMPLEX if numpy.iscomplexobj(data) else REAL
        if field not in FIELDS:
            raise FieldMismatch('unknown field {!r}'.format(field))

        if field == QUATERNION:
            data = data.astype(float, copy=False)
            if data.ndim < 3 or data.shape[-1] != 4:
                raise ShapeMismatch('quaternionic data needs shape (..., rows, cols, 4), got {}'.format(data.shape))
        elif field == COMPLEX:
            data = data.astype(complex, copy=False)
        else:
            if numpy.iscomplexobj(data):
                raise FieldMismatch('complex data given for a real matrix')
            data = data.astype(float, copy=False)

        if self._matrix_ndim_of(field) > data.ndim:
            raise ShapeMismatch('matrix data needs at least two axes, got shape {}'.format(data.shape))

        self.data = data
        self.field = field

    @staticmethod
    def _matrix_ndim_of(field):
        return 3 if field == QUATERNION else 2

    @property
    def _core(self):
        return self._matrix_ndim_of(self.field)

    @property
    def rows(self):
        return self.data.shape[-self._core]

    @property
    def cols(self):
        return self.data.shape[-self._core + 1]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def batch_shape(self):
        return self.data.shape[:-self._core]

    @property
    def is_square(self):
        return self.rows == self.cols

    # construction

    @classmethod
    def zeros(cls, rows, cols, field=REAL, batch=()):
        shape = tuple(batch) + (rows, cols)
        if field == QUATERNION:
            return cls(numpy.zeros(shape + (4,)), QUATERNION)
        return cls(numpy.zeros(shape, dtype=complex if field == COMPLEX else float), field)

    @classmethod
    def identity(cls, n, field=REAL):
        out = cls.zeros(n, n, field)
        if field == QUATERNION:
            out.data[numpy.arange(n), numpy.arange(n), 0] = 1.0
        else:
            out.data[numpy.arange(n), numpy.arange(n)] = 1.0
        return out

    @classmethod
    def from_quaternions(cls, rows):
        """ Builds a quaternionic matrix from nested lists of Quaternion """
        return cls(numpy.array([[q.to_array() for q in row] for row in rows]), QUATERNION)

    @classmethod
    def standard_normal(cls, rng, rows, cols, field, batch=()):
        """ Matrix with independent standard normal real components

        :param rng: Generator to draw from
        :type rng: numpy.random.Generator
        """
        shape = tuple(batch) + (rows, cols)
        if field == QUATERNION:
            return cls(rng.standard_normal(shape + (4,)), QUATERNION)
        if field == COMPLEX:
            return cls(rng.standard_normal(shape) + 1j * rng.standard_normal(shape), COMPLEX)
        return cls(rng.standard_normal(shape), REAL)

    @classmethod
    def block_diag(cls, upper, lower):
        """ diag(upper, lower) for two square matrices over the same field """
        _check_field(upper, lower)
        if upper.batch_shape != lower.batch_shape:
            raise ShapeMismatch('batch shapes differ: {} vs {}'.format(upper.batch_shape, lower.batch_shape))
        a, b = upper.rows, lower.rows
        out = cls.zeros(a + b, upper.cols + lower.cols, upper.field, upper.batch_shape)
        out._block(slice(0, a), slice(0, upper.cols))[...] = upper.data
        out._block(slice(a, a + b), slice(upper.cols, upper.cols + lower.cols))[...] = lower.data
        return out

    def _block(self, rows, cols):
        if self.field == QUATERNION:
            return self.data[..., rows, cols, :]
        return self.data[..., rows, cols]

    def astype(self, field):
        """ Same matrix over a larger field (real -> complex -> quaternion) """
        if FIELDS.index(field) < FIELDS.index(self.field):
            raise FieldMismatch('cannot narrow {} matrix to {}'.format(self.field, field))
        return Matrix(_promote(self.data, self.field, field), field)

    def copy(self):
        return Matrix(self.data.copy(), self.field)

    # algebra

    def adjoint(self):
        """ Conjugate transpose A* """
        if self.field == QUATERNION:
            return Matrix(numpy.swapaxes(self.data, -2, -3) * CONJUGATE, QUATERNION)
        return Matrix(numpy.conj(numpy.swapaxes(self.data, -1, -2)), self.field)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_field(self, other)
        if self.cols != other.rows:
            raise ShapeMismatch('cannot multiply {}x{} by {}x{}'.format(self.rows, self.cols, other.rows, other.cols))
        if self.field == QUATERNION:
            return Matrix(numpy.einsum('...ija,...jkb,abc->...ikc', self.data, other.data, HAMILTON, optimize=True), QUATERNION)
        return Matrix(self.data @ other.data, self.field)

    def __add__(self, other):
        _check_compatible(self, other)
        return Matrix(self.data + other.data, self.field)

    def __sub__(self, other):
        _check_compatible(self, other)
        return Matrix(self.data - other.data, self.field)

    def __neg__(self):
        return Matrix(-self.data, self.field)

    def __mul__(self, scale):
        """ Multiplication by a scalar, or by an array of scalars broadcasting over the batch axes.

        Complex scalars need a complex or quaternionic matrix; on quaternions they act as 1, i components from the left.
        """
        if isinstance(scale, Matrix):
            return NotImplemented
        scale = numpy.asarray(scale)
        if not numpy.iscomplexobj(scale):
            scale = scale.astype(float)
        elif self.field == REAL:
            raise FieldMismatch('complex scalar on a real matrix')
        elif self.field == QUATERNION:
            qa = numpy.zeros(scale.shape + (1, 1, 4))
            qa[..., 0, 0, 0] = scale.real
            qa[..., 0, 0, 1] = scale.imag
            return Matrix(numpy.einsum('...a,...b,abc->...c', qa, self.data, HAMILTON), QUATERNION)
        return Matrix(self.data * scale.reshape(scale.shape + (1,) * self._core), self.field)

    __rmul__ = __mul__

    def __truediv__(self, scale):
        return self * (1.0 / numpy.asarray(scale))

    def left_multiply(self, q):
        """ Entrywise product q * A with a scalar q from the left

        :param q: Quaternion (quaternionic matrices) or complex number
        """
        if self.field == QUATERNION:
            qa = q.to_array() if isinstance(q, Quaternion) else numpy.asarray(q, dtype=float)
            return Matrix(numpy.einsum('a,...ijb,abc->...ijc', qa, self.data, HAMILTON), QUATERNION)
        if isinstance(q, Quaternion):
            raise FieldMismatch('quaternion scalar on a {} matrix'.format(self.field))
        if self.field == REAL and numpy.iscomplexobj(q):
            return self.astype(COMPLEX).left_multiply(q)
        return Matrix(q * self.data, self.field)

    def trace(self):
        """ Trace, shaped like the batch (plus a trailing axis of 4 for quaternions) """
        if self.field == QUATERNION:
            return numpy.trace(self.data, axis1=-3, axis2=-2)
        return numpy.trace(self.data, axis1=-2, axis2=-1)

    def re_trace(self):
        """ Real part of the trace. Cyclic even over the quaternions. """
        t = self.trace()
        if self.field == QUATERNION:
            return t[..., 0]
        return numpy.real(t)

    def re_inner(self, other):
        """ Re tr(A B*), computed entrywise as the Euclidean product of the real components """
        _check_compatible(self, other)
        if self.field == QUATERNION:
            return numpy.einsum('...ija,...ija->...', self.data, other.data)
        return numpy.real(numpy.einsum('...ij,...ij->...', self.data, numpy.conj(other.data)))

    def frobenius_norm2(self):
        return self.re_inner(self)

    def max_abs(self):
        return float(numpy.max(numpy.abs(self.data))) if self.data.size else 0.0

    def allclose(self, other, atol=1e-12):
        _check_compatible(self, other)
        return bool(numpy.allclose(self.data, other.data, rtol=0, atol=atol))

    def __getitem__(self, index):
        """ Indexes the batch axes only """
        if not self.batch_shape:
            raise IndexError('matrix has no batch axes')
        return Matrix(self.data[index], self.field)

    def __len__(self):
        if not self.batch_shape:
            raise TypeError('matrix has no batch axes')
        return self.batch_shape[0]

    def __repr__(self):
        return 'Matrix(field={}, shape={}, batch={})'.format(self.field, self.shape, self.batch_shape)


def _check_field(a, b):
    if a.field != b.field:
        raise FieldMismatch('{} matrix combined with {} matrix'.format(a.field, b.field))


def _check_compatible(a, b):
    if not isinstance(b, Matrix):
        raise TypeError('expected Matrix, got {}'.format(type(b).__name__))
    _check_field(a, b)
    if a.shape != b.shape:
        raise ShapeMismatch('shapes differ: {} vs {}'.format(a.shape, b.shape))
