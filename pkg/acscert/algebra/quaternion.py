"""
Scalar quaternions and the Hamilton product shared with quaternionic matrices
"""

import numpy


def _hamilton_table():
    """ Structure constants of the Hamilton product on the basis (1, i, j, k).

    HAMILTON[a, b, c] is the coefficient of basis element c in e_a * e_b.
    """
    table = numpy.zeros((4, 4, 4))
    products = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    for (a, b), (sign, c) in products.items():
        table[a, b, c] = sign
    table.setflags(write=False)
    return table


HAMILTON = _hamilton_table()

CONJUGATE = numpy.array([1.0, -1.0, -1.0, -1.0])


def hamilton_product(p, q):
    """ Batched Hamilton product of arrays shaped (..., 4) """
    return numpy.einsum('...a,...b,abc->...c', p, q, HAMILTON)


class Quaternion(object):

    """ Quaternion w + x i + y j + z k with real components.

    :param w: Real part
    :param x: i component
    :param y: j component
    :param z: k component
    """

    __slots__ = ('w', 'x', 'y', 'z')

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.w = float(w)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    @classmethod
    def from_array(cls, a):
        a = numpy.asarray(a, dtype=float)
        if a.shape != (4,):
            raise ValueError('Quaternion needs exactly 4 components, got shape {}'.format(a.shape))
        return cls(*a)

    @classmethod
    def units(cls):
        """ The basis 1, i, j, k """
        return cls(1, 0, 0, 0), cls(0, 1, 0, 0), cls(0, 0, 1, 0), cls(0, 0, 0, 1)

    def to_array(self):
        return numpy.array([self.w, self.x, self.y, self.z])

    @property
    def real(self):
        return self.w

    def conj(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        return float(numpy.sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z))

    def inverse(self):
        n2 = self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
        if n2 == 0:
            raise ZeroDivisionError('zero quaternion has no inverse')
        c = self.conj()
        return Quaternion(c.w / n2, c.x / n2, c.y / n2, c.z / n2)

    def __add__(self, other):
        other = _coerce(other)
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, float, numpy.floating, numpy.integer)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        other = _coerce(other)
        return Quaternion.from_array(hamilton_product(self.to_array(), other.to_array()))

    def __rmul__(self, other):
        # only reals reach here, they commute
        return self * other

    def __eq__(self, other):
        if not isinstance(other, (Quaternion, int, float)):
            return NotImplemented
        other = _coerce(other)
        return (self.w, self.x, self.y, self.z) == (other.w, other.x, other.y, other.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __abs__(self):
        return self.norm()

    def __repr__(self):
        return 'Quaternion({!r}, {!r}, {!r}, {!r})'.format(self.w, self.x, self.y, self.z)


def _coerce(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float, numpy.floating, numpy.integer)):
        return Quaternion(value)
    raise TypeError('cannot combine Quaternion with {}'.format(type(value).__name__))
