"""
Exceptions raised by the verification library
"""


class AcsError(Exception):

    """ Base class of every error raised on purpose by acscert """


class ShapeMismatch(AcsError, ValueError):

    """ Operands do not have compatible shapes """


class FieldMismatch(AcsError, ValueError):

    """ Operands live over different scalar fields (real, complex, quaternion) """


class ConstraintViolation(AcsError, ValueError):

    """ A tangent pair does not satisfy its unit length / orthogonality constraints

    :param violation: Largest constraint defect that was measured
    :type violation: float
    """

    def __init__(self, message, violation=None):
        super(ConstraintViolation, self).__init__(message)
        self.violation = violation


class NonConcaveProgram(AcsError, ValueError):

    """ The quadratic part of a simplex program has a positive eigenvalue

    :param eigenvalue: The offending eigenvalue
    :type eigenvalue: float
    """

    def __init__(self, message, eigenvalue=None):
        super(NonConcaveProgram, self).__init__(message)
        self.eigenvalue = eigenvalue


class DegenerateSample(AcsError):

    """ The sampler kept drawing degenerate pairs and gave up """


class NoIsoparametricFamily(AcsError, ValueError):

    """ Parameters do not define an isoparametric family (e.g. l - m - 1 < 1) """


class UnknownFamily(AcsError, KeyError):

    """ No catalog family is registered under the requested tag """

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class InvalidParameter(AcsError, ValueError):

    """ A parameter lies outside the domain of the operation (dimension, multiplicity, sample count, ...) """
