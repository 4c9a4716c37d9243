"""
"p/q" strings for exact rationals in reports
"""

from fractions import Fraction

from acscert.errors import InvalidParameter


def format_rational(value):
    """ Fraction (or int) as "p/q", integers as "p/1" """
    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


def parse_rational(text):
    """ Inverse of format_rational

    :rtype: fractions.Fraction
    """
    numerator, sep, denominator = text.partition('/')
    if not sep:
        raise InvalidParameter('expected "p/q", got {!r}'.format(text))
    return Fraction(int(numerator), int(denominator))
