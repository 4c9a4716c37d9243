"""
Test Base
"""

import functools
import os
import unittest

import numpy

import acscert

RUN_SLOW = os.getenv('ACS_CERT_SLOW_TESTS')


def slow(test):
    """ Decorator for skipping long sweeps unless ACS_CERT_SLOW_TESTS is set """
    @functools.wraps(test)
    def wrapper(*a, **k):
        if RUN_SLOW:
            return test(*a, **k)
        raise unittest.SkipTest('set ACS_CERT_SLOW_TESTS to run')

    return wrapper


class BaseTestCase(unittest.TestCase):

    SEED = 20240601

    def setUp(self):
        self.config = acscert.create_app('testing')
        self.rng = numpy.random.default_rng(self.SEED)

    def tearDown(self):
        pass
