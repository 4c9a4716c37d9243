"""
Unit tests for the family catalog (pluggable family providers) and the certifying conditions
"""
import os
import unittest

from acscert.catalog import ExampleFamily, FamilyLookupService, FamilyProvider, check_conditions
from acscert.catalog.providerbase import _ProviderMeta, E6_ISOLATED, FKM, FOCAL, HOMOGENEOUS_QUATERNIONIC, HOMOGENEOUS_REAL, \
    REGULAR_MINIMAL
from acscert.catalog.providers.homogeneous import HomogeneousProvider
from acscert.errors import NoIsoparametricFamily, UnknownFamily
from tests.base import BaseTestCase


original_providers = list(_ProviderMeta._registered)


class MockProvider(FamilyProvider):

    def get_families(self):
        return [ExampleFamily(FKM, {'m': m, 'k': k}, REGULAR_MINIMAL) for m, k in self.config['families']]


# registered on demand only, the shared service must not see it
_ProviderMeta._registered.remove(MockProvider)


class ProviderTestCase(BaseTestCase):

    def setUp(self):
        BaseTestCase.setUp(self)
        basedir = os.path.abspath(os.path.dirname(__file__))
        self.service = FamilyLookupService(os.path.join(basedir, 'mock_catalog_config.yaml'))
        _ProviderMeta._registered[:] = [MockProvider, HomogeneousProvider]

    def tearDown(self):
        BaseTestCase.tearDown(self)
        # restore
        _ProviderMeta._registered[:] = original_providers

    def test_registration(self):
        names = [c.__name__ for c in original_providers]
        assert 'HomogeneousProvider' in names and 'FkmProvider' in names, 'Should auto-register family providers'
        assert 'MockProvider' not in names

    def test_get_families(self):
        tags = [f.tag for f in self.service.get_families()]
        assert tags == ['FKM(k=9,m=6)/regular-minimal', 'FKM(k=2,m=2)/regular-minimal',
                        'homogeneous-quaternionic(k=3)/focal-M+', 'homogeneous-quaternionic(k=4)/focal-M+']
        for f in self.service.get_families():
            self.assertIsInstance(f, ExampleFamily, 'Returns ExampleFamily instances')

    def test_by_tag(self):
        family = self.service.by_tag('homogeneous-quaternionic(k=3)/focal-M+')
        assert family.focal_pair == (4, 7)
        # outside the configured ranges, parsed directly
        assert self.service.by_tag('E6-isolated/regular-minimal').multiplicities.as_tuple() == (6, 9)
        with self.assertRaises(UnknownFamily):
            self.service.by_tag('nonsense')


class ExampleFamilyTestCase(BaseTestCase):

    def test_tags_round_trip(self):
        for family in (ExampleFamily(FKM, {'m': 3, 'k': 2}, FOCAL), ExampleFamily(E6_ISOLATED),
                       ExampleFamily(HOMOGENEOUS_REAL, {'k': 7}, REGULAR_MINIMAL)):
            assert ExampleFamily.from_tag(family.tag) == family

    def test_multiplicities(self):
        assert ExampleFamily(HOMOGENEOUS_QUATERNIONIC, {'k': 10}).multiplicities.as_tuple() == (4, 35)
        fkm = ExampleFamily(FKM, {'m': 5, 'k': 1}, FOCAL)
        assert fkm.exceptional
        assert fkm.multiplicities.as_tuple() == (2, 5)
        assert fkm.focal_pair == (5, 2)

    def test_invalid_families(self):
        with self.assertRaises(UnknownFamily):
            ExampleFamily('homogeneous-octonionic', {'k': 3})
        with self.assertRaises(UnknownFamily):
            ExampleFamily(FKM, {'m': 3})
        with self.assertRaises(NoIsoparametricFamily):
            ExampleFamily(HOMOGENEOUS_REAL, {'k': 2})
        with self.assertRaises(NoIsoparametricFamily):
            ExampleFamily(FKM, {'m': 7, 'k': 1})


class ConditionsTestCase(BaseTestCase):

    def test_min_multiplicity(self):
        verdict = check_conditions(ExampleFamily(E6_ISOLATED))
        assert verdict.certified and verdict.criterion == 'min-multiplicity-at-least-5'
        assert verdict.bound < 0

    def test_m1_four_is_numeric(self):
        verdict = check_conditions(ExampleFamily(HOMOGENEOUS_QUATERNIONIC, {'k': 10}))
        assert verdict.certified and verdict.criterion == 'simplex-qp'
        assert verdict.numeric_threshold

    def test_m1_one_is_upper_bound(self):
        verdict = check_conditions(ExampleFamily(HOMOGENEOUS_REAL, {'k': 3}))
        assert verdict.upper_bound_semantics

    def test_clifford_stiefel_dimension(self):
        verdict = check_conditions(ExampleFamily(FKM, {'m': 3, 'k': 3}, FOCAL))
        assert verdict.certified and verdict.criterion == 'clifford-stiefel-dimension'
        verdict = check_conditions(ExampleFamily(FKM, {'m': 3, 'k': 2}, FOCAL))
        assert not verdict.certified and verdict.criterion == 'none'
        assert verdict.to_jsonable()['inequality'].startswith('k > (7m + 14) / (4 delta(m))')


if __name__ == "__main__":
    unittest.main()
