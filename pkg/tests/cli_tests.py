"""
Tests of the command line front end
"""
import io
import json
import unittest
from unittest import mock

import manager
from acscert import api
from acscert.errors import AcsError, InvalidParameter
from tests.base import BaseTestCase


class CliTestCase(BaseTestCase):

    def invoke(self, *argv):
        stream = io.StringIO()
        code = manager.main(['--config', 'testing'] + list(argv), stream)
        return code, stream.getvalue()

    def invoke_json(self, *argv):
        code, out = self.invoke(*(list(argv) + ['--format', 'json']))
        return code, [json.loads(line) for line in out.splitlines()]

    def test_constants(self):
        code, (obj, ) = self.invoke_json('constants', '--dim', '4')
        assert code == 0
        assert obj['index_constants'] == {'acs': '1/6', 'robust': '1/91', 'ambient_dim': 4}
        assert obj['verdict'] is None
        assert obj['solver_stats']['veronese_dim'] == 14 and obj['solver_stats']['identity_holds']

        code, (obj, ) = self.invoke_json('constants', '--dim', '2')
        assert obj['index_constants']['robust'] == '1/10'

    def test_isoparametric(self):
        code, (obj, ) = self.invoke_json('isoparametric', '--m1', '6', '--m2', '9')
        assert code == 0
        assert obj['verdict'] == 'certified-negative' and obj['method'] == 'simplex-qp'
        assert obj['acs_value_or_bound'] < 0
        assert obj['index_constants']['ambient_dim'] == 32 and obj['index_constants']['acs'] == '1/496'

    def test_isoparametric_text(self):
        code, out = self.invoke('isoparametric', '--m1', '6', '--m2', '9', '--format', 'text')
        assert code == 0
        assert 'certified-negative' in out and '1/496' in out

    def test_focal(self):
        code, (obj, ) = self.invoke_json('isoparametric', '--m1', '1', '--m2', '4', '--focal')
        assert code == 0, obj
        assert obj['method'] == 'closed-form-bound' and obj['criterion'] == 'focal-multiplicity-gap'

        code, (obj, ) = self.invoke_json('isoparametric', '--m1', '4', '--m2', '5', '--focal')
        assert code == 3
        assert obj['verdict'] == 'upper-bound-only'

    def test_group_witness(self):
        code, (obj, ) = self.invoke_json('group', '--kind', 'su', '--n', '20', '--samples', '100')
        assert code == 2
        assert obj['verdict'] == 'positive-witness-found' and obj['method'] == 'explicit-witness'
        self.assertAlmostEqual(obj['acs_value_or_bound'], 1 / 3200, places=12)

    def test_group_deterministic(self):
        argv = ('group', '--kind', 'sp', '--n', '2', '--samples', '200', '--seed', '1', '--format', 'json')
        first, second = self.invoke(*argv), self.invoke(*argv)
        assert first == second
        obj = json.loads(first[1])
        assert first[0] == 0
        assert obj['seed'] == 1 and obj['samples'] == 200
        assert obj['solver_stats']['bound_respected']

    def test_sampling_only(self):
        code, (obj, ) = self.invoke_json('grassmannian', '--d', '1', '--n', '3', '--samples', '200', '--sampling-only')
        assert code == 3
        assert obj['verdict'] == 'inconclusive' and obj['method'] == 'sampling'

    def test_usage_errors(self):
        for argv in (['group', '--kind', 'so', '--n', '3'],
                     ['isoparametric', '--m1', '9', '--m2', '6'],
                     ['isoparametric', '--m1', '6', '--m2', '9', '--bogus'],
                     ['isoparametric', '--m1', '6', '--m2', '9', '--grid-step', '0.01'],
                     ['constants', '--dim', '0'],
                     []):
            code, out = self.invoke(*argv)
            assert code == 1, argv
            assert out == '', argv

    def test_parameter_errors_are_usage_errors(self):
        code, out = self.invoke('isoparametric', '--m1', '5', '--m2', '5', '--oracle', '--grid-step', '0.5')
        assert code == 1 and out == ''
        code, out = self.invoke('grassmannian', '--d', '3', '--n', '3')
        assert code == 1 and out == ''
        assert issubclass(InvalidParameter, AcsError) and issubclass(InvalidParameter, ValueError)

    def test_internal_errors_propagate(self):
        with mock.patch.object(api, 'constants', side_effect=ValueError('broken')):
            with self.assertRaises(ValueError):
                self.invoke('constants', '--dim', '4')

    def test_catalog_family(self):
        code, (obj, ) = self.invoke_json('catalog', '--family', 'FKM(k=2,m=3)/focal-M+')
        assert code == 3
        assert obj['verdict'] == 'upper-bound-only'

        code, (obj, ) = self.invoke_json('catalog', '--family', 'FKM(k=3,m=3)/focal-M+')
        assert code == 0
        assert obj['criterion'] == 'clifford-stiefel-dimension'

    def test_catalog_unknown_family(self):
        code, _ = self.invoke('catalog', '--family', 'Nothing(k=1)/focal-M+')
        assert code == 1

    def test_clifford(self):
        code, (obj, ) = self.invoke_json('clifford', '--m', '3', '--k', '3')
        assert code == 0
        assert obj['solver_stats']['relations_hold']

        code, (obj, ) = self.invoke_json('clifford', '--m', '7', '--k', '1')
        assert code == 3
        assert obj['verdict'] == 'inconclusive'


if __name__ == "__main__":
    unittest.main()
