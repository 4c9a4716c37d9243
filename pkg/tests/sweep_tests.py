"""
Unit tests for seeded sampling sweeps
"""
import unittest

from acscert.lie import EmbeddingFamily, sample_min_acs
from tests.base import BaseTestCase, slow


class SweepTestCase(BaseTestCase):

    SAMPLES = 10000

    def test_sp_bound(self):
        for n in (2, 3, 5):
            family = EmbeddingFamily.sp(n)
            sweep = sample_min_acs(family, self.SAMPLES, seed=n)
            assert sweep.maximum <= -1.0 / (4 * n + 4) + 1e-9, '{} respects its bound'.format(family.name)
            assert sweep.minimum <= sweep.maximum

    def test_grassmann_bound(self):
        for d, n in ((1, 2), (1, 3), (2, 4)):
            family = EmbeddingFamily.grassmannian(d, n)
            sweep = sample_min_acs(family, self.SAMPLES, seed=n)
            assert sweep.maximum <= -3.0 / (2 * (n + 1)) + 1e-9, '{} respects its bound'.format(family.name)

    def test_deterministic(self):
        family = EmbeddingFamily.su(4)
        first = sample_min_acs(family, 2500, seed=3, chunk_size=500, threads=1)
        second = sample_min_acs(family, 2500, seed=3, chunk_size=500, threads=4)
        assert (first.minimum, first.maximum) == (second.minimum, second.maximum)
        assert (first.witness[0].data == second.witness[0].data).all()
        other = sample_min_acs(family, 2500, seed=4, chunk_size=500, threads=1)
        assert other.minimum != first.minimum

    def test_strict_grassmann(self):
        family = EmbeddingFamily.grassmannian(1, 3)
        sweep = sample_min_acs(family, 500, seed=0, strict=True)
        assert sweep.maximum <= float(family.proven_bound()) + 1e-9
        assert sweep.samples == 500 and sweep.seed == 0

    def test_invalid_sample_count(self):
        with self.assertRaises(ValueError):
            sample_min_acs(EmbeddingFamily.su(3), 0)

    def test_su_five_negative(self):
        sweep = sample_min_acs(EmbeddingFamily.su(5), 10000, seed=0)
        assert sweep.samples == 10000
        assert sweep.maximum < 0, 'every sampled ACS of SU(5) is negative'

    @slow
    def test_su_below_eighteen(self):
        for n in range(2, 18):
            sweep = sample_min_acs(EmbeddingFamily.su(n), 100000, seed=n)
            assert sweep.maximum < 0, 'SU({})'.format(n)


if __name__ == "__main__":
    unittest.main()
