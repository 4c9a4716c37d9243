"""
FKM families of Clifford systems over ranges of (m, k)
"""

import logging

from acscert.errors import NoIsoparametricFamily
from acscert.catalog.providerbase import FamilyProvider, ExampleFamily, FKM


class FkmProvider(FamilyProvider):

    """ Config keys: m and k as [min, max] (inclusive), leaves as a list. Pairs without a family are skipped. """

    def get_families(self):
        m_range = self.config.get('m', [1, 10])
        k_range = self.config.get('k', [1, 4])
        families = []
        for m in range(m_range[0], m_range[1] + 1):
            for k in range(k_range[0], k_range[1] + 1):
                for leaf in self.leaves():
                    try:
                        families.append(ExampleFamily(FKM, {'m': m, 'k': k}, leaf))
                    except NoIsoparametricFamily as e:
                        logging.debug('Skipping FKM m=%d k=%d: %s', m, k, e)
        return families
