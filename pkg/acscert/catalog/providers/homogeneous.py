"""
Homogeneous examples: the three Stiefel-type families and the isolated E6 example
"""

import logging

from acscert.errors import NoIsoparametricFamily
from acscert.catalog.providerbase import FamilyProvider, ExampleFamily, E6_ISOLATED, HOMOGENEOUS_REAL, HOMOGENEOUS_COMPLEX, HOMOGENEOUS_QUATERNIONIC

_KEYS = {
    'real': HOMOGENEOUS_REAL,
    'complex': HOMOGENEOUS_COMPLEX,
    'quaternionic': HOMOGENEOUS_QUATERNIONIC,
}


class HomogeneousProvider(FamilyProvider):

    """ Config keys: real / complex / quaternionic as [k_min, k_max] (inclusive), e6 as a boolean, leaves as a list """

    def get_families(self):
        families = []
        for key, kind in sorted(_KEYS.items()):
            k_range = self.config.get(key)
            if not k_range:
                continue
            for k in range(k_range[0], k_range[1] + 1):
                for leaf in self.leaves():
                    try:
                        families.append(ExampleFamily(kind, {'k': k}, leaf))
                    except NoIsoparametricFamily as e:
                        logging.debug('Skipping %s k=%d: %s', kind, k, e)

        if self.config.get('e6', True):
            families += [ExampleFamily(E6_ISOLATED, leaf=leaf) for leaf in self.leaves()]
        return families
