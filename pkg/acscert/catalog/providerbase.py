"""
Example family infrastructure / base classes for pluggable family providers
"""

import logging
import os
import re
import sys

import yaml

from acscert.errors import UnknownFamily, NoIsoparametricFamily
from acscert.isoparametric import Multiplicities
from .fkm import fkm_multiplicities

HOMOGENEOUS_REAL = 'homogeneous-real'
HOMOGENEOUS_COMPLEX = 'homogeneous-complex'
HOMOGENEOUS_QUATERNIONIC = 'homogeneous-quaternionic'
E6_ISOLATED = 'E6-isolated'
FKM = 'FKM'

KINDS = (HOMOGENEOUS_REAL, HOMOGENEOUS_COMPLEX, HOMOGENEOUS_QUATERNIONIC, E6_ISOLATED, FKM)

REGULAR_MINIMAL = 'regular-minimal'
FOCAL = 'focal-M+'

LEAVES = (REGULAR_MINIMAL, FOCAL)

# (m1, m2) of the homogeneous Stiefel families as functions of k
_HOMOGENEOUS = {
    HOMOGENEOUS_REAL: lambda k: (1, k - 2),
    HOMOGENEOUS_COMPLEX: lambda k: (2, 2 * k - 3),
    HOMOGENEOUS_QUATERNIONIC: lambda k: (4, 4 * k - 5),
}

_TAG = re.compile(r'^(?P<kind>[A-Za-z0-9-]+?)(?:\((?P<params>[^)]*)\))?/(?P<leaf>[A-Za-z+-]+)$')


class ExampleFamily(object):

    """ One isoparametric example, either its minimal regular leaf or its focal manifold M+.

    :param kind: One of KINDS
    :type kind: str

    :param parameters: k for the homogeneous families, m and k for FKM, nothing for E6
    :type parameters: dict

    :param leaf: REGULAR_MINIMAL or FOCAL
    :type leaf: str
    """

    def __init__(self, kind, parameters=None, leaf=REGULAR_MINIMAL):
        if kind not in KINDS:
            raise UnknownFamily('unknown family kind {!r}'.format(kind))
        if leaf not in LEAVES:
            raise UnknownFamily('unknown leaf {!r}, expected one of {}'.format(leaf, ', '.join(LEAVES)))
        self.kind = kind
        self.parameters = dict(parameters or {})
        self.leaf = leaf
        self.exceptional = False

        if kind in _HOMOGENEOUS:
            k = self._require('k')
            m1, m2 = _HOMOGENEOUS[kind](k)
            if k < 3:
                raise NoIsoparametricFamily('{} needs k >= 3, got k={}'.format(kind, k))
            # the focal manifold M+ collapses the first distribution
            self.focal_pair = (m1, m2)
        elif kind == E6_ISOLATED:
            self.parameters = {}
            m1, m2 = 6, 9
            self.focal_pair = (6, 9)
        else:
            m, k = self._require('m'), self._require('k')
            m1, m2, self.exceptional = fkm_multiplicities(m, k)
            # M+ is the Clifford-Stiefel variety, collapsing the distribution of multiplicity m
            self.focal_pair = (m, m1 + m2 - m)

        self.multiplicities = Multiplicities(m1, m2)

    def _require(self, name):
        try:
            return int(self.parameters[name])
        except (KeyError, TypeError, ValueError):
            raise UnknownFamily('{} needs an integer parameter {}'.format(self.kind, name))

    @property
    def tag(self):
        if self.parameters:
            params = ','.join('{}={}'.format(key, self.parameters[key]) for key in sorted(self.parameters))
            return '{}({})/{}'.format(self.kind, params, self.leaf)
        return '{}/{}'.format(self.kind, self.leaf)

    @classmethod
    def from_tag(cls, tag):
        """ Parses tags like homogeneous-quaternionic(k=3)/focal-M+ or FKM(k=2,m=4)/regular-minimal

        :rtype: ExampleFamily
        """
        match = _TAG.match(tag.strip())
        if not match:
            raise UnknownFamily('cannot parse family tag {!r}'.format(tag))
        parameters = {}
        for item in filter(None, (match.group('params') or '').split(',')):
            key, _, value = item.partition('=')
            if not value.strip().lstrip('-').isdigit():
                raise UnknownFamily('bad parameter {!r} in {!r}'.format(item, tag))
            parameters[key.strip()] = int(value)
        return cls(match.group('kind'), parameters, match.group('leaf'))

    def __eq__(self, other):
        return isinstance(other, ExampleFamily) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return 'ExampleFamily({!r})'.format(self.tag)


class _ProviderMeta(type):

    """ Metaclass is used for automagical registration of family providers (plugins) as soon as they subclass FamilyProvider
    """

    _registered = []

    def __init__(cls, name, bases, d):
        type.__init__(cls, name, bases, d)
        if cls.__module__ != globals()['__name__']:
            type(cls)._registered.append(cls)

    @classmethod
    def get_providers(mcs):
        """ Returns the currently registered provider classes
        :rtype: list
        """
        return mcs._registered


class FamilyLookupService(object):

    """ Service class / helper for fetching example families from the available/registered providers

    :param yaml_path: Absolute or relative path to the catalog configuration YAML file
    :type  yaml_path: str
    """

    def __init__(self, yaml_path=None):
        self.set_config_path(yaml_path)

    def set_config_path(self, yaml_path):
        if not yaml_path:
            root_dir = os.path.realpath(os.path.dirname(sys.argv[0]))
            yaml_path = os.path.join(root_dir, 'catalog_config.yaml')

        self.yaml_path = yaml_path
        self.providers = {}
        self.families = {}

    def _init_providers(self):
        """ Instantiate providers with the corresponding configurations from the YAML file
        """
        if not self.providers:
            with open(self.yaml_path, 'r') as f:
                config = yaml.safe_load(f) or {}

            for provider_class in _ProviderMeta.get_providers():
                self.providers[provider_class.__name__] = provider_class(config.get(provider_class.__name__))

    def _init_families(self):
        """ Fetch all families from the instantiated providers, in provider registration order
        """
        self._init_providers()
        if not self.families:
            for provider in self.providers.values():
                for family in provider.get_families():
                    self.families.setdefault(family.tag, family)
            logging.debug('Catalog: %d families from %d providers', len(self.families), len(self.providers))

    def get_families(self):
        """ Returns all configured families
        :rtype: list of ExampleFamily
        """
        self._init_families()
        return list(self.families.values())

    def by_tag(self, tag):
        """ Retrieve a family by its tag. Tags outside the configured ranges are parsed directly.

        :param tag: Family tag, e.g. FKM(k=3,m=4)/regular-minimal
        :type tag: str
        :rtype: ExampleFamily
        """
        self._init_families()
        family = self.families.get(tag)
        return family if family is not None else ExampleFamily.from_tag(tag)


class FamilyProvider(object, metaclass=_ProviderMeta):

    """ Abstract parent class for family providers.

    :param config: Configuration for the provider (its section of the YAML file)
    :type config: dict
    """

    def __init__(self, config):
        self.config = config or {}

    def leaves(self):
        return self.config.get('leaves', list(LEAVES))

    def get_families(self):
        """ Returns the families provided by this provider
        :rtype: list of ExampleFamily
        """
        raise NotImplementedError
