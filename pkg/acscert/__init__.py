"""
Library setup

Verification of the ACS quantity for isoparametric hypersurfaces, their focal manifolds,
FKM families and the equivariant embeddings of SU(n), Sp(n) and quaternionic Grassmannians.
"""

import os

import config

__version__ = '0.3.0'

basedir = config.basedir
appdir = os.path.abspath(os.path.dirname(__file__))

current_config = config.config['default']


def create_app(config_name=None):
    """ Activates a configuration (see config.py) and initializes logging.

    :param config_name: Key of config.config, CONFIG_TYPE if omitted
    :type config_name: str
    :return: The effective configuration class
    """
    global current_config
    eff_config = config.config[config_name or config.CONFIG_TYPE]
    eff_config.init_app()
    current_config = eff_config

    from acscert import catalog
    catalog.set_config_path(os.path.join(basedir, 'catalog_config.yaml'))

    return eff_config
