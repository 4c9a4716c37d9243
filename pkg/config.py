"""
Parse configuration & init different behavior based on CONFIG_TYPE
"""

import configparser
import logging
import os
import sys

basedir = os.path.abspath(os.path.dirname(__file__))

config_ini = configparser.ConfigParser()
# shipped defaults first, local config.ini overrides whatever it sets
config_ini.read([os.path.join(basedir, 'sample_config.ini'), os.path.join(basedir, 'config.ini')])


CONFIG_TYPE = os.getenv('ACS_CERT_CONFIG') or config_ini.get('GENERAL', 'CONFIG_TYPE', fallback='default')

QP_SECTION = 'QP'
SAMPLING_SECTION = 'SAMPLING'
MINIMIZER_SECTION = 'MINIMIZER'


def thread_count():
    """ Number of worker threads allowed for internal parallelism (ACS_CERT_THREADS, default: CPU count)
    :rtype: int
    """
    value = os.getenv('ACS_CERT_THREADS')
    try:
        return max(1, int(value)) if value else max(1, os.cpu_count() or 1)
    except ValueError:
        logging.warning('Ignoring invalid ACS_CERT_THREADS=%r', value)
        return max(1, os.cpu_count() or 1)


class Config(object):
    APP_LOG_FORMAT = config_ini.get('GENERAL', 'LOG_FORMAT', raw=True, fallback='%(levelname)s %(name)s: %(message)s')
    APP_LOG_LEVEL = logging.INFO

    APP_QP_CONCAVITY_TOLERANCE = config_ini.getfloat(QP_SECTION, 'CONCAVITY_TOLERANCE', fallback=1e-10)
    APP_QP_PIVOT_TOLERANCE = config_ini.getfloat(QP_SECTION, 'PIVOT_TOLERANCE', fallback=1e-12)
    APP_QP_RESIDUAL_TOLERANCE = config_ini.getfloat(QP_SECTION, 'RESIDUAL_TOLERANCE', fallback=1e-9)
    APP_QP_FEASIBILITY_TOLERANCE = config_ini.getfloat(QP_SECTION, 'FEASIBILITY_TOLERANCE', fallback=1e-12)
    APP_QP_GRID_STEP = config_ini.getfloat(QP_SECTION, 'GRID_STEP', fallback=0.005)

    APP_SAMPLING_SAMPLES = config_ini.getint(SAMPLING_SECTION, 'SAMPLES', fallback=10000)
    APP_SAMPLING_SEED = config_ini.getint(SAMPLING_SECTION, 'SEED', fallback=0)
    APP_SAMPLING_MAX_RETRIES = config_ini.getint(SAMPLING_SECTION, 'MAX_RETRIES', fallback=16)
    APP_SAMPLING_CHUNK_SIZE = config_ini.getint(SAMPLING_SECTION, 'CHUNK_SIZE', fallback=1000)

    APP_MINIMIZER_RESTARTS = config_ini.getint(MINIMIZER_SECTION, 'RESTARTS', fallback=32)
    APP_MINIMIZER_DESCENT_TOLERANCE = config_ini.getfloat(MINIMIZER_SECTION, 'DESCENT_TOLERANCE', fallback=1e-10)
    APP_MINIMIZER_SEARCH_SAMPLES = config_ini.getint(MINIMIZER_SECTION, 'SEARCH_SAMPLES', fallback=2000)

    APP_REPORT_FORMAT = config_ini.get('REPORT', 'FORMAT', fallback='text')

    @classmethod
    def init_app(cls):
        # stdout carries the report, everything else goes to stderr
        root = logging.getLogger()
        if not root.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(cls.APP_LOG_FORMAT))
            root.addHandler(handler)
        root.setLevel(cls.APP_LOG_LEVEL)


class DevelopmentConfig(Config):
    DEBUG = True
    APP_LOG_LEVEL = logging.DEBUG


class TestingConfig(Config):
    DEBUG = False
    APP_LOG_LEVEL = logging.WARNING


class ProductionConfig(Config):
    DEBUG = False


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': ProductionConfig
}
