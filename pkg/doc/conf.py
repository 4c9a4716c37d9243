# -*- coding: utf-8 -*-
#
# acscert documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

basedir = os.path.abspath(os.path.dirname(__file__))
sys.path.append(os.path.dirname(basedir))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'acscert'
copyright = '2026, acscert developers'

from acscert import __version__ as version  # noqa: E402
release = version

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'

html_static_path = ['_static']

autodoc_member_order = 'bysource'
