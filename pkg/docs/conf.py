# homcolor documentation build configuration file

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

# the numeric stack is not needed to render docstrings
from unittest import mock

MOCK_MODULES = ['numpy', 'scipy', 'scipy.sparse', 'scipy.sparse.csgraph', 'pandas', 'yaml']
for mod_name in MOCK_MODULES:
    sys.modules[mod_name] = mock.Mock()

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'homcolor'
copyright = u'2026, homcolor contributors'

with open(os.path.join(os.path.dirname(__file__), '..', 'VERSION')) as f:
    release = f.read().strip()
version = '.'.join(release.split('.')[:2])

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'homcolordoc'

man_pages = [
    ('index', 'homcolor', u'homcolor Documentation', [u'homcolor contributors'], 1)
]
