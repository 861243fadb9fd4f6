# -*- coding: utf-8 -*-
#
# Sphinx configuration of the interferolab documentation.

import os
import sys
import warnings

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from interferolab import __version__

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.imgmath",
    "numpydoc",
    "sphinx_gallery.gen_gallery",
]

imgmath_image_format = 'svg'

# see https://github.com/numpy/numpydoc/issues/69
numpydoc_show_class_members = False

autodoc_default_options = {'members': True, 'inherited-members': True}
autosummary_generate = True
templates_path = ['_templates']

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', '_templates']

project = u'interferolab'
copyright = u'2026, interferolab developers'
version = __version__
release = __version__

pygments_style = 'sphinx'

# -- HTML output ----------------------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Single photon interference experiments and linear optics compilation',
    'page_width': '1300px',
    'body_max_width': '850px',
    'sidebar_width': '250px',
    'show_related': 'true',
    'show_relbar_bottom': 'true',
    'font_size': '15px',
    'code_font_size': '13px'
}
html_sidebars = {
    '**': ['about.html', 'navigation.html', 'relations.html', 'searchbox.html']
}
htmlhelp_basename = 'interferolabdoc'

# -- Cross references -----------------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/{.major}'.format(sys.version_info), None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/reference', None),
    'matplotlib': ('https://matplotlib.org/stable/', None),
    'sklearn': ('https://scikit-learn.org/stable', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
}

# -- Gallery of experiment scripts ----------------------------------------

# only plot_* scripts are executed, the others are long Monte Carlo runs
sphinx_gallery_conf = {
    'doc_module': 'interferolab',
    'examples_dirs': os.path.join('..', 'ExperimentScripts'),
    'gallery_dirs': 'auto_examples',
    'filename_pattern': r'/plot_',
    'backreferences_dir': os.path.join('generated'),
    'reference_url': {'interferolab': None},
}

warnings.filterwarnings("ignore", category=UserWarning,
                        message='Matplotlib is currently using agg, which is a'
                                ' non-GUI backend, so cannot show the figure.')
