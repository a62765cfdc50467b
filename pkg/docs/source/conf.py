# -*- coding: utf-8 -*-
#
# pyRacah documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# make the package importable without installing it
sys.path.insert(0, os.path.abspath('../..'))

numpydoc_class_members_toctree = False

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.doctest',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.autosummary',
    'numpydoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyRacah'
copyright = u'2015, David R. Pugh'
author = u'David R. Pugh'

version = '0.1'
release = '0.1.0'

exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'pyRacahdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  (master_doc, 'pyRacah.tex', u'pyRacah Documentation',
   u'David R. Pugh', 'manual'),
]

man_pages = [
    (master_doc, 'pyracah', u'pyRacah Documentation',
     [author], 1)
]

texinfo_documents = [
  (master_doc, 'pyRacah', u'pyRacah Documentation',
   author, 'pyRacah', 'Racah submodule lattices of DAHA modules.',
   'Miscellaneous'),
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
