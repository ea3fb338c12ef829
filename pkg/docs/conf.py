#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# stegrle documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import stegrle

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc'
             , 'sphinx.ext.viewcode'
             , 'sphinx_click.ext'
             ]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'stegrle'
copyright = u"2026, first-name last-name"
author = u"first-name last-name"

version = stegrle.__version__
release = stegrle.__version__

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'stegrledoc'

# -- Options for LaTeX / man output ------------------------------------

latex_documents = [
    (master_doc, 'stegrle.tex',
     u'stegrle Documentation',
     u'first-name last-name', 'manual'),
]

man_pages = [
    (master_doc, 'stegrle',
     u'stegrle Documentation',
     [author], 1)
]
