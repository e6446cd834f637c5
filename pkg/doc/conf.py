#!/usr/bin/env python
# -*- coding: utf-8 -*-

import sys, os
import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath('..'))
import tropigeo


AUTHOR = 'tropigeo developers'
YEAR = '2026'
VERSION = tropigeo.version


extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']
source_suffix = '.rst'
master_doc = 'index'
project = u'tropigeo'
copyright = u'%s, %s' % (YEAR, AUTHOR)
version = '%s' % (VERSION)
release = '%s' % (VERSION)
exclude_patterns = ['_build']
pygments_style = 'sphinx'

rst_epilog = '.. |pkg_version| replace:: %s' % (VERSION)


#----------------------------------------------------------------
html_title = "Tropigeo %s" % (VERSION)
html_short_title = "Tropigeo"
html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_last_updated_fmt = '%b %d, %Y'
htmlhelp_basename = 'tropigeodoc'
