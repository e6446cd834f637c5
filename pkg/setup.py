#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import os
from setuptools import setup
import tropigeo


here = os.path.abspath(os.path.dirname(__file__))


with open(os.path.join(here,'README.rst')) as f:
	long_description = f.read()


setup(
	name = "tropigeo",
	version = tropigeo.version,
	description = "Exact tropical plane geometry: lines, triangles, hexagons and tilings",
	long_description = long_description,
	packages = ["tropigeo"],
	install_requires = ["pygments", "chardet", "jinja2"],
	extras_require = {
		'test': ["pytest", "hypothesis"],
	},
	license = 'MIT',
	keywords = ["tropical geometry", "max-plus", "tropical triangle", "tropical determinant", "tiling", "svg"],
	platforms = 'any',
	entry_points = {
		'console_scripts': [
			['tropigeo = tropigeo.cli:main'],
		],
	},
	classifiers = [
		"Development Status :: 4 - Beta",
		"Environment :: Console",
		"Intended Audience :: Science/Research",
		"Intended Audience :: Education",
		"License :: OSI Approved :: MIT License",
		"Operating System :: OS Independent",
		"Programming Language :: Python :: 3",
		"Topic :: Scientific/Engineering :: Mathematics",
		"Topic :: Utilities",
	],
)

