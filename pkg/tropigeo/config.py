#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Settings for the *tropigeo* kernel and renderer.

Description
-----------
Settings are read from an INI file (default *tropigeo.ini* in the current
working directory) using following syntax::

    [kernel]
    max_n = 8

    [render]
    scale = 40
    margin = 1
    point_radius = 3
    line = stroke:#1f77b4;stroke-width:1.5;fill:none

The permanent dimension bound *max_n* can also be set using the environment
variable *TROPIGEO_MAX_N*, which takes precedence over the INI file. The
bound for tropical Cramer's rule is always one less than *max_n*, so that
every square minor stays within the permanent bound.
'''


import os
import logging
try:
	import ConfigParser as configparser
except ImportError:
	import configparser

from tropigeo.errors import ParseError


TROPIGEO_INI = 'tropigeo.ini'
TROPIGEO_ENV = 'TROPIGEO_MAX_N'
DEFAULT_MAX_N = 8

RENDER_SCALE = 40
RENDER_MARGIN = '1'
RENDER_POINT_RADIUS = 3

RENDER_STYLE = {
	'point': (('fill', '#000000'), ('stroke', 'none')),
	'line': (('stroke', '#1f77b4'), ('stroke-width', '1.5'), ('fill', 'none')),
	'polygon': (('stroke', '#d62728'), ('stroke-width', '1.5'), ('fill', '#d62728'), ('fill-opacity', '0.15')),
	'tile': (('stroke', '#2ca02c'), ('stroke-width', '1'), ('fill', '#2ca02c'), ('fill-opacity', '0.10')),
}


def to_bound(value, origin):
	'''Converts a textual setting (e.g. a dimension bound) into a positive integer.

	:param value: textual bound, e.g. '8'
	:type value: str
	:param origin: where the value came from, used in error messages
	:type origin: str
	'''
	try:
		bound = int(str(value).strip())
	except ValueError:
		raise ParseError("%s: expected an integer, got '%s'" % (origin, value))
	if bound < 1:
		raise ParseError("%s: expected a positive integer, got %s" % (origin, bound))
	return bound


def max_n(value=None):
	'''Returns the permanent dimension bound to be used by the kernel.

	An explicit *value* wins; otherwise the environment variable
	*TROPIGEO_MAX_N* is consulted and finally the built-in default (8).

	:param value: explicit bound or None
	:type value: int
	'''
	if value is not None:
		return to_bound(value, 'max_n')
	env = os.environ.get(TROPIGEO_ENV)
	if env:
		return to_bound(env, TROPIGEO_ENV)
	return DEFAULT_MAX_N


def cramer_bound(value=None):
	'''Returns the largest number of hyperplanes accepted by Cramer's rule.'''
	return max_n(value) - 1


def get_style(text):
	'''Parses a style specification, e.g. 'stroke:#000;fill:none', into a
	tuple of (attribute, value) pairs; order is preserved.
	'''
	style = []
	for item in [s for s in text.split(';') if s.strip()]:
		if ':' not in item:
			raise ParseError("invalid style item '%s', expected attr:value" % item)
		(attr, value) = item.split(':', 1)
		style.append((attr.strip(), value.strip()))
	return tuple(style)


def get_config(fname=None):
	'''Returns a dictionary containing the settings read from the given INI
	file, completed with defaults. The environment variable *TROPIGEO_MAX_N*
	overrides the *max_n* setting of the file.

	:param fname: complete path to the configuration file
	:type fname: str
	'''
	explicit = bool(fname)
	if not fname:
		fname = TROPIGEO_INI

	config = {
		'ini': fname,
		'max_n': DEFAULT_MAX_N,
		'scale': RENDER_SCALE,
		'margin': RENDER_MARGIN,
		'point_radius': RENDER_POINT_RADIUS,
		'style': dict(RENDER_STYLE),
	}

	c = configparser.ConfigParser()
	if not os.path.exists(fname):
		log = logging.warning if explicit else logging.debug
		log("config file '%s' not found, using defaults" % fname)
	else:
		c.read(fname)

	if c.has_option('kernel', 'max_n'):
		config['max_n'] = to_bound(c.get('kernel', 'max_n'), fname)
	if c.has_option('render', 'scale'):
		config['scale'] = to_bound(c.get('render', 'scale'), fname)
	if c.has_option('render', 'margin'):
		config['margin'] = c.get('render', 'margin').strip()
	if c.has_option('render', 'point_radius'):
		config['point_radius'] = to_bound(c.get('render', 'point_radius'), fname)
	for kind in RENDER_STYLE.keys():
		if c.has_option('render', kind):
			config['style'][kind] = get_style(c.get('render', kind))

	env = os.environ.get(TROPIGEO_ENV)
	if env:
		config['max_n'] = to_bound(env, TROPIGEO_ENV)
	return config
