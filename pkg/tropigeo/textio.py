#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Parsing and formatting of exact tropical values.

Description
-----------
Text syntax used on the command line and in reports:

=================  ====================================
value              syntax
=================  ====================================
scalar             ``3``, ``-1/2``, ``0.25``, ``-inf``
projective point   ``[x,y,z]`` (printed canonically)
affine point       ``(x,y)``
matrix             ``r11,r12;r21,r22``
lengths            ``l1,l2,l3,l4,l5,l6``
region             ``x_min,x_max,y_min,y_max``
=================  ====================================

Structured output is a JSON document ``{"op", "inputs", "result",
"witness"}`` in which every rational is written as a string. When written to
a terminal the document is highlighted using pygments; documents read from
files are decoded using the encoding detected by chardet.
'''


import sys
import json
import logging
from fractions import Fraction

import chardet
import pygments
from pygments.lexers import JsonLexer
from pygments.formatters import TerminalFormatter

from tropigeo.core import NEG_INF, scalar, TropMatrix
from tropigeo.plane import AffinePoint, ProjPoint, TropLine, chart_embed
from tropigeo.tess import Region
from tropigeo.errors import ParseError


def parse_scalar(text):
	'''Parses a decimal, a rational 'p/q' or '-inf'.'''
	return scalar(str(text))


def parse_list(text, count=None):
	'''Parses comma separated scalars, optionally checking their number.'''
	items = [s for s in text.split(',')]
	if any(not s.strip() for s in items):
		raise ParseError("empty entry in '%s'" % text)
	values = [parse_scalar(s) for s in items]
	if count is not None and len(values) not in (count if isinstance(count, tuple) else (count,)):
		raise ParseError("expected %s values in '%s', got %i" % (count, text, len(values)))
	return values


def _strip(text, opening, closing):
	text = text.strip()
	if not (text.startswith(opening) and text.endswith(closing)):
		raise ParseError("expected %s...%s, got '%s'" % (opening, closing, text))
	return text[1:-1]


def parse_point(text, chart=3):
	'''Parses a projective point '[x,y,z]' or an affine point '(x,y)'; the
	latter is embedded into the projective plane using chart.

	:returns: ProjPoint
	'''
	text = text.strip()
	if text.startswith('['):
		return ProjPoint(parse_list(_strip(text, '[', ']'), 3))
	if text.startswith('('):
		return chart_embed(chart, parse_list(_strip(text, '(', ')'), 2))
	raise ParseError("invalid point '%s', expected [x,y,z] or (x,y)" % text)


def parse_affine(text):
	'''Parses '(x,y)'; the parentheses may be omitted.'''
	text = text.strip()
	if text.startswith('('):
		text = _strip(text, '(', ')')
	return AffinePoint(*parse_list(text, 2))


def parse_line(text):
	'''Parses the coefficient vector '[a,b,c]' of a tropical line.'''
	return TropLine(parse_list(_strip(text, '[', ']'), 3))


def parse_matrix(text, rows=None):
	'''Parses a matrix 'r11,r12;r21,r22'.'''
	matrix = TropMatrix([parse_list(row) for row in text.split(';')])
	if rows is not None and matrix.rows != rows:
		raise ParseError("expected %i rows in '%s', got %i" % (rows, text, matrix.rows))
	return matrix


def format_scalar(x):
	if x is NEG_INF:
		return '-inf'
	x = Fraction(x)
	if x.denominator == 1:
		return str(x.numerator)
	return '%i/%i' % (x.numerator, x.denominator)


def format_list(values):
	return ','.join(format_scalar(x) for x in values)


def format_point(p):
	'''Formats projective points as '[x,y,z]', affine ones as '(x,y)'.'''
	if isinstance(p, ProjPoint):
		return '[%s]' % format_list(p.coords)
	if isinstance(p, TropLine):
		return '[%s]' % format_list(p.coeffs.coords)
	return '(%s)' % format_list(p)


def format_matrix(A):
	return ';'.join(format_list(row) for row in A.entries)


def format_flag(flag):
	return 'true' if flag else 'false'


def to_json(value):
	'''Converts kernel values into JSON compatible objects; rationals
	become strings, plain integers (counts, indices) stay numbers.
	'''
	if value is None or isinstance(value, (bool, int, str)):
		return value
	if value is NEG_INF or isinstance(value, Fraction):
		return format_scalar(value)
	if isinstance(value, ProjPoint):
		return [format_scalar(c) for c in value.coords]
	if isinstance(value, TropLine):
		return [format_scalar(c) for c in value.coeffs.coords]
	if isinstance(value, TropMatrix):
		return [[format_scalar(c) for c in row] for row in value.entries]
	if isinstance(value, dict):
		return dict((str(k), to_json(v)) for (k, v) in value.items())
	if isinstance(value, (list, tuple, set, frozenset)):
		return [to_json(v) for v in value]
	return str(value)


def document(op, inputs, result, witness=None):
	'''Returns the structured output of one operation.'''
	return {'op': op, 'inputs': to_json(inputs), 'result': to_json(result), 'witness': to_json(witness)}


def dumps(doc):
	return json.dumps(doc, indent=2, sort_keys=True)


def write(text, stream=None, highlight=False):
	'''Writes text to stream (default stdout); JSON text written to a
	terminal is highlighted.
	'''
	stream = stream or sys.stdout
	if highlight and hasattr(stream, 'isatty') and stream.isatty():
		text = pygments.highlight(text, JsonLexer(), TerminalFormatter())
		stream.write(text)
	else:
		stream.write(text + '\n')


def read_text(fname):
	'''Reads a text file of unknown encoding.'''
	try:
		with open(fname, 'rb') as f:
			s = f.read()
	except (IOError, OSError) as err:
		raise ParseError("cannot read '%s': %s" % (fname, err))
	encoding = chardet.detect(s)['encoding'] or 'utf-8'
	logging.debug("reading '%s' using encoding %s" % (fname, encoding))
	try:
		return s.decode(encoding)
	except (UnicodeDecodeError, LookupError):
		raise ParseError("cannot decode '%s' as %s" % (fname, encoding))


def read_document(fname):
	'''Reads a JSON document written using :func:`dumps`.'''
	try:
		return json.loads(read_text(fname))
	except ValueError as err:
		raise ParseError("invalid JSON in '%s': %s" % (fname, err))


def parse_region(text):
	'''Parses a region 'x_min,x_max,y_min,y_max'.'''
	return Region(*parse_list(text, 4))


def tiling_to_json(tiling):
	'''Returns the JSON result object describing a tiling.'''
	return {
		'params': to_json(tiling.params.lengths),
		'region': to_json(tiling.region.bounds()),
		'lattice_u': to_json(tiling.lattice_u),
		'lattice_v': to_json(tiling.lattice_v),
		'cells': [{
			'index': list(cell.index),
			'hexagon': to_json(cell.hexagon.vertices),
			'triangle': to_json(cell.triangle),
		} for cell in tiling.cells],
	}


def tiling_from_json(doc):
	'''Returns the region and the (hexagon, triangle) cells stored in a
	document written by the tile command.
	'''
	try:
		result = doc['result'] if 'result' in doc else doc
		region = Region(*[parse_scalar(x) for x in result['region']])
		cells = []
		for cell in result['cells']:
			hexagon = [tuple(parse_scalar(x) for x in p) for p in cell['hexagon']]
			triangle = [ProjPoint([parse_scalar(x) for x in p]) for p in cell['triangle']]
			cells.append((hexagon, triangle))
	except (KeyError, TypeError) as err:
		raise ParseError("malformed tiling document: %s" % err)
	return (region, cells)
