#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Command line interface for exact tropical plane geometry.

Description
-----------
Every command takes its inputs as exact text: projective points as
[x,y,z], affine points as (x,y) in the selected chart, rationals as p/q
and -inf for the bottom element. Boolean commands exit with status 1 when
the answer is false; input errors exit with status 2 and mathematically
invalid requests (boundary points, collinear triples, invalid parameters)
with status 3.

Usage
-----
In order to run a command call:
    tropigeo [options] COMMAND [ARGS]

Available commands:
    det N MATRIX            tropical determinant and regularity of an
                            N x N matrix, e.g. det 2 "0,0;0,0"
    cross A B               tropical cross product A*B
    join A B                stable join of two points and its vertex
    meet L M                stable intersection of two lines
    incident Q L            does point Q lie on line L
    transversal A B         is there a unique line through A and B
    collinear A B C         do the points lie on one tropical line
    line L                  vertex, rays and boundary points of line L
    cramer MATRIX           Cramer's rule for n x (n+1) hyperplanes
    poly TERMS [POINT]      evaluate, homogenize and get the degree of
                            a polynomial, e.g. poly "1,0:0;0,1:0;0,0:0" "0,-5"
    classify A B C          classify a tropical triangle
    hexagon A B C           hexagon of a good triangle
    params LENGTHS          complete l1,l2,l3,l5 or validate l1..l6
    from-params LENGTHS [BASE]
                            transversal triangle of l1..l6 with a at BASE
    span U G1 G2 [G3]       is U tropically spanned by the generators
    independent P1 [P2..P4] are the points tropically independent
    improper-types          combinatorial types of improper good triangles
    tile LENGTHS REGION     tiling of x_min,x_max,y_min,y_max by the hexagon
                            of centrally symmetric l1..l6
    validate-tile FILE      validate a tiling written by tile --json
    render KIND ARGS        SVG figure; KIND is one of
                            points P1 [P2..], line L, triangle A B C,
                            tile LENGTHS REGION

Available options:
    -h | --help             prints this help message.

    -v | --verbose          prints debug messages.

    --chart x|y|z           chart used for affine points (default z)

    --json                  prints a JSON document instead of text

    --out FILE              writes the output to FILE

    --config FILE           settings file (default tropigeo.ini)

Use -- in front of arguments starting with a minus sign, e.g.
    tropigeo tile 1,1,1,1,1,1 -- -6,0,-6,0
'''


import sys
import getopt
import logging
import collections

from tropigeo import config, textio, svg
from tropigeo.core import TropPolynomial, trop_det, poly_eval, homogenize_and_degree
from tropigeo.plane import (chart_index, chart_extract, cross_product, stable_join, stable_intersection,
	incident, points_transversal, collinear, line_geometry, cramer_intersection)
from tropigeo.triangle import (TRANSVERSAL, GOOD_IMPROPER, HexParams, classify, hexagon_of, params_complete,
	triangle_from_params, span_membership, independent, enumerate_improper_types)
from tropigeo.tess import generate_tiling, validate_tiling
from tropigeo.errors import ParseError, DomainError


Options = collections.namedtuple('Options', 'chart json out config')

Output = collections.namedtuple('Output', 'text doc status')
'''Outcome of one command: the text output, the JSON document and the exit
status.'''

BOOLEAN = 1


def usage(stream=None):
	(stream or sys.stdout).write(__doc__ + '\n')


def _nargs(args, low, high=None):
	high = low if high is None else high
	if not low <= len(args) <= high:
		expected = str(low) if low == high else '%i to %i' % (low, high)
		raise ParseError("expected %s arguments, got %i" % (expected, len(args)))


def _affine(p, chart):
	'''Formats the point in chart coordinates when possible.'''
	q = chart_extract(chart, p)
	return textio.format_point(p if q is None else q)


def _flag(op, inputs, flag, witness=None):
	text = textio.format_flag(flag)
	return Output(text, textio.document(op, inputs, flag, witness), 0 if flag else BOOLEAN)


def _points(args, opts):
	return [textio.parse_point(a, opts.chart) for a in args]


def cmd_det(args, opts, cfg):
	_nargs(args, 2)
	try:
		n = int(args[0])
	except ValueError:
		raise ParseError("invalid dimension '%s'" % args[0])
	A = textio.parse_matrix(args[1], n)
	d = trop_det(A, cfg['max_n'])
	text = 'value=%s regular=%s' % (textio.format_scalar(d.value), textio.format_flag(d.regular))
	result = {'value': d.value, 'optimal_count': d.optimal_count, 'regular': d.regular}
	return Output(text, textio.document('det', {'n': n, 'matrix': A}, result, [list(s) for s in d.optimal]), 0)


def cmd_cross(args, opts, cfg):
	_nargs(args, 2)
	(a, b) = _points(args, opts)
	p = cross_product(a, b)
	return Output(textio.format_point(p), textio.document('cross', [a, b], p), 0)


def cmd_join(args, opts, cfg):
	_nargs(args, 2)
	(a, b) = _points(args, opts)
	L = stable_join(a, b)
	vertex = line_geometry(L, opts.chart).vertex
	text = '%s vertex=%s' % (textio.format_point(L), textio.format_point(vertex))
	return Output(text, textio.document('join', [a, b], {'line': L, 'vertex': vertex}), 0)


def cmd_meet(args, opts, cfg):
	_nargs(args, 2)
	(L, M) = [textio.parse_line(a) for a in args]
	p = stable_intersection(L, M)
	return Output(textio.format_point(p), textio.document('meet', [L, M], p), 0)


def cmd_incident(args, opts, cfg):
	_nargs(args, 2)
	q = textio.parse_point(args[0], opts.chart)
	L = textio.parse_line(args[1])
	return _flag('incident', [q, L], incident(q, L))


def cmd_transversal(args, opts, cfg):
	_nargs(args, 2)
	(a, b) = _points(args, opts)
	return _flag('transversal', [a, b], points_transversal(a, b))


def cmd_collinear(args, opts, cfg):
	_nargs(args, 3)
	points = _points(args, opts)
	return _flag('collinear', points, collinear(*points, max_n=cfg['max_n']))


def cmd_line(args, opts, cfg):
	_nargs(args, 1)
	L = textio.parse_line(args[0])
	g = line_geometry(L, opts.chart)
	text = 'vertex=%s rays=%s boundary=%s missing=%s' % (textio.format_point(g.vertex),
		','.join(name for (name, _) in g.ray_directions),
		','.join(textio.format_point(p) for p in g.boundary_points), textio.format_point(g.missing_point))
	result = {'vertex': g.vertex, 'rays': [name for (name, _) in g.ray_directions],
		'boundary_points': g.boundary_points, 'missing_point': g.missing_point}
	return Output(text, textio.document('line', L, result), 0)


def cmd_cramer(args, opts, cfg):
	_nargs(args, 1)
	A = textio.parse_matrix(args[0])
	r = cramer_intersection(A, cfg['max_n'])
	text = 'point=[%s] stable_equals_plain=%s' % (textio.format_list(r.point), textio.format_flag(r.stable_equals_plain))
	result = {'point': r.point, 'stable_equals_plain': r.stable_equals_plain}
	witness = [{'value': m.value, 'optimal_count': m.optimal_count, 'regular': m.regular} for m in r.minors]
	return Output(text, textio.document('cramer', A, result, witness), 0)


def parse_terms(text):
	'''Parses polynomial terms 'e1,e2:c;...', e.g. '1,0:0;0,1:0;0,0:0'.'''
	terms = {}
	for item in text.split(';'):
		if ':' not in item:
			raise ParseError("invalid term '%s', expected exponents:coefficient" % item)
		(exponents, coefficient) = item.split(':', 1)
		try:
			exponents = tuple(int(e) for e in exponents.split(',') if e.strip())
		except ValueError:
			raise ParseError("invalid exponents in term '%s'" % item)
		terms[exponents] = textio.parse_scalar(coefficient)
	sizes = set(len(e) for e in terms)
	if len(sizes) != 1:
		raise ParseError("terms of '%s' have different numbers of variables" % text)
	return TropPolynomial(sizes.pop(), terms)


def format_terms(p):
	return ';'.join('%s:%s' % (','.join(str(i) for i in e), textio.format_scalar(c))
		for (e, c) in sorted(p.terms.items(), reverse=True))


def cmd_poly(args, opts, cfg):
	_nargs(args, 1, 2)
	p = parse_terms(args[0])
	h = homogenize_and_degree(p)
	degree = 'none' if h.degree is None else str(h.degree)
	text = 'homogenized=%s degree=%s' % (format_terms(h.polynomial), degree)
	result = {'homogenized': format_terms(h.polynomial), 'degree': h.degree}
	if len(args) == 2:
		pt = textio.parse_list(args[1]) if args[1].strip() else []
		e = poly_eval(p, pt)
		text = 'value=%s attaining=%i on_variety=%s\n%s' % (textio.format_scalar(e.value), e.attaining_terms,
			textio.format_flag(e.on_variety), text)
		result.update({'value': e.value, 'attaining_terms': e.attaining_terms, 'on_variety': e.on_variety})
	return Output(text, textio.document('poly', args, result), 0)


def cmd_classify(args, opts, cfg):
	_nargs(args, 3)
	points = _points(args, opts)
	t = classify(*points)
	if t.kind == TRANSVERSAL:
		labeled = [points[i] for i in t.relabeling]
		text = '%s (%s)' % (t.kind, ' '.join('%s=%s' % (name, _affine(p, opts.chart)) for (name, p) in zip('abc', labeled)))
		witness = {'a': labeled[0], 'b': labeled[1], 'c': labeled[2]}
	elif t.kind == GOOD_IMPROPER:
		text = '%s pattern=%s' % (t.kind, t.pattern)
		witness = {'pattern': list(t.pattern)}
	else:
		text = '%s (%s)' % (t.kind, t.reason)
		witness = None
	return Output(text, textio.document('classify', points, t.kind, witness), 0)


def cmd_hexagon(args, opts, cfg):
	_nargs(args, 3)
	points = _points(args, opts)
	h = hexagon_of(points[0], points[1], points[2], opts.chart)
	text = 'vertices=%s lengths=%s' % (','.join(textio.format_point(v) for v in h.vertices), textio.format_list(h.lengths))
	result = {'vertices': h.vertices, 'lengths': h.lengths, 'labeling': list(h.labeling)}
	return Output(text, textio.document('hexagon', points, result), 0)


def _params(text):
	lengths = textio.parse_list(text, (4, 6))
	if len(lengths) == 4:
		return params_complete(*lengths)
	return HexParams(lengths)


def cmd_params(args, opts, cfg):
	_nargs(args, 1)
	P = _params(args[0])
	return Output(textio.format_list(P.lengths), textio.document('params', args[0], P.lengths), 0)


def cmd_from_params(args, opts, cfg):
	_nargs(args, 1, 2)
	P = _params(args[0])
	base = textio.parse_affine(args[1]) if len(args) == 2 else (0, 0)
	triangle = triangle_from_params(P, base, opts.chart)
	text = ' '.join('%s=%s' % (name, textio.format_point(p)) for (name, p) in zip('abc', triangle))
	return Output(text, textio.document('from-params', args, triangle), 0)


def cmd_span(args, opts, cfg):
	_nargs(args, 3, 4)
	points = _points(args, opts)
	r = span_membership(points[0], points[1:])
	text = 'member=%s' % textio.format_flag(r.member)
	if r.member:
		text += ' witness=%s' % textio.format_list(r.witness)
	return Output(text, textio.document('span', points, r.member, r.witness), 0 if r.member else BOOLEAN)


def cmd_independent(args, opts, cfg):
	_nargs(args, 1, 4)
	points = _points(args, opts)
	return _flag('independent', points, independent(points))


def cmd_improper_types(args, opts, cfg):
	_nargs(args, 0)
	r = enumerate_improper_types()
	lines = []
	for t in r.types:
		neighbours = ' '.join(str(p) for p in r.graph[t.pattern])
		lines.append('%s lengths=%s %s neighbours=%s' % (t.pattern, textio.format_list(t.lengths),
			' '.join('%s=%s' % (n, _affine(p, 3)) for (n, p) in zip('abc', t.triangle)), neighbours))
	for x in r.rejected:
		lines.append('%s rejected: %s' % (x.pattern, x.reason))
	lines.append('count=%i claimed=%i' % (r.count, r.claimed))
	result = {
		'count': r.count,
		'claimed': r.claimed,
		'types': [{'pattern': list(t.pattern), 'lengths': t.lengths, 'triangle': t.triangle,
			'neighbours': [list(p) for p in r.graph[t.pattern]]} for t in r.types],
	}
	witness = [{'pattern': list(x.pattern), 'reason': x.reason} for x in r.rejected]
	return Output('\n'.join(lines), textio.document('improper-types', [], result, witness), 0)


def cmd_tile(args, opts, cfg):
	_nargs(args, 2)
	P = _params(args[0])
	region = textio.parse_region(args[1])
	tiling = generate_tiling(P, region)
	lines = ['cells=%i u=%s v=%s' % (len(tiling.cells), textio.format_point(tiling.lattice_u), textio.format_point(tiling.lattice_v))]
	for cell in tiling.cells:
		lines.append('%i,%i %s' % (cell.index + (' '.join('%s=%s' % (n, _affine(p, 3)) for (n, p) in zip('abc', cell.triangle)),)))
	return Output('\n'.join(lines), textio.document('tile', args, textio.tiling_to_json(tiling)), 0)


def cmd_validate_tile(args, opts, cfg):
	_nargs(args, 1)
	(region, cells) = textio.tiling_from_json(textio.read_document(args[0]))
	report = validate_tiling(cells, region)
	checks = ('transversal', 'disjoint', 'sides', 'coverage', 'vertices')
	text = ' '.join('%s=%s' % (c, textio.format_flag(getattr(report, c))) for c in checks)
	if report.failures:
		text += '\n' + '\n'.join(report.failures)
	result = dict((c, getattr(report, c)) for c in checks)
	return Output(text, textio.document('validate-tile', args[0], result, report.failures), 0 if report.ok else BOOLEAN)


def cmd_render(args, opts, cfg):
	if not args:
		raise ParseError("render requires a kind: points, line, triangle or tile")
	(kind, args) = (args[0], args[1:])
	margin = textio.parse_scalar(cfg['margin'])
	style = cfg['style']
	if kind == 'points':
		if not args:
			raise ParseError("render points requires at least one point")
		scene = svg.points_scene(_points(args, opts), margin, style, opts.chart)
	elif kind == 'line':
		_nargs(args, 1)
		scene = svg.line_scene(textio.parse_line(args[0]), margin, style, opts.chart)
	elif kind == 'triangle':
		_nargs(args, 3)
		scene = svg.triangle_scene(*_points(args, opts), margin=margin, style=style, chart=opts.chart)
	elif kind == 'tile':
		_nargs(args, 2)
		scene = svg.tiling_scene(generate_tiling(_params(args[0]), textio.parse_region(args[1])), style)
	else:
		raise ParseError("unknown render kind '%s'" % kind)
	document = svg.render(scene, cfg['scale'], cfg['point_radius'])
	return Output(document.rstrip('\n'), None, 0)


COMMANDS = collections.OrderedDict([
	('det', cmd_det),
	('cross', cmd_cross),
	('join', cmd_join),
	('meet', cmd_meet),
	('incident', cmd_incident),
	('transversal', cmd_transversal),
	('collinear', cmd_collinear),
	('line', cmd_line),
	('cramer', cmd_cramer),
	('poly', cmd_poly),
	('classify', cmd_classify),
	('hexagon', cmd_hexagon),
	('params', cmd_params),
	('from-params', cmd_from_params),
	('span', cmd_span),
	('independent', cmd_independent),
	('improper-types', cmd_improper_types),
	('tile', cmd_tile),
	('validate-tile', cmd_validate_tile),
	('render', cmd_render),
])


def getopts(argv):
	'''Returns the options, the command and its arguments.'''
	(chart, json, out, fname, verbose, show_help) = (3, False, None, None, False, False)
	opts, args = getopt.gnu_getopt(argv, 'hv', ['help', 'verbose', 'chart=', 'json', 'out=', 'config='])
	for o, a in opts:
		if o in ('-h', '--help'):
			show_help = True
		elif o in ('-v', '--verbose'):
			verbose = True
		elif o == '--chart':
			try:
				chart = chart_index(a)
			except DomainError as err:
				raise getopt.GetoptError(str(err))
		elif o == '--json':
			json = True
		elif o == '--out':
			out = a
		elif o == '--config':
			fname = a
	return (Options(chart, json, out, fname), verbose, show_help, args)


def emit(output, opts):
	if output.doc is not None and opts.json:
		(text, highlight) = (textio.dumps(output.doc), True)
	else:
		(text, highlight) = (output.text, False)
	if opts.out:
		with open(opts.out, 'w') as f:
			textio.write(text, f)
		logging.debug("output written to '%s'" % opts.out)
	else:
		textio.write(text, sys.stdout, highlight)


def run(argv):
	'''Runs one command and returns its exit status.

	:param argv: command line arguments, without the program name
	:type argv: list
	'''
	try:
		(opts, verbose, show_help, args) = getopts(argv)
	except getopt.GetoptError as err:
		sys.stderr.write('error: %s\n' % err)
		usage(sys.stderr)
		return 2

	level = logging.DEBUG if verbose else logging.WARNING
	logging.basicConfig(level=level, format=' %(message)s')
	logging.getLogger().setLevel(level)

	if show_help:
		usage()
		return 0
	if not args or args[0] not in COMMANDS:
		sys.stderr.write('error: %s\n' % ("unknown command '%s'" % args[0] if args else 'no command given'))
		usage(sys.stderr)
		return 2

	try:
		cfg = config.get_config(opts.config)
		output = COMMANDS[args[0]](args[1:], opts, cfg)
		emit(output, opts)
	except ParseError as err:
		sys.stderr.write('error: %s\n' % err)
		return 2
	except DomainError as err:
		sys.stderr.write('error: %s\n' % err)
		return 3
	except (IOError, OSError) as err:
		sys.stderr.write('error: %s\n' % err)
		return 2
	return output.status


def main():
	sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
	main()
