#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Renders points, tropical lines, hexagons and tilings as SVG figures.

Description
-----------
A :class:`Scene` collects labeled elements together with an explicit
viewport (a :class:`~tropigeo.tess.Region`). Tropical lines are drawn as
their three rays from the vertex towards West, South and North-East, clipped
to the viewport. The y-axis points upwards: a point (x, y) is drawn at
((x - x_min) * scale, (y_max - y) * scale).

Rendering is deterministic; the same scene always produces the same
document, coordinates are written as exact decimals with at most four
digits after the point.
'''


import logging
from fractions import Fraction

from jinja2 import Template

from tropigeo import config, polygon
from tropigeo.core import scalar
from tropigeo.plane import (DEFAULT_CHART, is_interior, require_interior, line_geometry, line, stable_join,
	chart_extract)
from tropigeo.tess import Region
from tropigeo.triangle import TRANSVERSAL, GOOD_IMPROPER, classify, hexagon_of
from tropigeo.errors import DomainError


SVG_DOCUMENT = \
'''<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{{ width }}" height="{{ height }}" viewBox="0 0 {{ width }} {{ height }}">
	<title>{{ title|e }}</title>
	{%- for e in elements %}
	{%- if e.kind == 'point' %}
	<circle id="{{ e.label|e }}" cx="{{ e.x }}" cy="{{ e.y }}" r="{{ radius }}"{{ e.style }}/>
	{%- elif e.kind == 'line' %}
	<g id="{{ e.label|e }}" class="line"{{ e.style }}>
		{%- for r in e.rays %}
		<line class="ray-{{ r.name }}" x1="{{ r.x1 }}" y1="{{ r.y1 }}" x2="{{ r.x2 }}" y2="{{ r.y2 }}"/>
		{%- endfor %}
	</g>
	{%- else %}
	<polygon id="{{ e.label|e }}" class="{{ e.kind }}" points="{{ e.points }}"{{ e.style }}/>
	{%- endif %}
	{%- endfor %}
</svg>
'''


def decimal(value):
	'''Formats a rational as decimal text rounded to four digits.'''
	q = round(Fraction(value) * 10000)
	sign = '-' if q < 0 else ''
	(whole, frac) = divmod(abs(q), 10000)
	if frac:
		return '%s%i.%s' % (sign, whole, ('%04i' % frac).rstrip('0'))
	return '%s%i' % (sign, whole)


def clip_ray(origin, direction, region):
	'''Clips the ray origin + t*direction, t >= 0, to the region.

	:returns: the end points of the visible segment or None
	'''
	t0 = Fraction(0)
	t1 = None
	for (o, d, lo, hi) in ((origin[0], direction[0], region.x_min, region.x_max),
			(origin[1], direction[1], region.y_min, region.y_max)):
		if d == 0:
			if not lo <= o <= hi:
				return None
			continue
		(ta, tb) = sorted([(lo - o) / d, (hi - o) / d])
		t0 = max(t0, ta)
		t1 = tb if t1 is None else min(t1, tb)
	if t1 is None or t1 <= t0:
		return None
	return ((origin[0] + t0*direction[0], origin[1] + t0*direction[1]),
		(origin[0] + t1*direction[0], origin[1] + t1*direction[1]))


class Scene(object):
	'''Labeled drawable elements within a viewport.

	:param viewport: visible part of the plane
	:type viewport: Region
	:param style: (attribute, value) pairs per element class, see :mod:`tropigeo.config`
	:type style: dict
	'''
	def __init__(self, viewport, style=None, title='tropigeo'):
		if not isinstance(viewport, Region):
			raise DomainError("viewport must be a Region, got %r" % (viewport,))
		self.viewport = viewport
		self.style = dict(config.RENDER_STYLE)
		self.style.update(style or {})
		self.title = title
		self.elements = []

	def labels(self):
		return [e['label'] for e in self.elements]

	def _add(self, element):
		if element['label'] in self.labels():
			raise DomainError("label '%s' is used twice in the scene" % element['label'])
		self.elements.append(element)

	def add_point(self, label, p):
		p = [scalar(c) for c in p]
		if not is_interior(p):
			raise DomainError("cannot draw boundary point %s" % (p,))
		self._add({'kind': 'point', 'label': label, 'at': tuple(p)})

	def add_line(self, label, L, chart=DEFAULT_CHART):
		geometry = line_geometry(line(L), chart)
		self._add({'kind': 'line', 'label': label, 'vertex': tuple(geometry.vertex), 'rays': geometry.ray_directions})

	def add_polygon(self, label, vertices, kind='polygon'):
		vertices = polygon.dedupe(vertices)
		if not vertices:
			raise DomainError("polygon '%s' has no vertices" % label)
		self._add({'kind': kind, 'label': label, 'vertices': vertices})

	def add_tiling(self, label, tiling):
		for cell in tiling.cells:
			self.add_polygon('%s-%i-%i' % ((label,) + tuple(cell.index)), cell.hexagon.vertices, 'tile')


def _style(pairs):
	return ''.join(' %s="%s"' % (attr, value) for (attr, value) in pairs)


def render(scene, scale=config.RENDER_SCALE, point_radius=config.RENDER_POINT_RADIUS):
	'''Returns the SVG document of the scene.

	:param scene: the scene to be drawn
	:type scene: Scene
	:param scale: pixels per unit
	:type scale: int
	'''
	v = scene.viewport
	screen = lambda p: (decimal((p[0] - v.x_min) * scale), decimal((v.y_max - p[1]) * scale))
	elements = []
	for e in scene.elements:
		style = _style(scene.style.get(e['kind'], ()))
		if e['kind'] == 'point':
			(x, y) = screen(e['at'])
			elements.append({'kind': 'point', 'label': e['label'], 'x': x, 'y': y, 'style': style})
		elif e['kind'] == 'line':
			rays = []
			for (name, direction) in e['rays']:
				segment = clip_ray(e['vertex'], direction, v)
				if segment is None:
					continue
				((x1, y1), (x2, y2)) = (screen(segment[0]), screen(segment[1]))
				rays.append({'name': name, 'x1': x1, 'y1': y1, 'x2': x2, 'y2': y2})
			elements.append({'kind': 'line', 'label': e['label'], 'rays': rays, 'style': style})
		else:
			points = ' '.join('%s,%s' % screen(p) for p in e['vertices'])
			elements.append({'kind': e['kind'], 'label': e['label'], 'points': points, 'style': style})

	template = Template(SVG_DOCUMENT)
	context = {}
	context['title'] = scene.title
	context['width'] = decimal((v.x_max - v.x_min) * scale)
	context['height'] = decimal((v.y_max - v.y_min) * scale)
	context['radius'] = point_radius
	context['elements'] = elements
	return template.render(context) + '\n'


def auto_viewport(points, margin=1):
	'''Returns the bounding box of the affine points widened by margin.'''
	margin = scalar(margin)
	points = list(points)
	if not points or margin <= 0:
		raise DomainError("viewport needs at least one point and a positive margin")
	xs = [p[0] for p in points]
	ys = [p[1] for p in points]
	region = Region(min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin)
	logging.warning("viewport chosen automatically: %s" % (region,))
	return region


def points_scene(points, margin=1, style=None, chart=DEFAULT_CHART):
	'''Scene showing the given projective points, labeled p1, p2, ...'''
	points = require_interior(*points)
	affine = [chart_extract(chart, p) for p in points]
	scene = Scene(auto_viewport(affine, margin), style)
	for (n, p) in enumerate(affine):
		scene.add_point('p%i' % (n+1), p)
	return scene


def line_scene(L, margin=1, style=None, chart=DEFAULT_CHART):
	'''Scene showing one tropical line and its vertex.'''
	vertex = line_geometry(line(L), chart).vertex
	scene = Scene(auto_viewport([vertex], margin), style)
	scene.add_line('L', L, chart)
	scene.add_point('vertex', vertex)
	return scene


def triangle_scene(a, b, c, margin=1, style=None, chart=DEFAULT_CHART):
	'''Scene showing a triangle: its vertices, its three sides and, for good
	triangles, its hexagon.
	'''
	(a, b, c) = require_interior(a, b, c)
	affine = [chart_extract(chart, p) for p in (a, b, c)]
	sides = [('ab', a, b), ('bc', b, c), ('ca', c, a)]
	vertices = [line_geometry(stable_join(p, q), chart).vertex for (_, p, q) in sides]
	scene = Scene(auto_viewport(affine + vertices, margin), style)
	if classify(a, b, c).kind in (TRANSVERSAL, GOOD_IMPROPER):
		scene.add_polygon('hexagon', hexagon_of(a, b, c, chart).vertices)
	for (label, p, q) in sides:
		scene.add_line(label, stable_join(p, q), chart)
	for (label, p) in zip(('a', 'b', 'c'), affine):
		scene.add_point(label, p)
	return scene


def tiling_scene(tiling, style=None):
	'''Scene showing the hexagons of a tiling within its region.'''
	scene = Scene(tiling.region, style)
	scene.add_tiling('tile', tiling)
	return scene
