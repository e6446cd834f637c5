#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Tropical triangulations of rectangular regions of the classical plane.

Description
-----------
A tropical triangulation is a family of transversal triangles whose
hexagons tessellate the plane; two neighbouring hexagons share exactly one
full side, including both end points, and their triangles share one vertex.

Centrally symmetric hexagons (l1=l4, l2=l5, l3=l6) tile the plane by
translations along u = c - a and v = b - a. :func:`generate_tiling` emits the
translates meeting a region; :func:`validate_tiling` checks any family of
cells with exact arithmetic.
'''


import math
import logging
import itertools
import collections

from tropigeo import polygon
from tropigeo.core import scalar
from tropigeo.plane import DEFAULT_CHART, AffinePoint, chart_embed, chart_extract, proj
from tropigeo.triangle import TRANSVERSAL, Hexagon, HexParams, classify, hexagon_cycle, hexagon_walk
from tropigeo.errors import DomainError


class Region(object):
	'''Closed rectangle [x_min, x_max] x [y_min, y_max] with rational bounds.'''

	def __init__(self, x_min, x_max, y_min, y_max):
		(self.x_min, self.x_max, self.y_min, self.y_max) = [scalar(v) for v in (x_min, x_max, y_min, y_max)]
		if not (self.x_min < self.x_max and self.y_min < self.y_max):
			raise DomainError("empty region %s" % (self,))

	def __repr__(self):
		return 'Region(%s, %s, %s, %s)' % (self.x_min, self.x_max, self.y_min, self.y_max)

	def __eq__(self, other):
		return isinstance(other, Region) and self.bounds() == other.bounds()

	def __ne__(self, other):
		return not self.__eq__(other)

	def bounds(self):
		return (self.x_min, self.x_max, self.y_min, self.y_max)

	def area(self):
		return (self.x_max - self.x_min) * (self.y_max - self.y_min)

	def corners(self):
		'''Returns the corners counter clockwise, starting at the lower left.'''
		return polygon.rectangle(*self.bounds())


Cell = collections.namedtuple('Cell', 'index hexagon triangle')
'''One tile: lattice index (i, j), its :class:`~tropigeo.triangle.Hexagon`
and the triangle (a, b, c) as projective points.'''


class Tiling(object):
	'''Translates of one centrally symmetric hexagon covering a region.'''

	def __init__(self, params, region, base, cells):
		self.params = params
		self.region = region
		self.base = AffinePoint(*base)
		(l1, l2, l3) = params.lengths[:3]
		self.lattice_u = (l2+l3, l2)
		self.lattice_v = (l2, l1+l2)
		self.cells = cells

	def __repr__(self):
		return 'Tiling(%r, %r, %i cells)' % (self.params, self.region, len(self.cells))

	def lattice_point(self, i, j):
		'''Returns base + i*u + j*v.'''
		(u, v) = (self.lattice_u, self.lattice_v)
		return AffinePoint(self.base.x + i*u[0] + j*v[0], self.base.y + i*u[1] + j*v[1])


def _cell(params, origin, index):
	vertices = hexagon_walk(params.lengths, origin)
	triangle = tuple(chart_embed(DEFAULT_CHART, vertices[i]) for i in (0, 2, 4))
	return Cell(index, Hexagon(vertices, params.lengths, (0, 1, 2), DEFAULT_CHART), triangle)


def generate_tiling(params, region):
	'''Returns the :class:`Tiling` of all translates of the hexagon of params
	meeting the region with positive area. The base hexagon has vertex a at
	the lower left corner of the region.

	:param params: centrally symmetric hexagon parameters
	:type params: HexParams
	:param region: the region to cover
	:type region: Region
	'''
	if not isinstance(params, HexParams):
		params = HexParams(params)
	if not params.is_symmetric():
		raise DomainError("translation tilings require l1=l4, l2=l5, l3=l6, got %r" % (params,))
	tiling = Tiling(params, region, (region.x_min, region.y_min), [])
	(u, v) = (tiling.lattice_u, tiling.lattice_v)
	(l1, l2, l3) = params.lengths[:3]
	(width, height) = (l2+l3, l1+l2)

	# lattice coordinates of the region, widened by the hexagon bounding box
	det = u[0]*v[1] - u[1]*v[0]
	box = [(x - region.x_min, y - region.y_min)
		for x in (region.x_min - width, region.x_max) for y in (region.y_min - height, region.y_max)]
	s = [(dx*v[1] - dy*v[0]) / det for (dx, dy) in box]
	t = [(dy*u[0] - dx*u[1]) / det for (dx, dy) in box]
	rect = region.corners()
	for (i, j) in itertools.product(range(math.floor(min(s)), math.ceil(max(s)) + 1),
			range(math.floor(min(t)), math.ceil(max(t)) + 1)):
		cell = _cell(params, tiling.lattice_point(i, j), (i, j))
		if polygon.intersection_area(cell.hexagon.vertices, rect) > 0:
			tiling.cells.append(cell)
	logging.debug("tiling %r: %i cells" % (params, len(tiling.cells)))
	return tiling


class TilingReport(collections.namedtuple('TilingReport', 'transversal disjoint sides coverage vertices failures')):
	'''Outcome of :func:`validate_tiling`; one flag per check and a list of
	failure descriptions.'''
	__slots__ = ()

	@property
	def ok(self):
		return self.transversal and self.disjoint and self.sides and self.coverage and self.vertices


def _unpack(cell):
	if isinstance(cell, Cell):
		(hexagon, triangle) = (cell.hexagon, cell.triangle)
	else:
		try:
			(hexagon, triangle) = cell
		except (TypeError, ValueError):
			raise DomainError("malformed cell %r, expected (hexagon, triangle)" % (cell,))
	if isinstance(hexagon, Hexagon):
		hexagon = hexagon.vertices
	try:
		vertices = [polygon.point(p) for p in hexagon]
		triangle = tuple(proj(p) for p in triangle)
	except (TypeError, ValueError, IndexError):
		raise DomainError("malformed cell %r" % (cell,))
	if len(vertices) < 3 or len(triangle) != 3:
		raise DomainError("malformed cell, need a polygon and three points")
	return (vertices, triangle)


def _bbox_overlap(p, q):
	return not (max(x for (x, _) in p) < min(x for (x, _) in q) or max(x for (x, _) in q) < min(x for (x, _) in p)
		or max(y for (_, y) in p) < min(y for (_, y) in q) or max(y for (_, y) in q) < min(y for (_, y) in p))


def validate_tiling(cells, region):
	'''Validates a family of cells against a region.

	Checks: (i) every triangle is transversal, (ii) hexagon interiors are
	pairwise disjoint, (iii) two hexagons meet in nothing, a point or one
	full common side, (iv) the hexagons cover the region and (v) hexagons
	sharing a side have exactly one common triangle vertex on that side
	and every hexagon has the vertices of the hexagon of its own triangle.

	:param cells: Cell objects or (hexagon, triangle) pairs
	:type cells: list
	:param region: the region to be covered
	:type region: Region

	:returns: :class:`TilingReport`
	'''
	cells = [_unpack(c) for c in cells]
	if not cells:
		raise DomainError("tiling has no cells")
	failures = []

	kinds = [classify(*triangle).kind for (_, triangle) in cells]
	transversal = True
	for (n, kind) in enumerate(kinds):
		if kind != TRANSVERSAL:
			transversal = False
			failures.append("cell %i: triangle is %s" % (n, kind))

	(disjoint, sides, vertices) = (True, True, True)
	for (n, (hexagon, triangle)) in enumerate(cells):
		if kinds[n] == TRANSVERSAL and set(hexagon) != set(_corners(hexagon_cycle(*triangle))):
			vertices = False
			failures.append("cell %i: hexagon is not the hexagon of its triangle" % n)
	for (m, n) in itertools.combinations(range(len(cells)), 2):
		(p, tp) = cells[m]
		(q, tq) = cells[n]
		if not _bbox_overlap(p, q):
			continue
		if polygon.intersection_area(p, q) > 0:
			disjoint = False
			failures.append("cells %i and %i: interiors overlap" % (m, n))
			continue
		contact = polygon.contact(p, q)
		if len(contact) < 2:
			continue
		if not (polygon.is_side(p, *contact) and polygon.is_side(q, *contact)):
			sides = False
			failures.append("cells %i and %i: contact %s is not a common side" % (m, n, contact))
			continue
		common = [x for x in contact if x in _corners(tp) and x in _corners(tq)]
		if len(common) != 1:
			vertices = False
			failures.append("cells %i and %i: %i common triangle vertices on shared side" % (m, n, len(common)))

	rect = region.corners()
	covered = sum(polygon.intersection_area(p, rect) for (p, _) in cells)
	coverage = covered == region.area()
	if not coverage:
		failures.append("hexagons cover area %s of region area %s" % (covered, region.area()))

	report = TilingReport(transversal, disjoint, sides, coverage, vertices, failures)
	logging.debug("validated %i cells, %i failures" % (len(cells), len(failures)))
	return report


def _corners(triangle):
	return [polygon.point(chart_extract(DEFAULT_CHART, p)) for p in triangle]
