#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Points and lines of the tropical affine and projective plane.

Description
-----------
Projective points are stored in canonical form, the largest coordinate
being 0; two points are equal when their canonical forms are. By duality a
projective point also serves as the coefficient vector of a tropical line
max(a1+X, a2+Y, a3+Z), whose vertex is the point -a.

The charts j1, j2 and j3 embed the affine plane into the projective plane by
inserting a 0 at slot 1, 2 or 3; charts may be addressed by index or by the
letters x, y and z. Chart z (slot 3, i.e. Z=0) is the default.

Stable joins and stable intersections are both computed with the tropical
cross product::

    a*b = [max(a2+b3, b2+a3), max(a1+b3, b1+a3), max(a1+b2, b1+a2)]
'''


import logging
import collections
from fractions import Fraction

from tropigeo import config
from tropigeo.core import NEG_INF, is_finite, scalar, trop_sum, trop_det, TropMatrix
from tropigeo.errors import DomainError, BoundError


CHARTS = {'x': 1, 'y': 2, 'z': 3}
DEFAULT_CHART = 3


def chart_index(k):
	'''Returns the slot (1..3) addressed by a chart index or letter.'''
	if isinstance(k, str):
		if k.lower() in CHARTS:
			return CHARTS[k.lower()]
		try:
			k = int(k)
		except ValueError:
			raise DomainError("invalid chart '%s', expected one of x, y, z" % k)
	if k not in (1, 2, 3):
		raise DomainError("invalid chart index %r, expected 1, 2 or 3" % (k,))
	return k


class AffinePoint(collections.namedtuple('AffinePoint', 'x y')):
	'''Point of the tropical affine plane; coordinates may be NEG_INF.'''
	__slots__ = ()

	def __new__(cls, x, y):
		return super(AffinePoint, cls).__new__(cls, scalar(x), scalar(y))

	def __add__(self, other):
		return AffinePoint(self.x + other[0], self.y + other[1])

	def __sub__(self, other):
		return AffinePoint(self.x - other[0], self.y - other[1])


class ProjPoint(object):
	'''Point of the tropical projective plane in canonical form.

	:param coords: three scalars, not all NEG_INF
	:type coords: sequence
	'''
	def __init__(self, coords):
		coords = [scalar(c) for c in coords]
		if len(coords) != 3:
			raise DomainError("projective point needs three coordinates, got %i" % len(coords))
		top = trop_sum(coords)
		if top is NEG_INF:
			raise DomainError("[-inf,-inf,-inf] is not a projective point")
		self.coords = tuple(c if c is NEG_INF else c - top for c in coords)

	def __repr__(self):
		return 'ProjPoint([%s])' % ','.join(str(c) for c in self.coords)

	def __eq__(self, other):
		return isinstance(other, ProjPoint) and self.coords == other.coords

	def __ne__(self, other):
		return not self.__eq__(other)

	def __hash__(self):
		return hash(self.coords)

	def __iter__(self):
		return iter(self.coords)

	def __getitem__(self, i):
		return self.coords[i]

	def __len__(self):
		return 3

	def is_interior(self):
		return all(is_finite(c) for c in self.coords)

	def neg(self):
		'''Returns the coordinatewise negation; only defined for interior points.'''
		if not self.is_interior():
			raise DomainError("cannot negate boundary point %r" % (self,))
		return ProjPoint([-c for c in self.coords])

	def normalized(self, k=DEFAULT_CHART):
		'''Returns the representative having coordinate k (1..3) equal to 0.'''
		k = chart_index(k)
		pivot = self.coords[k-1]
		if pivot is NEG_INF:
			raise DomainError("%r has no representative in chart %i" % (self, k))
		return tuple(c if c is NEG_INF else c - pivot for c in self.coords)


def proj(value):
	'''Returns a ProjPoint for a ProjPoint or a sequence of three scalars.'''
	if isinstance(value, ProjPoint):
		return value
	return ProjPoint(value)


def chart_embed(k, p):
	'''Embeds the affine point p into the projective plane using chart k.

	:param k: chart index (1..3) or letter (x, y, z)
	:param p: affine point
	:type p: AffinePoint or pair
	'''
	k = chart_index(k)
	coords = [scalar(c) for c in p]
	coords.insert(k-1, Fraction(0))
	return ProjPoint(coords)


def chart_extract(k, q):
	'''Returns the normalized affine coordinates of q in chart k, or None when
	coordinate k of q equals NEG_INF.
	'''
	k = chart_index(k)
	q = proj(q)
	if q[k-1] is NEG_INF:
		return None
	coords = list(q.normalized(k))
	del coords[k-1]
	return AffinePoint(*coords)


def is_interior(q):
	'''Returns True when no coordinate of the (affine or projective) point is NEG_INF.'''
	return all(is_finite(scalar(c)) for c in q)


def require_interior(*points):
	'''Returns the given points as ProjPoints; raises when one is a boundary point.'''
	result = [proj(p) for p in points]
	for p in result:
		if not p.is_interior():
			raise DomainError("%s is a boundary point, an interior point is required" % (p,))
	return result


class TropLine(object):
	'''Tropical line max(a1+X, a2+Y, a3+Z) with finite coefficients.

	:param coeffs: coefficient vector
	:type coeffs: ProjPoint or sequence of three scalars
	'''
	def __init__(self, coeffs):
		self.coeffs = proj(coeffs)
		if not self.coeffs.is_interior():
			raise DomainError("line coefficients must be finite, got %s" % (self.coeffs,))

	def __repr__(self):
		return 'TropLine([%s])' % ','.join(str(c) for c in self.coeffs)

	def __eq__(self, other):
		return isinstance(other, TropLine) and self.coeffs == other.coeffs

	def __ne__(self, other):
		return not self.__eq__(other)

	def __hash__(self):
		return hash(('line', self.coeffs))


def line(value):
	if isinstance(value, TropLine):
		return value
	return TropLine(value)


def vertex(L):
	'''Returns the vertex of the line L as projective point.'''
	return line(L).coeffs.neg()


def cross_product(a, b):
	'''Returns the tropical cross product of two interior points.'''
	(a, b) = require_interior(a, b)
	(a1, a2, a3) = a.coords
	(b1, b2, b3) = b.coords
	return ProjPoint([max(a2+b3, b2+a3), max(a1+b3, b1+a3), max(a1+b2, b1+a2)])


def stable_join(a, b):
	'''Returns the stable join of two distinct interior points, i.e. the line
	with coefficient vector a*b.
	'''
	(a, b) = require_interior(a, b)
	if a == b:
		raise DomainError("stable join of %s with itself is not defined" % (a,))
	return TropLine(cross_product(a, b))


def stable_intersection(L, M):
	'''Returns the stable intersection of two distinct lines.'''
	(L, M) = (line(L), line(M))
	if L == M:
		raise DomainError("stable intersection of %s with itself is not defined" % (L,))
	return cross_product(L.coeffs, M.coeffs)


def incident(q, L):
	'''Returns True when the point q lies on the line L: the maximum of
	q1+a1, q2+a2, q3+a3 is finite and attained at least twice.
	'''
	q = proj(q)
	L = line(L)
	terms = [c + a for (c, a) in zip(q.coords, L.coeffs.coords)]
	top = trop_sum(terms)
	return top is not NEG_INF and len([t for t in terms if t == top]) >= 2


LineGeometry = collections.namedtuple('LineGeometry', 'vertex ray_directions boundary_points missing_point')
'''Affine picture of a line in one chart: its vertex, the three ray
directions (West, South and North-East), the end points of the West and
South rays on the boundary of the chart and the projective point reached by
the North-East ray, which the chart does not show.'''


RAY_DIRECTIONS = (
	('W', (Fraction(-1), Fraction(0))),
	('S', (Fraction(0), Fraction(-1))),
	('NE', (Fraction(1), Fraction(1))),
)


def line_geometry(L, chart=DEFAULT_CHART):
	'''Returns the :class:`LineGeometry` of the line L in the given chart.'''
	k = chart_index(chart)
	v = vertex(L)
	affine = chart_extract(k, v)
	boundary = (AffinePoint(NEG_INF, affine.y), AffinePoint(affine.x, NEG_INF))
	coords = list(v.coords)
	coords[k-1] = NEG_INF
	return LineGeometry(affine, RAY_DIRECTIONS, boundary, ProjPoint(coords))


def points_transversal(a, b):
	'''Returns True when exactly one tropical line passes through the
	distinct interior points a and b, that is a*b differs from -a and -b.
	'''
	(a, b) = require_interior(a, b)
	if a == b:
		raise DomainError("transversality of %s with itself is not defined" % (a,))
	p = cross_product(a, b)
	return p != a.neg() and p != b.neg()


def lines_transversal(L, M):
	'''Returns True when the lines L and M meet in a single point; equal lines
	are not transversal.
	'''
	(L, M) = (line(L), line(M))
	if L == M:
		return False
	return points_transversal(L.coeffs, M.coeffs)


def collinear(a, b, c, max_n=None):
	'''Returns True when the three distinct interior points lie on a common
	tropical line, i.e. their coordinate matrix is tropically singular.
	'''
	(a, b, c) = require_interior(a, b, c)
	if len(set([a, b, c])) != 3:
		raise DomainError("collinearity requires three distinct points")
	return not trop_det(TropMatrix([a.coords, b.coords, c.coords]), max_n).regular


CramerResult = collections.namedtuple('CramerResult', 'point stable_equals_plain minors')


def cramer_intersection(A, max_n=None):
	'''Solves n tropical hyperplanes with Cramer's rule.

	The j-th coordinate of the intersection point is the tropical determinant
	of A with column j removed. The stable intersection coincides with the
	plain one when every one of these minors is tropically regular.

	:param A: n x (n+1) matrix of finite coefficients, one hyperplane per row
	:type A: TropMatrix
	:param max_n: permanent dimension bound; at most max_n - 1 hyperplanes
	:type max_n: int

	:returns: :class:`CramerResult` with the point as tuple of n+1 scalars
	'''
	if not isinstance(A, TropMatrix):
		A = TropMatrix(A)
	if A.cols != A.rows + 1:
		raise DomainError("Cramer's rule requires an n x (n+1) matrix, got %ix%i" % (A.rows, A.cols))
	if not A.is_finite():
		raise DomainError("Cramer's rule requires finite coefficients")
	bound = config.cramer_bound(max_n)
	if A.rows > bound:
		raise BoundError("%i hyperplanes exceed the Cramer bound %i" % (A.rows, bound))
	minors = [trop_det(A.minor(j), max_n) for j in range(A.cols)]
	top = trop_sum(m.value for m in minors)
	point = tuple(m.value - top for m in minors)
	flag = all(m.regular for m in minors)
	logging.debug("cramer n=%i point=%s stable_equals_plain=%s" % (A.rows, [str(c) for c in point], flag))
	return CramerResult(point, flag, minors)
