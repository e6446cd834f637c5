#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Tropical triangles: classification, the associated classical hexagon, its
parameter space, tropical span and independence and the combinatorial
types of improper good triangles.

Description
-----------
A tropical triangle with distinct, interior, non collinear vertices a, b and
c is *good* when stably intersecting its sides pairwise returns the
original vertices and *proper* when a, b, c, -(a*b), -(b*c) and -(c*a) are
six different points. It is *transversal* when it is both.

In affine coordinates of a chart a triangle is transversal exactly when,
perhaps after relabeling, the following six strict inequalities hold::

    a1 < b1 < c1,    a2 < c2 < b2,    b1-b2 < a1-a2 < c1-c2

The tropical span of a transversal triangle is the classical hexagon with
vertices (clockwise) a, -(a*b), b, -(b*c), c, -(c*a), whose sides have
slopes inf, 1, 0, inf, 1, 0. Its six lattice lengths l1..l6 satisfy
l1+l2 = l4+l5 and l2+l3 = l5+l6; any positive l1, l2, l3 and l5 with
l5 < min(l1+l2, l2+l3) determine a transversal triangle up to translation.

Improper good triangles are obtained by letting some sides of the hexagon
collapse; their zero sides form a *collapse pattern*.

Usage
-----
::

    from tropigeo.triangle import classify

    t = classify([-3,-1,0], [0,0,0], [-1,2,0])
    print(t.kind, t.relabeling)   # Transversal (0, 2, 1)
'''


import logging
import itertools
import collections
from fractions import Fraction

from tropigeo import polygon
from tropigeo.core import scalar, trop_det, TropMatrix
from tropigeo.plane import (DEFAULT_CHART, AffinePoint, chart_index, chart_embed, chart_extract,
	is_interior, proj, require_interior, cross_product, stable_join, points_transversal, lines_transversal, collinear)
from tropigeo.errors import TropError, DomainError


TRANSVERSAL = 'Transversal'
GOOD_IMPROPER = 'GoodImproper'
NOT_GOOD = 'NotGood'
COLLINEAR = 'Collinear'
DEGENERATE = 'DegeneratePair'

LABELINGS = tuple(itertools.permutations(range(3)))

LABELS = ('a', 'b', 'c')

# sides (1 based) of the hexagon incident to the triangle vertices a, b and c
VERTEX_SIDES = ((6, 1), (2, 3), (4, 5))

# consecutive sides whose collapse merges two triangle vertices
MERGING_SIDES = ((1, 2), (3, 4), (5, 6))

CLAIMED_IMPROPER_TYPES = 14


def _distinct(points):
	if len(set(points)) != len(points):
		raise DomainError("points must be pairwise distinct")


def _affine(points):
	'''Returns the points as affine pairs of finite rationals.'''
	result = []
	for p in points:
		p = AffinePoint(*p)
		if not is_interior(p):
			raise DomainError("%r is not an interior affine point" % (p,))
		result.append(p)
	return result


Violations = collections.namedtuple('Violations', 'weak strict')
'''Number of affine inequalities that fail weakly (lhs > rhs) and strictly
(lhs >= rhs) for one labeling.'''


def thm1_inequalities(a, b, c):
	'''Returns the six affine inequalities as (lhs, rhs) pairs meaning lhs < rhs.'''
	return (
		(a[0], b[0]), (b[0], c[0]),
		(a[1], c[1]), (c[1], b[1]),
		(b[0]-b[1], a[0]-a[1]), (a[0]-a[1], c[0]-c[1]),
	)


def thm1_violations(p, q, r, labeling):
	'''Counts the violated affine inequalities when the points p, q and r are
	labeled a, b, c according to labeling (a permutation of 0, 1, 2).

	:returns: :class:`Violations`
	'''
	points = _affine([p, q, r])
	(a, b, c) = [points[i] for i in labeling]
	inequalities = thm1_inequalities(a, b, c)
	weak = len([1 for (lhs, rhs) in inequalities if lhs > rhs])
	strict = len([1 for (lhs, rhs) in inequalities if lhs >= rhs])
	return Violations(weak, strict)


Relabeling = collections.namedtuple('Relabeling', 'labeling a b c violations')
'''A labeling of three input points; *labeling[k]* is the input index that
receives label k (a, b, c).'''


def thm1_relabel(p, q, r):
	'''Returns the unique :class:`Relabeling` of three distinct affine points
	satisfying all six strict inequalities, or None.
	'''
	points = _affine([p, q, r])
	_distinct(points)
	for labeling in LABELINGS:
		v = thm1_violations(p, q, r, labeling)
		if v.strict == 0:
			(a, b, c) = [points[i] for i in labeling]
			return Relabeling(labeling, a, b, c, v)
	return None


def best_labeling(p, q, r):
	'''Returns the :class:`Relabeling` violating the fewest inequalities;
	weak violations count first, then strict ones, ties go to the first
	labeling in lexicographic order.
	'''
	points = _affine([p, q, r])
	_distinct(points)
	candidates = []
	for labeling in LABELINGS:
		v = thm1_violations(p, q, r, labeling)
		candidates.append(((v.weak, v.strict, labeling), v))
	((_, _, labeling), v) = min(candidates, key=lambda x: x[0])
	(a, b, c) = [points[i] for i in labeling]
	return Relabeling(labeling, a, b, c, v)


def thm2_inequalities(a, b, c):
	'''Returns the six projective inequalities as (lhs, rhs) pairs.'''
	d = lambda x, i, j: x[i] - x[j]
	return (
		(d(b, 0, 1), d(a, 0, 1)), (d(a, 0, 1), d(c, 0, 1)),
		(d(a, 1, 2), d(c, 1, 2)), (d(c, 1, 2), d(b, 1, 2)),
		(d(c, 2, 0), d(b, 2, 0)), (d(b, 2, 0), d(a, 2, 0)),
	)


def thm2_check(a, b, c):
	'''Returns the labeling for which the three interior projective points
	satisfy the six projective inequalities, or None.
	'''
	points = require_interior(a, b, c)
	_distinct(points)
	for labeling in LABELINGS:
		(x, y, z) = [points[i].coords for i in labeling]
		if all(lhs < rhs for (lhs, rhs) in thm2_inequalities(x, y, z)):
			return labeling
	return None


def _sides(a, b, c):
	return (cross_product(a, b), cross_product(b, c), cross_product(c, a))


def _require_triangle(a, b, c):
	points = require_interior(a, b, c)
	_distinct(points)
	if collinear(*points):
		raise DomainError("points %s are tropically collinear" % (', '.join(str(p) for p in points),))
	return points


def is_good(a, b, c):
	'''Returns True when stably intersecting the sides of the triangle pairwise
	yields the original vertices.
	'''
	(a, b, c) = _require_triangle(a, b, c)
	(ab, bc, ca) = _sides(a, b, c)
	return cross_product(ca, ab) == a and cross_product(ab, bc) == b and cross_product(bc, ca) == c


def hexagon_cycle(a, b, c):
	'''Returns the projective points a, -(a*b), b, -(b*c), c, -(c*a).'''
	(a, b, c) = require_interior(a, b, c)
	(ab, bc, ca) = _sides(a, b, c)
	return (a, ab.neg(), b, bc.neg(), c, ca.neg())


def is_proper(a, b, c):
	'''Returns True when the vertices and the vertices of the sides are six
	different points.
	'''
	points = require_interior(a, b, c)
	_distinct(points)
	return len(set(hexagon_cycle(*points))) == 6


def dfn1_transversal(a, b, c):
	'''Checks transversality directly: the vertices are pairwise transversal
	and so are the three sides.
	'''
	(a, b, c) = _require_triangle(a, b, c)
	for (p, q) in ((a, b), (b, c), (c, a)):
		if not points_transversal(p, q):
			return False
	sides = (stable_join(a, b), stable_join(b, c), stable_join(c, a))
	for (L, M) in ((sides[0], sides[1]), (sides[1], sides[2]), (sides[2], sides[0])):
		if not lines_transversal(L, M):
			return False
	return True


class CollapsePattern(object):
	'''Set of collapsed (zero length) sides, numbered 1..6, of the cycle
	a, -(a*b), b, -(b*c), c, -(c*a).
	'''
	def __init__(self, collapsed=()):
		self.collapsed = frozenset(int(j) for j in collapsed)
		if not self.collapsed <= frozenset(range(1, 7)):
			raise DomainError("side indices must lie in 1..6, got %s" % sorted(self.collapsed))

	def __repr__(self):
		return 'CollapsePattern(%s)' % str(self)

	def __str__(self):
		return '{%s}' % ','.join(str(j) for j in sorted(self.collapsed))

	def __eq__(self, other):
		return isinstance(other, CollapsePattern) and self.collapsed == other.collapsed

	def __ne__(self, other):
		return not self.__eq__(other)

	def __hash__(self):
		return hash(self.collapsed)

	def __iter__(self):
		return iter(sorted(self.collapsed))

	def __len__(self):
		return len(self.collapsed)

	def __lt__(self, other):
		return (len(self), sorted(self.collapsed)) < (len(other), sorted(other.collapsed))

	def respects_vertices(self):
		'''False when both sides incident to one triangle vertex collapse.'''
		return not any(set(pair) <= self.collapsed for pair in VERTEX_SIDES)

	def merging_sides(self):
		'''Returns the first pair of collapsed sides merging two triangle vertices, or None.'''
		for pair in MERGING_SIDES:
			if set(pair) <= self.collapsed:
				return pair
		return None


def _pattern(cycle):
	return CollapsePattern(j+1 for j in range(6) if cycle[j] == cycle[(j+1) % 6])


TriangleClass = collections.namedtuple('TriangleClass', 'kind relabeling pattern reason')
'''Classification of a tropical triangle. *relabeling* is set for
transversal triangles, *pattern* for good improper ones.'''


def classify(a, b, c):
	'''Classifies three projective points; never raises for well formed points.

	:returns: :class:`TriangleClass`
	'''
	points = [proj(p) for p in (a, b, c)]
	if not all(p.is_interior() for p in points):
		return TriangleClass(DEGENERATE, None, None, 'boundary point')
	if len(set(points)) != 3:
		return TriangleClass(DEGENERATE, None, None, 'repeated point')
	if collinear(*points):
		return TriangleClass(COLLINEAR, None, None, 'singular coordinate matrix')

	good = is_good(*points)
	proper = is_proper(*points)
	logging.debug("classify %s good=%s proper=%s" % (points, good, proper))
	if good and proper:
		labeling = thm2_check(*points)
		if labeling is None or not dfn1_transversal(*points):
			raise TropError("inconsistent classification of %s" % (points,))
		return TriangleClass(TRANSVERSAL, labeling, None, 'good and proper')
	if good:
		return TriangleClass(GOOD_IMPROPER, None, _pattern(hexagon_cycle(*points)), 'good but not proper')
	return TriangleClass(NOT_GOOD, None, None, 'stable intersection of sides differs from a vertex')


def corollary_value(a, b, c):
	'''Returns (c*a)*(a*b) together with the names of the points among a,
	-(c*a) and -(a*b) it equals.
	'''
	(a, b, c) = _require_triangle(a, b, c)
	(ab, bc, ca) = _sides(a, b, c)
	value = cross_product(ca, ab)
	matches = [name for (name, p) in (('a', a), ('-(c*a)', ca.neg()), ('-(a*b)', ab.neg())) if p == value]
	return (value, matches)


def coordinate_permanent(a, b, c, max_n=None):
	'''Returns the tropical determinant of the coordinate matrix of three
	interior points, using representatives normalized in Z=0.
	'''
	points = require_interior(a, b, c)
	return trop_det(TropMatrix([p.normalized(3) for p in points]), max_n)


Hexagon = collections.namedtuple('Hexagon', 'vertices lengths labeling chart')
'''Classical hexagon of a good triangle: six affine vertices clockwise, from
vertex a, the six lattice lengths, the labeling of the input points and the
chart.'''


def lattice_lengths(vertices):
	'''Lattice lengths of a hexagon walked along +(0,1), +(1,1), +(1,0),
	-(0,1), -(1,1), -(1,0).
	'''
	(v1, v2, v3, v4, v5, v6) = vertices
	return (v2[1]-v1[1], v3[0]-v2[0], v4[0]-v3[0], v4[1]-v5[1], v5[0]-v6[0], v6[0]-v1[0])


def hexagon_of(a, b, c, chart=DEFAULT_CHART):
	'''Returns the :class:`Hexagon` of a transversal or good improper triangle.

	Labels come from the strict affine inequalities in the given chart, or,
	for improper triangles, from :func:`best_labeling`.
	'''
	k = chart_index(chart)
	t = classify(a, b, c)
	if t.kind not in (TRANSVERSAL, GOOD_IMPROPER):
		raise DomainError("hexagon requires a good triangle, got %s (%s)" % (t.kind, t.reason))
	points = [proj(p) for p in (a, b, c)]
	affine = [chart_extract(k, p) for p in points]
	r = thm1_relabel(*affine)
	if r is None:
		r = best_labeling(*affine)
	labeled = [points[i] for i in r.labeling]
	vertices = tuple(chart_extract(k, p) for p in hexagon_cycle(*labeled))
	lengths = lattice_lengths(vertices)
	if any(l < 0 for l in lengths):
		raise TropError("negative lattice length in hexagon %s" % (vertices,))
	return Hexagon(vertices, lengths, r.labeling, k)


def point_in_hexagon(u, hexagon):
	'''Returns True when the affine point u lies in the closed hexagon.'''
	return polygon.contains(hexagon.vertices, u)


def check_closure(lengths):
	'''Returns True when the lengths satisfy l(j-2)+l(j-1) = l(j+1)+l(j+2).'''
	l = lengths
	return l[0]+l[1] == l[3]+l[4] and l[1]+l[2] == l[4]+l[5] and l[2]+l[3] == l[5]+l[0]


class HexParams(object):
	'''Point of the parameter space of transversal triangles: six positive
	lattice lengths with l1+l2 = l4+l5, l2+l3 = l5+l6 and l5 < min(l1+l2, l2+l3).

	:param lengths: the six lengths l1..l6
	:type lengths: sequence
	'''
	def __init__(self, lengths):
		lengths = tuple(scalar(l) for l in lengths)
		if len(lengths) != 6:
			raise DomainError("hexagon parameters need six lengths, got %i" % len(lengths))
		if not all(l > 0 for l in lengths):
			raise DomainError("lattice lengths must be positive, got %s" % ','.join(str(l) for l in lengths))
		if not check_closure(lengths):
			raise DomainError("lattice lengths %s violate the closure relations" % ','.join(str(l) for l in lengths))
		(l1, l2, l3, _, l5, _) = lengths
		if not l5 < min(l1+l2, l2+l3):
			raise DomainError("l5=%s must be smaller than min(l1+l2, l2+l3)" % l5)
		self.lengths = lengths

	def __repr__(self):
		return 'HexParams(%s)' % ','.join(str(l) for l in self.lengths)

	def __eq__(self, other):
		return isinstance(other, HexParams) and self.lengths == other.lengths

	def __ne__(self, other):
		return not self.__eq__(other)

	def __hash__(self):
		return hash(self.lengths)

	def __iter__(self):
		return iter(self.lengths)

	def __getitem__(self, i):
		return self.lengths[i]

	def is_symmetric(self):
		'''True when opposite sides are equal (l1=l4, l2=l5, l3=l6).'''
		l = self.lengths
		return l[0] == l[3] and l[1] == l[4] and l[2] == l[5]

	def projectively_equal(self, other):
		'''True when both tuples differ by a common additive constant.'''
		shifts = set(x - y for (x, y) in zip(self.lengths, other.lengths))
		return len(shifts) == 1


def params_complete(l1, l2, l3, l5):
	'''Completes four positive lengths into :class:`HexParams` using
	l4 = l1+l2-l5 and l6 = l2+l3-l5.
	'''
	(l1, l2, l3, l5) = [scalar(l) for l in (l1, l2, l3, l5)]
	if not all(l > 0 for l in (l1, l2, l3, l5)):
		raise DomainError("l1, l2, l3 and l5 must be positive")
	if not l5 < min(l1+l2, l2+l3):
		raise DomainError("l5=%s must be smaller than min(l1+l2, l2+l3)=%s" % (l5, min(l1+l2, l2+l3)))
	return HexParams((l1, l2, l3, l1+l2-l5, l5, l2+l3-l5))


def hexagon_walk(lengths, base=(0, 0)):
	'''Returns the six affine vertices reached by walking clockwise from base
	along the given lattice lengths.
	'''
	(l1, l2, l3, l4, l5, l6) = [scalar(l) for l in lengths]
	v1 = AffinePoint(*base)
	v2 = v1 + (0, l1)
	v3 = v2 + (l2, l2)
	v4 = v3 + (l3, 0)
	v5 = v4 - (0, l4)
	v6 = v5 - (l5, l5)
	if v6 - (l6, 0) != v1:
		raise DomainError("lattice lengths %s do not close up" % (lengths,))
	return (v1, v2, v3, v4, v5, v6)


def triangle_from_params(params, base=(0, 0), chart=DEFAULT_CHART):
	'''Returns the transversal triangle (a, b, c) whose hexagon has the given
	parameters and vertex a at base, as projective points.
	'''
	if not isinstance(params, HexParams):
		params = HexParams(params)
	walk = hexagon_walk(params.lengths, base)
	return tuple(chart_embed(chart, walk[i]) for i in (0, 2, 4))


SpanResult = collections.namedtuple('SpanResult', 'member witness')


def span_membership(u, generators):
	'''Decides whether the interior point u is a tropical linear combination
	of 2 or 3 interior generators.

	The coefficients are the principal solution lambda_j = min_i(u_i - g_ji)
	computed for representatives normalized in Z=0; u is spanned exactly when
	they reproduce u.

	:returns: :class:`SpanResult`, witness is the tuple of coefficients or None
	'''
	(u,) = require_interior(u)
	generators = require_interior(*generators)
	if not 2 <= len(generators) <= 3:
		raise DomainError("span requires 2 or 3 generators, got %i" % len(generators))
	return _span(u, generators)


def _span(u, generators):
	target = u.normalized(3)
	rows = [g.normalized(3) for g in generators]
	witness = tuple(min(t - x for (t, x) in zip(target, g)) for g in rows)
	combination = tuple(max(l + g[i] for (l, g) in zip(witness, rows)) for i in range(3))
	member = combination == target
	return SpanResult(member, witness if member else None)


def independent(points):
	'''Returns True when no point is tropically spanned by the others.

	:param points: up to four distinct interior points
	:type points: list
	'''
	points = require_interior(*points)
	_distinct(points)
	if not 1 <= len(points) <= 4:
		raise DomainError("independence is decided for 1 to 4 points, got %i" % len(points))
	for (j, p) in enumerate(points):
		others = points[:j] + points[j+1:]
		if len(others) >= 2 and _span(p, others).member:
			logging.debug("%s is spanned by the other points" % (p,))
			return False
	return True


def collapse_pattern(a, b, c):
	'''Returns the :class:`CollapsePattern` of a good triangle; empty exactly
	for transversal triangles.
	'''
	t = classify(a, b, c)
	if t.kind == TRANSVERSAL:
		return CollapsePattern()
	if t.kind == GOOD_IMPROPER:
		return t.pattern
	raise DomainError("collapse pattern requires a good triangle, got %s" % t.kind)


ImproperType = collections.namedtuple('ImproperType', 'pattern lengths triangle')
Rejection = collections.namedtuple('Rejection', 'pattern reason')
ImproperTypes = collections.namedtuple('ImproperTypes', 'types rejected graph count claimed')


def _witness_lengths(pattern, values=range(4)):
	'''Searches lengths with exactly the collapsed sides equal to zero.'''
	for (l1, l2, l3, l5) in itertools.product(values, repeat=4):
		lengths = (l1, l2, l3, l1+l2-l5, l5, l2+l3-l5)
		zero = set(j+1 for (j, l) in enumerate(lengths) if l == 0)
		if zero == pattern.collapsed and all(l >= 0 for l in lengths):
			return tuple(Fraction(l) for l in lengths)
	return None


def candidate_patterns():
	'''Returns the nonempty collapse patterns that never collapse both sides
	incident to one triangle vertex.
	'''
	patterns = []
	for n in range(1, 7):
		for sides in itertools.combinations(range(1, 7), n):
			pattern = CollapsePattern(sides)
			if pattern.respects_vertices():
				patterns.append(pattern)
	return sorted(patterns)


def enumerate_improper_types():
	'''Enumerates the combinatorial types of improper good triangles.

	Every candidate pattern is either realized by a witness triangle whose
	classification is verified, or rejected with a reason. Realized
	patterns form a graph whose edges join patterns differing by one side.

	:returns: :class:`ImproperTypes`
	'''
	types = []
	rejected = []
	for pattern in candidate_patterns():
		merge = pattern.merging_sides()
		if merge is not None:
			(i, j) = merge
			reason = 'sides %i and %i collapse: vertex %s merges with vertex %s' % (i, j, LABELS[i//2], LABELS[(i//2 + 1) % 3])
			rejected.append(Rejection(pattern, reason))
			continue
		lengths = _witness_lengths(pattern)
		if lengths is None:
			rejected.append(Rejection(pattern, 'no lattice lengths realize the pattern'))
			continue
		walk = hexagon_walk(lengths)
		triangle = tuple(chart_embed(DEFAULT_CHART, walk[i]) for i in (0, 2, 4))
		t = classify(*triangle)
		if t.kind != GOOD_IMPROPER or t.pattern != pattern:
			rejected.append(Rejection(pattern, 'witness classifies as %s with pattern %s' % (t.kind, t.pattern)))
			continue
		types.append(ImproperType(pattern, lengths, triangle))

	graph = collections.OrderedDict()
	for t in types:
		graph[t.pattern] = [s.pattern for s in types if len(t.pattern.collapsed ^ s.pattern.collapsed) == 1]
	for r in rejected:
		logging.warning("rejected collapse pattern %s: %s" % (r.pattern, r.reason))
	logging.debug("improper types: %i realized, %i rejected, %i claimed" % (len(types), len(rejected), CLAIMED_IMPROPER_TYPES))
	return ImproperTypes(types, rejected, graph, len(types), CLAIMED_IMPROPER_TYPES)
