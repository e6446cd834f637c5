#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Exact arithmetic on classical convex polygons.

Description
-----------
Polygons are sequences of (x, y) pairs of rationals, in either orientation.
All predicates are exact; boundaries are closed (points on an edge are
inside).
'''


from fractions import Fraction


def point(p):
	return (Fraction(p[0]), Fraction(p[1]))


def cross(o, a, b):
	'''Returns the z component of (a-o) x (b-o).'''
	return (a[0]-o[0])*(b[1]-o[1]) - (a[1]-o[1])*(b[0]-o[0])


def orientation(o, a, b):
	'''Returns 1 for a counter clockwise turn, -1 for clockwise and 0 when
	the three points are collinear.
	'''
	c = cross(o, a, b)
	return (c > 0) - (c < 0)


def dedupe(polygon):
	'''Removes consecutive (and wrapping) duplicate vertices.'''
	result = []
	for p in [point(p) for p in polygon]:
		if not result or result[-1] != p:
			result.append(p)
	while len(result) > 1 and result[0] == result[-1]:
		result.pop()
	return result


def signed_area(polygon):
	'''Shoelace formula; positive for counter clockwise polygons.'''
	polygon = [point(p) for p in polygon]
	n = len(polygon)
	s = Fraction(0)
	for i in range(n):
		(x0, y0) = polygon[i]
		(x1, y1) = polygon[(i+1) % n]
		s += x0*y1 - x1*y0
	return s / 2


def area(polygon):
	return abs(signed_area(polygon))


def is_clockwise(polygon):
	return signed_area(polygon) < 0


def edges(polygon):
	'''Returns the list of (start, end) edges of the polygon.'''
	polygon = dedupe(polygon)
	n = len(polygon)
	if n < 2:
		return []
	return [(polygon[i], polygon[(i+1) % n]) for i in range(n)]


def on_segment(p, a, b):
	'''Returns True when p lies on the closed segment ab.'''
	(p, a, b) = (point(p), point(a), point(b))
	if cross(a, b, p) != 0:
		return False
	return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def contains(polygon, p):
	'''Returns True when p lies in the closed convex polygon.'''
	polygon = dedupe(polygon)
	p = point(p)
	if len(polygon) == 1:
		return polygon[0] == p
	if signed_area(polygon) == 0:
		return any(on_segment(p, a, b) for (a, b) in edges(polygon))
	sign = 1 if signed_area(polygon) > 0 else -1
	return all(sign * cross(a, b, p) >= 0 for (a, b) in edges(polygon))


def rectangle(x_min, x_max, y_min, y_max):
	'''Returns the counter clockwise rectangle with the given bounds.'''
	return [point(p) for p in ((x_min, y_min), (x_max, y_min), (x_max, y_max), (x_min, y_max))]


def _line_intersection(p, q, a, b):
	'''Intersection of the segment pq with the (infinite) line through ab.'''
	d1 = cross(a, b, p)
	d2 = cross(a, b, q)
	t = d1 / (d1 - d2)
	return (p[0] + t*(q[0]-p[0]), p[1] + t*(q[1]-p[1]))


def clip(subject, clipper):
	'''Clips the polygon subject against the convex polygon clipper
	(Sutherland-Hodgman). Returns the, possibly empty, list of vertices.
	'''
	clipper = dedupe(clipper)
	output = dedupe(subject)
	if signed_area(clipper) == 0:
		return []
	sign = 1 if signed_area(clipper) > 0 else -1
	for (a, b) in edges(clipper):
		if not output:
			break
		points = output
		output = []
		for i in range(len(points)):
			p = points[i]
			q = points[(i+1) % len(points)]
			p_in = sign * cross(a, b, p) >= 0
			q_in = sign * cross(a, b, q) >= 0
			if p_in:
				output.append(p)
				if not q_in:
					output.append(_line_intersection(p, q, a, b))
			elif q_in:
				output.append(_line_intersection(p, q, a, b))
		output = dedupe(output)
	return output


def intersection_area(first, second):
	'''Returns the area of the intersection of two convex polygons.'''
	clipped = clip(first, second)
	if len(clipped) < 3:
		return Fraction(0)
	return area(clipped)


def segment_intersection(p, q, a, b):
	'''Returns the intersection of the closed segments pq and ab: None, a
	single point (x, y) or a segment ((x0, y0), (x1, y1)) with sorted end
	points.
	'''
	(p, q, a, b) = (point(p), point(q), point(a), point(b))
	d = (q[0]-p[0])*(b[1]-a[1]) - (q[1]-p[1])*(b[0]-a[0])
	if d != 0:
		t = ((a[0]-p[0])*(b[1]-a[1]) - (a[1]-p[1])*(b[0]-a[0])) / d
		s = ((a[0]-p[0])*(q[1]-p[1]) - (a[1]-p[1])*(q[0]-p[0])) / d
		if 0 <= t <= 1 and 0 <= s <= 1:
			return (p[0] + t*(q[0]-p[0]), p[1] + t*(q[1]-p[1]))
		return None
	if cross(p, q, a) != 0:
		return None
	shared = sorted(set([x for x in (p, q) if on_segment(x, a, b)] + [x for x in (a, b) if on_segment(x, p, q)]))
	if not shared:
		return None
	if len(shared) == 1:
		return shared[0]
	return (shared[0], shared[-1])


def contact(first, second):
	'''Returns the boundary contact of two convex polygons with disjoint
	interiors as a sorted tuple of points: empty, one point or the two end
	points of a common segment.
	'''
	points = set()
	for (p, q) in edges(first):
		for (a, b) in edges(second):
			x = segment_intersection(p, q, a, b)
			if x is None:
				continue
			if isinstance(x[0], tuple):
				points.update(x)
			else:
				points.add(x)
	points = sorted(points)
	if len(points) <= 1:
		return tuple(points)
	return (points[0], points[-1])


def is_side(polygon, a, b):
	'''Returns True when ab (in any direction) is an edge of the polygon.'''
	(a, b) = (point(a), point(b))
	return any(set([p, q]) == set([a, b]) for (p, q) in edges(polygon))
