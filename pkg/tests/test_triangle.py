#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import logging
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, assume, strategies as st

from tropigeo import polygon
from tropigeo.core import NEG_INF, trop_add, trop_mul
from tropigeo.plane import ProjPoint, AffinePoint, chart_embed, chart_extract, collinear, cross_product
from tropigeo.triangle import (TRANSVERSAL, GOOD_IMPROPER, NOT_GOOD, COLLINEAR, DEGENERATE,
	Violations, thm1_violations, thm1_relabel, best_labeling, thm2_check, is_good, is_proper,
	dfn1_transversal, classify, corollary_value, coordinate_permanent, hexagon_of, point_in_hexagon,
	lattice_lengths, check_closure, HexParams, params_complete, hexagon_walk, triangle_from_params,
	span_membership, independent, CollapsePattern, collapse_pattern, candidate_patterns,
	enumerate_improper_types)
from tropigeo.errors import DomainError

from tests.strategies import affine_points, distinct_affine_triples, valid_params


def P(*coords):
	return ProjPoint(coords)


# transversal, the labeling a, c, b makes the strict inequalities hold
EX2 = (P(-3, -1, 0), P(0, 0, 0), P(-1, 2, 0))

# good improper triangles
EX3_ODD = (P(0, 0, 0), P(1, 1, 0), P(0, 1, 0))
EX3_EVEN = (P(1, 1, 0), P(0, 0, 0), P(1, 0, 0))

# regular coordinate matrix, but no labeling satisfies the inequalities
SKEW = (P(0, 0, 0), P(3, 9, 0), P(2, 1, 0))


def embedded(triple):
	return [chart_embed(3, p) for p in triple]


def test_thm1_relabel():
	r = thm1_relabel((-3, -1), (0, 0), (-1, 2))
	assert r.labeling == (0, 2, 1)
	assert (r.a, r.b, r.c) == ((-3, -1), (-1, 2), (0, 0))
	assert r.violations == Violations(0, 0)
	assert thm1_relabel((0, 0), (3, 9), (2, 1)) is None
	with pytest.raises(DomainError):
		thm1_relabel((0, 0), (0, 0), (1, 2))
	with pytest.raises(DomainError):
		thm1_relabel((0, 0), (NEG_INF, 0), (1, 2))


def test_violations():
	assert thm1_violations((0, 0), (3, 9), (2, 1), (0, 1, 2)) == Violations(1, 1)
	r = best_labeling((0, 0), (3, 9), (2, 1))
	assert r.labeling == (0, 1, 2)
	assert r.violations == Violations(1, 1)
	# ties are strict but not weak violations
	assert thm1_violations((0, 0), (0, 1), (1, 1), (0, 1, 2)).weak < thm1_violations((0, 0), (0, 1), (1, 1), (0, 1, 2)).strict


def test_thm2_check():
	assert thm2_check(*EX2) == (0, 2, 1)
	assert thm2_check(*SKEW) is None
	assert thm2_check(*EX3_ODD) is None
	with pytest.raises(DomainError):
		thm2_check(P(0, 0, NEG_INF), P(0, 0, 0), P(1, 2, 0))


def test_classify_transversal():
	t = classify(*EX2)
	assert t.kind == TRANSVERSAL
	assert t.relabeling == (0, 2, 1)
	assert t.pattern is None
	assert is_good(*EX2)
	assert is_proper(*EX2)
	assert dfn1_transversal(*EX2)


def test_classify_improper():
	t = classify(*EX3_ODD)
	assert t.kind == GOOD_IMPROPER
	assert str(t.pattern) == '{1,3,5}'
	assert is_good(*EX3_ODD)
	assert not is_proper(*EX3_ODD)
	assert not dfn1_transversal(*EX3_ODD)

	t = classify(*EX3_EVEN)
	assert t.kind == GOOD_IMPROPER
	assert t.pattern == CollapsePattern([2, 4, 6])

	for triple in (EX3_ODD, EX3_EVEN):
		d = coordinate_permanent(*triple)
		assert (d.value, d.regular) == (2, True)


def test_classify_degenerate():
	assert classify(P(0, 0, 0), P(1, 1, 0), P(2, 2, 0)).kind == COLLINEAR
	assert classify(P(0, 0, 0), P(0, 0, 0), P(2, 1, 0)).kind == DEGENERATE
	assert classify(P(0, 0, 0), P(1, 1, 1), P(2, 1, 0)).reason == 'repeated point'
	assert classify(P(0, 0, NEG_INF), P(0, 0, 0), P(2, 1, 0)).reason == 'boundary point'
	with pytest.raises(DomainError):
		is_good(P(0, 0, 0), P(1, 1, 0), P(2, 2, 0))


def test_skew_triangle():
	assert coordinate_permanent(*SKEW).value == 11
	assert not collinear(*SKEW)
	assert classify(*SKEW).kind != TRANSVERSAL
	assert not dfn1_transversal(*SKEW)
	assert independent(list(SKEW))


@settings(max_examples=1000)
@given(distinct_affine_triples)
def test_transversality_agrees(triple):
	points = embedded(triple)
	assume(not collinear(*points))
	t = classify(*points)
	r = thm1_relabel(*triple)
	labeling = thm2_check(*points)
	assert (r is None) == (labeling is None)
	if r is not None:
		assert r.labeling == labeling
	assert (t.kind == TRANSVERSAL) == (labeling is not None)
	assert (t.kind == TRANSVERSAL) == dfn1_transversal(*points)
	assert t.kind in (TRANSVERSAL, GOOD_IMPROPER, NOT_GOOD)


def test_corollary_value():
	(value, matches) = corollary_value(*EX2)
	assert value == EX2[0]
	assert matches == ['a']
	(value, matches) = corollary_value(*EX3_ODD)
	assert value == EX3_ODD[0]
	assert matches == ['a', '-(a*b)']


def test_hexagon_of_transversal():
	h = hexagon_of(*EX2)
	assert h.labeling == (0, 2, 1)
	assert h.vertices == ((-3, -1), (-3, 0), (-1, 2), (0, 2), (0, 0), (-1, -1))
	assert h.lengths == (1, 2, 1, 2, 1, 2)
	assert h.chart == 3
	assert check_closure(h.lengths)
	assert lattice_lengths(h.vertices) == h.lengths
	assert point_in_hexagon((-1, 0), h)
	assert point_in_hexagon((0, 1), h)
	assert not point_in_hexagon((1, 1), h)


def test_hexagon_of_improper():
	h = hexagon_of(*EX3_ODD)
	assert h.labeling == (0, 2, 1)
	assert h.lengths == (1, 0, 1, 0, 1, 0)
	assert best_labeling(*[chart_extract(3, p) for p in EX3_ODD]).labeling == (0, 2, 1)
	with pytest.raises(DomainError):
		hexagon_of(P(0, 0, 0), P(1, 1, 0), P(2, 2, 0))


def test_params():
	p = HexParams([1, 2, 1, 2, 1, 2])
	assert not p.is_symmetric()
	assert HexParams([1] * 6).is_symmetric()
	assert HexParams([1] * 6).projectively_equal(HexParams([2] * 6))
	assert not HexParams([1] * 6).projectively_equal(p)
	assert params_complete(1, 2, 1, 1) == p
	assert params_complete('1/2', 1, 1, '1/2').lengths == (Fraction(1, 2), 1, 1, 1, Fraction(1, 2), Fraction(3, 2))
	for lengths in ([0, 1, 1, 0, 1, 1], [1, 1, 1, 1, 1, 2], [1, 1, 1]):
		with pytest.raises(DomainError):
			HexParams(lengths)
	with pytest.raises(DomainError):
		params_complete(1, 1, 1, 2)
	with pytest.raises(DomainError):
		params_complete(0, 1, 1, '1/2')


def test_hexagon_walk():
	walk = hexagon_walk([1, 2, 1, 2, 1, 2], (-3, -1))
	assert walk == ((-3, -1), (-3, 0), (-1, 2), (0, 2), (0, 0), (-1, -1))
	assert all(isinstance(v, AffinePoint) for v in walk)
	with pytest.raises(DomainError):
		hexagon_walk([1, 1, 1, 1, 1, 2])


def test_triangle_from_params():
	(a, b, c) = triangle_from_params([1, 2, 1, 2, 1, 2], base=(-3, -1))
	assert (a, b, c) == (EX2[0], EX2[2], EX2[1])
	(a, b, c) = triangle_from_params([1] * 6)
	assert [chart_extract(3, p) for p in (a, b, c)] == [(0, 0), (1, 2), (2, 1)]
	assert classify(a, b, c).kind == TRANSVERSAL


@given(valid_params())
def test_params_round_trip(params):
	triangle = triangle_from_params(params)
	t = classify(*triangle)
	assert t.kind == TRANSVERSAL
	assert t.relabeling == (0, 1, 2)
	h = hexagon_of(*triangle)
	assert h.lengths == params.lengths
	assert h.vertices[0] == (0, 0)


def test_span_examples():
	r = span_membership(P(0, 2, 0), [P(0, 0, 0), P(-1, 2, 0)])
	assert r.member
	assert r.witness == (0, 0)
	r = span_membership(P(-1, 0, 0), EX2)
	assert r.member
	assert r.witness == (0, -1, -2)
	r = span_membership(P(5, 5, 0), EX2)
	assert not r.member
	assert r.witness is None
	with pytest.raises(DomainError):
		span_membership(P(0, 0, 0), [P(1, 2, 0)])
	with pytest.raises(DomainError):
		span_membership(P(0, 0, NEG_INF), EX2)


def test_span_contains_generators():
	for p in EX2:
		assert span_membership(p, EX2).member


@settings(max_examples=200)
@given(valid_params(), affine_points)
def test_span_is_hexagon(params, u):
	'''The span of a transversal triangle is its hexagon.'''
	triangle = triangle_from_params(params)
	h = hexagon_of(*triangle)
	assert span_membership(chart_embed(3, u), triangle).member == point_in_hexagon(u, h)


@settings(max_examples=30)
@given(valid_params())
def test_span_of_two_vertices(params):
	'''The span of b and c is the segment from b over -(b*c) to c.'''
	(b, c) = triangle_from_params(params)[1:]
	(bb, cc) = (chart_extract(3, b), chart_extract(3, c))
	m = chart_extract(3, cross_product(b, c).neg())
	assert m == (cc[0], bb[1])
	for (p, q) in ((bb, m), (m, cc)):
		for k in range(9):
			t = Fraction(k, 8)
			u = (p[0] + t*(q[0] - p[0]), p[1] + t*(q[1] - p[1]))
			assert span_membership(chart_embed(3, u), [b, c]).member, u

	(x0, x1) = (min(bb[0], cc[0]) - 1, max(bb[0], cc[0]) + 1)
	(y0, y1) = (min(bb[1], cc[1]) - 1, max(bb[1], cc[1]) + 1)
	for i in range(17):
		for j in range(17):
			u = (x0 + (x1 - x0)*Fraction(i, 16), y0 + (y1 - y0)*Fraction(j, 16))
			expected = polygon.on_segment(u, bb, m) or polygon.on_segment(u, m, cc)
			assert span_membership(chart_embed(3, u), [b, c]).member == expected, u


@given(valid_params(), st.fractions(min_value=-10, max_value=10, max_denominator=4))
def test_combination_outside_breakpoints(params, mu):
	'''b + mu*c collapses to b below both breakpoints and to c above them.'''
	(b, c) = triangle_from_params(params)[1:]
	(bn, cn) = (b.normalized(3), c.normalized(3))
	(lo, hi) = sorted((bn[0] - cn[0], bn[1] - cn[1]))
	assert lo < 0 < hi
	assume(mu < lo or mu > hi)
	r = ProjPoint([trop_add(x, trop_mul(mu, y)) for (x, y) in zip(bn, cn)])
	assert r == (b if mu < lo else c)


def test_independent():
	assert independent(list(EX2))
	assert independent([P(0, 0, 0)])
	assert not independent([P(0, 0, 0), P(1, 1, 0), P(2, 2, 0)])
	assert not independent(list(EX2) + [P(-1, 0, 0)])
	with pytest.raises(DomainError):
		independent([P(i, 0, 0) for i in range(5)])
	with pytest.raises(DomainError):
		independent([P(0, 0, 0), P(1, 1, 1)])


def test_collapse_pattern():
	p = CollapsePattern([5, 1, 3])
	assert str(p) == '{1,3,5}'
	assert list(p) == [1, 3, 5]
	assert len(p) == 3
	assert p.respects_vertices()
	assert p.merging_sides() is None
	assert not CollapsePattern([1, 6]).respects_vertices()
	assert CollapsePattern([1, 2, 4]).merging_sides() == (1, 2)
	assert CollapsePattern([1]) < CollapsePattern([1, 3])
	with pytest.raises(DomainError):
		CollapsePattern([7])
	assert collapse_pattern(*EX2) == CollapsePattern()
	assert collapse_pattern(*EX3_ODD) == CollapsePattern([1, 3, 5])
	with pytest.raises(DomainError):
		collapse_pattern(P(0, 0, 0), P(1, 1, 0), P(2, 2, 0))


def test_candidate_patterns():
	candidates = candidate_patterns()
	assert len(candidates) == 26
	assert len(set(candidates)) == 26
	assert all(c.respects_vertices() for c in candidates)
	assert [len(c) for c in candidates] == sorted(len(c) for c in candidates)


def test_enumerate_improper_types(caplog):
	with caplog.at_level(logging.WARNING):
		result = enumerate_improper_types()
	assert result.count == 17
	assert result.claimed == 14
	assert len(result.types) == 17
	assert len(result.rejected) == 9
	assert all('merges' in r.reason for r in result.rejected)
	assert len([r for r in caplog.records if r.levelno == logging.WARNING]) == 9

	patterns = [t.pattern for t in result.types]
	assert CollapsePattern([1, 3, 5]) in patterns
	assert CollapsePattern([2, 4, 6]) in patterns
	assert CollapsePattern([1, 2]) not in patterns

	for t in result.types:
		assert all(l >= 0 for l in t.lengths)
		assert check_closure(t.lengths)
		c = classify(*t.triangle)
		assert (c.kind, c.pattern) == (GOOD_IMPROPER, t.pattern)

	for (pattern, neighbours) in result.graph.items():
		for other in neighbours:
			assert pattern in result.graph[other]
			assert len(pattern.collapsed ^ other.collapsed) == 1


def test_witness_135():
	result = enumerate_improper_types()
	witness = [t for t in result.types if t.pattern == CollapsePattern([1, 3, 5])][0]
	assert witness.lengths == (0, 1, 0, 1, 0, 1)
	assert [chart_extract(3, p) for p in witness.triangle] == [(0, 0), (1, 1), (1, 0)]


def test_not_good_example():
	(a, b, c) = (P(-1, 1, 0), P(0, 0, 0), P(-1, 2, 0))
	ab = cross_product(a, b)
	bc = cross_product(b, c)
	assert ab == P(0, -1, 0)
	assert bc == P(0, -2, 0) == P(2, 0, 2)
	assert cross_product(ab, bc) == P(-1, 0, -1) == ab.neg()
	assert cross_product(ab, bc) != b
	d = coordinate_permanent(a, b, c)
	assert (d.value, d.regular) == (2, True)
	assert not collinear(a, b, c)
	assert not is_good(a, b, c)
	assert classify(a, b, c).kind == NOT_GOOD


def test_sides_meet_at_vertices():
	(a, b, c) = EX2
	(ab, bc, ca) = (cross_product(a, b), cross_product(b, c), cross_product(c, a))
	assert cross_product(ca, ab) == a
	assert cross_product(ab, bc) == b
	assert cross_product(bc, ca) == c


def test_transversality_on_grid():
	grid = [(x, y) for x in range(4) for y in range(4)]
	for triple in itertools.combinations(grid, 3):
		points = embedded(triple)
		if collinear(*points):
			continue
		transversal = thm1_relabel(*triple) is not None
		assert transversal == dfn1_transversal(*points), triple
		assert transversal == (classify(*points).kind == TRANSVERSAL), triple


@settings(max_examples=1000)
@given(distinct_affine_triples)
def test_corollary_trichotomy(triple):
	points = embedded(triple)
	assume(not collinear(*points))
	(value, matches) = corollary_value(*points)
	assert matches


@settings(max_examples=100)
@given(valid_params())
def test_span_on_grid(params):
	triangle = triangle_from_params(params)
	h = hexagon_of(*triangle)
	xs = [x for (x, _) in h.vertices]
	ys = [y for (_, y) in h.vertices]
	(x0, y0) = (min(xs) - 1, min(ys) - 1)
	(dx, dy) = ((max(xs) + 1 - x0) / 7, (max(ys) + 1 - y0) / 7)
	for i in range(8):
		for j in range(8):
			u = (x0 + i*dx, y0 + j*dy)
			assert span_membership(chart_embed(3, u), triangle).member == point_in_hexagon(u, h), u

	(a, b, c) = [chart_extract(3, p) for p in triangle]
	d = coordinate_permanent(*triangle)
	assert d.regular
	assert d.value == c[0] + b[1]


@settings(max_examples=200)
@given(valid_params())
def test_params_reproduced(params):
	h = hexagon_of(*triangle_from_params(params, base=(1, -2)))
	assert HexParams(h.lengths) == params
	assert h.vertices[0] == (1, -2)
	(l1, l2, l3) = params.lengths[:3]
	with pytest.raises(DomainError):
		params_complete(l1, l2, l3, min(l1 + l2, l2 + l3))
	with pytest.raises(DomainError):
		params_complete(l1, l2, l3, 0)


def test_singleton_patterns_realized():
	patterns = [t.pattern for t in enumerate_improper_types().types]
	for side in range(1, 7):
		assert CollapsePattern([side]) in patterns
