#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from fractions import Fraction

import pytest
from hypothesis import given, settings

from tropigeo import polygon
from tropigeo.plane import ProjPoint, chart_embed, chart_extract
from tropigeo.triangle import HexParams, params_complete, hexagon_walk
from tropigeo.tess import Region, Cell, generate_tiling, validate_tiling
from tropigeo.errors import DomainError

from tests.strategies import positive


UNIT = HexParams([1] * 6)


def by_index(tiling):
	return dict((cell.index, cell) for cell in tiling.cells)


def pair(lengths, base):
	'''Returns a (hexagon, triangle) cell for the hexagon walked from base.'''
	walk = hexagon_walk(lengths, base)
	return (walk, [chart_embed(3, walk[i]) for i in (0, 2, 4)])


def test_region():
	r = Region(0, 6, '1/2', 2)
	assert r.bounds() == (0, 6, Fraction(1, 2), 2)
	assert r.area() == 9
	assert r.corners()[0] == (0, Fraction(1, 2))
	assert Region(0, 1, 0, 1) == Region('0', '1', '0', '1')
	with pytest.raises(DomainError):
		Region(1, 0, 0, 1)
	with pytest.raises(DomainError):
		Region(0, 1, 1, 1)


def test_lattice():
	tiling = generate_tiling(UNIT, Region(0, 6, 0, 6))
	assert tiling.lattice_u == (2, 1)
	assert tiling.lattice_v == (1, 2)
	assert tiling.base == (0, 0)
	assert tiling.lattice_point(1, -1) == (1, -1)

	tiling = generate_tiling(HexParams([1, 2, 3, 1, 2, 3]), Region(0, 1, 0, 1))
	(u, v) = (tiling.lattice_u, tiling.lattice_v)
	assert (u, v) == ((5, 2), (2, 3))
	hexagon = hexagon_walk([1, 2, 3, 1, 2, 3])
	assert polygon.area(hexagon) == u[0]*v[1] - u[1]*v[0] == 11


def test_generate_unit():
	region = Region(0, 6, 0, 6)
	tiling = generate_tiling(UNIT, region)
	cells = by_index(tiling)
	assert cells[(0, 0)].hexagon.vertices[0] == (0, 0)
	rect = region.corners()
	assert sum(polygon.intersection_area(c.hexagon.vertices, rect) for c in tiling.cells) == 36
	assert all(polygon.intersection_area(c.hexagon.vertices, rect) > 0 for c in tiling.cells)

	inside = sorted(tuple(c.hexagon.vertices[0]) for c in tiling.cells
		if all(region.x_min <= x <= region.x_max and region.y_min <= y <= region.y_max for (x, y) in c.hexagon.vertices))
	assert inside == [(0, 0), (0, 3), (1, 2), (2, 1), (2, 4), (3, 0), (3, 3), (4, 2)]


def test_neighbours_share_vertex():
	tiling = generate_tiling(UNIT, Region(0, 6, 0, 6))
	cells = by_index(tiling)
	(a, b, c) = cells[(0, 0)].triangle
	assert cells[(1, 0)].triangle[0] == c
	assert cells[(0, 1)].triangle[0] == b
	assert cells[(1, -1)].triangle[1] == c


def test_generate_errors():
	with pytest.raises(DomainError):
		generate_tiling(HexParams([1, 2, 1, 2, 1, 2]), Region(0, 6, 0, 6))
	with pytest.raises(DomainError):
		generate_tiling([1, 1, 1, 1, 1, 2], Region(0, 6, 0, 6))


def test_validate_generated():
	region = Region(0, 6, 0, 6)
	report = validate_tiling(generate_tiling(UNIT, region).cells, region)
	assert report.ok
	assert report.failures == []


def test_validate_pairs():
	region = Region(0, 2, 0, 2)
	cells = [pair([1] * 6, (0, 0)), pair([1] * 6, (2, 1)), pair([1] * 6, (1, 2)),
		pair([1] * 6, (-1, 1)), pair([1] * 6, (-2, -1)), pair([1] * 6, (-1, -2)), pair([1] * 6, (1, -1))]
	assert validate_tiling(cells, region).ok


def test_validate_duplicate():
	region = Region(0, 2, 0, 2)
	cell = pair([1] * 6, (0, 0))
	report = validate_tiling([cell, cell], region)
	assert not report.disjoint
	assert not report.ok
	assert 'interiors overlap' in report.failures[0]


def test_validate_half_side():
	region = Region(0, 4, 0, 2)
	report = validate_tiling([pair([1] * 6, (0, 0)), pair([1] * 6, (2, Fraction(1, 2)))], region)
	assert report.disjoint
	assert not report.sides
	assert not report.coverage
	assert not report.ok


def test_validate_not_transversal():
	region = Region(0, 2, 0, 2)
	(hexagon, _) = pair([1] * 6, (0, 0))
	improper = [ProjPoint([0, 0, 0]), ProjPoint([1, 1, 0]), ProjPoint([0, 1, 0])]
	report = validate_tiling([(hexagon, improper)], region)
	assert not report.transversal
	assert 'GoodImproper' in report.failures[0]


def test_validate_swapped_triangles():
	region = Region(0, 2, 0, 2)
	cells = [pair([1] * 6, (0, 0)), pair([1] * 6, (2, 1))]
	assert validate_tiling(cells, region).vertices
	swapped = [(cells[0][0], cells[1][1]), (cells[1][0], cells[0][1])]
	report = validate_tiling(swapped, region)
	assert report.transversal
	assert not report.vertices
	assert not report.ok
	assert 'cell 0: hexagon is not the hexagon of its triangle' in report.failures
	assert 'cell 1: hexagon is not the hexagon of its triangle' in report.failures


def test_validate_errors():
	with pytest.raises(DomainError):
		validate_tiling([], Region(0, 1, 0, 1))
	with pytest.raises(DomainError):
		validate_tiling([42], Region(0, 1, 0, 1))
	with pytest.raises(DomainError):
		validate_tiling([([(0, 0), (1, 1)], [])], Region(0, 1, 0, 1))


@settings(max_examples=15)
@given(positive, positive, positive)
def test_symmetric_tilings_validate(l1, l2, l3):
	params = params_complete(l1, l2, l3, l2)
	assert params.is_symmetric()
	region = Region(0, 5, 0, 5)
	tiling = generate_tiling(params, region)
	assert tiling.cells
	report = validate_tiling(tiling.cells, region)
	assert report.ok, report.failures
	for cell in tiling.cells:
		assert [chart_extract(3, p) for p in cell.triangle] == [cell.hexagon.vertices[i] for i in (0, 2, 4)]
		assert isinstance(cell, Cell)
