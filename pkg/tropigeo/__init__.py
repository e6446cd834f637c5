#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import os

version = "0.1.0"
location = os.path.abspath(os.path.dirname(__file__))


from tropigeo.errors import TropError, ParseError, DomainError, BoundError
from tropigeo.core import (NEG_INF, scalar, trop_add, trop_mul, trop_pow, trop_sum, trop_prod,
	TropMatrix, trop_det, TropPolynomial, poly_eval, homogenize_and_degree)
from tropigeo.plane import (AffinePoint, ProjPoint, TropLine, chart_embed, chart_extract, is_interior,
	cross_product, stable_join, stable_intersection, incident, line_geometry, points_transversal,
	lines_transversal, collinear, cramer_intersection)
from tropigeo.triangle import (classify, thm1_relabel, thm2_check, is_good, is_proper, hexagon_of,
	HexParams, params_complete, triangle_from_params, span_membership, independent, collapse_pattern,
	enumerate_improper_types)
from tropigeo.tess import Region, generate_tiling, validate_tiling
