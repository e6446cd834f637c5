#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
The tropical semifield, tropical matrices and tropical polynomials.

Description
-----------
Scalars of the tropical semifield are exact rational numbers
(*fractions.Fraction*) or the bottom element *NEG_INF*. Tropical addition
is the maximum, tropical multiplication the classical sum; *NEG_INF* is
neutral for the former and absorbing for the latter. Floating point values
are refused everywhere, ties must be detected exactly.

Matrices provide the tropical determinant (a permanent over the max-plus
semiring) together with the number of optimal permutations; a matrix is
tropically regular when exactly one permutation attains a finite maximum.

Polynomials are stored as a mapping from exponent tuples to finite
coefficients and can be evaluated at a point, homogenized and asked for
their degree.

Usage
-----
::

    from tropigeo.core import scalar, trop_det, TropMatrix

    A = TropMatrix([[0, 0, 0], [3, 9, 0], [2, 1, 0]])
    d = trop_det(A)
    print(d.value, d.regular)   # 11 True
'''


import logging
import itertools
import collections
from fractions import Fraction

from tropigeo import config
from tropigeo.errors import ParseError, DomainError, BoundError


class NegInf(object):
	'''The bottom element of the tropical semifield; there is only one.'''

	_instance = None

	def __new__(cls):
		if cls._instance is None:
			cls._instance = object.__new__(cls)
		return cls._instance

	def __reduce__(self):
		return (NegInf, ())

	def __copy__(self):
		return self

	def __deepcopy__(self, memo):
		return self

	def __repr__(self):
		return 'NEG_INF'

	def __str__(self):
		return '-inf'

	def __hash__(self):
		return hash('-inf')

	def _comparable(self, other):
		return other is self or isinstance(other, (int, Fraction))

	def __eq__(self, other):
		return other is self

	def __ne__(self, other):
		return other is not self

	def __lt__(self, other):
		if not self._comparable(other):
			return NotImplemented
		return other is not self

	def __le__(self, other):
		if not self._comparable(other):
			return NotImplemented
		return True

	def __gt__(self, other):
		if not self._comparable(other):
			return NotImplemented
		return False

	def __ge__(self, other):
		if not self._comparable(other):
			return NotImplemented
		return other is self

	def __add__(self, other):
		if not self._comparable(other):
			return NotImplemented
		return self

	__radd__ = __add__


NEG_INF = NegInf()


def is_finite(x):
	'''Returns True when the scalar differs from the bottom element.'''
	return x is not NEG_INF


def scalar(value):
	'''Converts the given value into a tropical scalar.

	Accepted are integers, fractions, the bottom element itself and text
	holding a decimal number, a rational 'p/q' or the token '-inf' (in any
	case).

	:param value: the value to convert
	:type value: int, Fraction, str or NegInf

	:returns: Fraction or NEG_INF
	'''
	if value is NEG_INF:
		return value
	if isinstance(value, float):
		raise TypeError("floating point value %r refused, use exact rationals" % value)
	if isinstance(value, Fraction):
		return value
	if isinstance(value, int):
		return Fraction(value)
	if isinstance(value, str):
		text = value.strip()
		if text.lower() == '-inf':
			return NEG_INF
		try:
			return Fraction(text)
		except (ValueError, ZeroDivisionError):
			raise ParseError("invalid scalar '%s'" % value)
	raise TypeError("cannot convert %r into a tropical scalar" % (value,))


def trop_add(x, y):
	'''Tropical sum; the maximum of both scalars.'''
	return max(scalar(x), scalar(y))


def trop_mul(x, y):
	'''Tropical product; the classical sum, absorbing at NEG_INF.'''
	x = scalar(x)
	y = scalar(y)
	if x is NEG_INF or y is NEG_INF:
		return NEG_INF
	return x + y


def trop_pow(x, k):
	'''Returns the k-th tropical power of x, i.e. k times x.

	The zero power is the tropical unit 0, also for NEG_INF.
	'''
	if not isinstance(k, int) or k < 0:
		raise DomainError("tropical power requires a natural exponent, got %r" % (k,))
	x = scalar(x)
	if k == 0:
		return Fraction(0)
	if x is NEG_INF:
		return NEG_INF
	return k * x


def trop_sum(values):
	'''Tropical sum over an iterable; NEG_INF when it is empty.'''
	result = NEG_INF
	for value in values:
		result = trop_add(result, value)
	return result


def trop_prod(values):
	'''Tropical product over an iterable; 0 when it is empty.'''
	result = Fraction(0)
	for value in values:
		result = trop_mul(result, value)
	return result


class TropMatrix(object):
	'''Rectangular matrix of tropical scalars.

	:param rows: row-major nested sequence of scalars
	:type rows: list
	'''
	def __init__(self, rows):
		rows = [list(row) for row in rows]
		if not len(rows) or not len(rows[0]):
			raise DomainError("matrix must have at least one row and one column")
		cols = len(rows[0])
		for (i, row) in enumerate(rows):
			if len(row) != cols:
				raise DomainError("matrix row %i has %i entries, expected %i" % (i+1, len(row), cols))
		self.entries = tuple(tuple(scalar(x) for x in row) for row in rows)
		self.rows = len(rows)
		self.cols = cols

	def __repr__(self):
		return 'TropMatrix(%r)' % ([list(row) for row in self.entries],)

	def __eq__(self, other):
		return isinstance(other, TropMatrix) and self.entries == other.entries

	def __ne__(self, other):
		return not self.__eq__(other)

	def __hash__(self):
		return hash(self.entries)

	def __getitem__(self, index):
		(i, j) = index
		return self.entries[i][j]

	def is_square(self):
		return self.rows == self.cols

	def is_finite(self):
		'''Returns True when no entry equals NEG_INF.'''
		return all(is_finite(x) for row in self.entries for x in row)

	def transpose(self):
		return TropMatrix(zip(*self.entries))

	def minor(self, j):
		'''Returns the matrix with (zero based) column j removed.'''
		if not 0 <= j < self.cols or self.cols < 2:
			raise DomainError("cannot remove column %i from a %ix%i matrix" % (j, self.rows, self.cols))
		return TropMatrix([row[:j] + row[j+1:] for row in self.entries])

	def add_to_row(self, i, value):
		'''Returns a copy with the scalar value tropically multiplied onto row i.'''
		rows = [list(row) for row in self.entries]
		rows[i] = [trop_mul(x, value) for x in rows[i]]
		return TropMatrix(rows)


Permanent = collections.namedtuple('Permanent', 'value optimal_count regular optimal')
'''Tropical determinant of a square matrix; *optimal* lists the permutations
attaining *value*, *regular* is True when there is exactly one and *value*
is finite.'''


def permanent_terms(A, max_n=None):
	'''Returns a list of (permutation, value) for every permutation of the
	columns of the square matrix A.

	:param A: square matrix
	:type A: TropMatrix
	:param max_n: dimension bound, see :func:`tropigeo.config.max_n`
	:type max_n: int
	'''
	if not A.is_square():
		raise DomainError("tropical determinant requires a square matrix, got %ix%i" % (A.rows, A.cols))
	bound = config.max_n(max_n)
	if A.rows > bound:
		raise BoundError("matrix dimension %i exceeds bound max_n=%i" % (A.rows, bound))
	terms = []
	for sigma in itertools.permutations(range(A.rows)):
		terms.append((sigma, trop_prod(A.entries[i][sigma[i]] for i in range(A.rows))))
	return terms


def trop_det(A, max_n=None):
	'''Returns the tropical determinant of A as a :class:`Permanent`.

	A determinant equal to NEG_INF is reported as singular.

	:param A: square matrix
	:type A: TropMatrix
	:param max_n: dimension bound
	:type max_n: int
	'''
	terms = permanent_terms(A, max_n)
	value = trop_sum(v for (_, v) in terms)
	optimal = [sigma for (sigma, v) in terms if v == value]
	regular = len(optimal) == 1 and value is not NEG_INF
	logging.debug("permanent n=%i value=%s optimal=%i regular=%s" % (A.rows, value, len(optimal), regular))
	return Permanent(value, len(optimal), regular, optimal)


class TropPolynomial(object):
	'''Tropical polynomial in *num_vars* variables.

	Terms with coefficient NEG_INF are dropped; at least one finite term must
	remain.

	:param num_vars: number of variables
	:type num_vars: int
	:param terms: mapping from exponent tuples to coefficients
	:type terms: dict
	'''
	def __init__(self, num_vars, terms):
		if num_vars < 0:
			raise DomainError("number of variables must be natural, got %i" % num_vars)
		self.num_vars = num_vars
		self.terms = {}
		for (exponents, coefficient) in dict(terms).items():
			exponents = tuple(exponents)
			if len(exponents) != num_vars:
				raise DomainError("exponent %r does not match %i variables" % (exponents, num_vars))
			if any((not isinstance(e, int)) or e < 0 for e in exponents):
				raise DomainError("exponent %r is not a tuple of naturals" % (exponents,))
			coefficient = scalar(coefficient)
			if coefficient is not NEG_INF:
				self.terms[exponents] = coefficient
		if not self.terms:
			raise DomainError("polynomial has no finite term")

	def __repr__(self):
		return 'TropPolynomial(%i, %r)' % (self.num_vars, self.terms)

	def __eq__(self, other):
		return isinstance(other, TropPolynomial) and (self.num_vars, self.terms) == (other.num_vars, other.terms)

	def __ne__(self, other):
		return not self.__eq__(other)

	def total_degrees(self):
		return set(sum(e) for e in self.terms)

	def is_homogeneous(self):
		return len(self.total_degrees()) == 1


Evaluation = collections.namedtuple('Evaluation', 'value attaining_terms on_variety')


def poly_eval(p, pt):
	'''Evaluates the polynomial p at the point pt.

	The point belongs to the tropical hypersurface of p when the maximum is
	finite and attained by at least two terms.

	:param p: the polynomial
	:type p: TropPolynomial
	:param pt: one scalar per variable
	:type pt: tuple

	:returns: :class:`Evaluation`
	'''
	pt = tuple(scalar(x) for x in pt)
	if len(pt) != p.num_vars:
		raise DomainError("point has %i coordinates, polynomial has %i variables" % (len(pt), p.num_vars))
	values = []
	for (exponents, coefficient) in p.terms.items():
		values.append(trop_prod([coefficient] + [trop_pow(x, e) for (x, e) in zip(pt, exponents)]))
	value = trop_sum(values)
	attaining = len([v for v in values if v == value])
	return Evaluation(value, attaining, attaining >= 2 and value is not NEG_INF)


Homogenized = collections.namedtuple('Homogenized', 'polynomial degree')


def homogenize_and_degree(p):
	'''Returns the homogenization of p and its degree.

	A homogeneous polynomial is returned unchanged, otherwise every term is
	padded with a new last variable up to the maximal total degree d. The
	degree is d when every pure power of degree d carries a finite
	coefficient, None otherwise.

	:param p: the polynomial
	:type p: TropPolynomial

	:returns: :class:`Homogenized`
	'''
	d = max(p.total_degrees())
	if p.is_homogeneous():
		P = p
	else:
		terms = dict((e + (d - sum(e),), c) for (e, c) in p.terms.items())
		P = TropPolynomial(p.num_vars + 1, terms)

	pure = []
	for k in range(P.num_vars):
		pure.append(tuple(d if i == k else 0 for i in range(P.num_vars)))
	degree = d if all(e in P.terms for e in pure) else None
	logging.debug("homogenized %i -> %i variables, degree=%s" % (p.num_vars, P.num_vars, degree))
	return Homogenized(P, degree)
