#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Exceptions raised by the *tropigeo* kernel and command line.

The command line maps them onto exit statuses: *ParseError* to 2,
*DomainError* (and *BoundError*) to 3.
'''


class TropError(Exception):
	'''Base class of all tropigeo errors.'''
	pass


class ParseError(TropError):
	'''Malformed textual input; e.g. a point, matrix or scalar that cannot be read.'''
	pass


class DomainError(TropError):
	'''Mathematically invalid request; e.g. a boundary point where an interior
	point is required, repeated points or invalid hexagon parameters.'''
	pass


class BoundError(DomainError):
	'''Matrix dimension above the configured permanent bound.'''
	pass
