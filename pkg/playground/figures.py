#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Creates a set of sample figures using the tropigeo package.

Description
-----------
Renders a tropical line, a transversal triangle with its hexagon, a
triangle that is not good and two hexagon tilings into SVG files. Render
settings are taken from the given configuration file.

Usage
-----
Start with:
    python figures.py [options]

Available options:
    -h | --help     prints this help message.

    -o | --out      [optional] output directory (default: current directory)

    -c | --config   [optional] configuration file (default: tropigeo.ini)
'''


import os
import sys
import getopt
import logging

from tropigeo import config, svg, textio
from tropigeo.plane import ProjPoint
from tropigeo.triangle import HexParams, classify
from tropigeo.tess import Region, generate_tiling


def usage():
	print(__doc__)


def figures(cfg):
	'''Returns the (file name, scene) pairs to be rendered.'''
	margin = textio.parse_scalar(cfg['margin'])
	style = cfg['style']
	transversal = [ProjPoint(p) for p in ([-3, -1, 0], [0, 0, 0], [-1, 2, 0])]
	not_good = [ProjPoint(p) for p in ([-1, 1, 0], [0, 0, 0], [-1, 2, 0])]
	logging.info("%s and %s" % (classify(*transversal).kind, classify(*not_good).kind))
	region = Region(0, 6, 0, 6)
	return [
		('line.svg', svg.line_scene([0, 0, 0], margin, style)),
		('transversal.svg', svg.triangle_scene(*transversal, margin=margin, style=style)),
		('not_good.svg', svg.triangle_scene(*not_good, margin=margin, style=style)),
		('tiling.svg', svg.tiling_scene(generate_tiling(HexParams([1] * 6), region), style)),
		('tiling123.svg', svg.tiling_scene(generate_tiling(HexParams([1, 2, 3, 1, 2, 3]), region), style)),
	]


def main(argv=sys.argv[1:]):
	logging.basicConfig(level=logging.INFO, format=' %(message)s')
	out = '.'
	fname = None
	try:
		opts, args = getopt.getopt(argv, 'ho:c:', ['help', 'out=', 'config='])
		for opt, arg in opts:
			if opt in ('-h', '--help'):
				usage()
				return 0
			elif opt in ('-o', '--out'):
				out = arg
			elif opt in ('-c', '--config'):
				fname = arg
	except getopt.GetoptError as err:
		print(str(err))
		usage()
		return 2

	cfg = config.get_config(fname)
	for (name, scene) in figures(cfg):
		path = os.path.join(out, name)
		with open(path, 'w') as f:
			textio.write(svg.render(scene, cfg['scale'], cfg['point_radius']).rstrip('\n'), f)
		logging.info("created '%s'" % path)
	return 0


if __name__ == "__main__":
	sys.exit(main())

