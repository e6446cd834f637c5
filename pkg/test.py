#!/usr/bin/env python
# -*- encoding: utf-8 -*-

'''
Summary
-------
Perform sanity test on the tropigeo package in a virtual environment.


Description
-----------
Creates a new clean temporary python virtual environment and installs the
tropigeo package, from the directory containing this script, including its
dependencies. Afterwards following tests are performed on the installed
package:

	- unit tests, using pytest and hypothesis
	- command line tests; each command is executed and its exit status is
	  compared with the expected one
	- creation of figures using the scripts in the playground

When succesfully completed the entire temporary virtual environment used
during the test will be deleted.


Usage
-----
Start with:
    python test.py [options]

Available options:
    -h | --help     prints this help message.

    -p | --python   [optional] specify complete path to python interpreter

    -k | --keep     [optional] do not delete the virtual environment when
                    done.

    -s | --skip-unit
                    [optional] skip the unit tests.
'''


import os
import sys
import stat
import getopt
import subprocess
import tempfile
import logging
import shutil


# (arguments, expected exit status)
COMMANDS = [
	(['--help'], 0),
	(['det', '3', '0,0,0;3,9,0;2,1,0'], 0),
	(['cross', '[-1,1,0]', '[0,0,0]'], 0),
	(['join', '(0,0)', '(1,2)'], 0),
	(['meet', '[0,0,0]', '[0,-1,0]'], 0),
	(['incident', '(0,-5)', '[0,0,0]'], 0),
	(['incident', '(1,2)', '[0,0,0]'], 1),
	(['transversal', '(0,0)', '(0,2)'], 1),
	(['collinear', '(0,0)', '(1,1)', '(2,2)'], 0),
	(['line', '[1,2,3]'], 0),
	(['cramer', '0,0,0,0;1,0,0,0;0,1,0,0'], 0),
	(['poly', '1,0:0;0,1:0;0,0:0', '0,-5'], 0),
	(['classify', '[-3,-1,0]', '[0,0,0]', '[-1,2,0]'], 0),
	(['classify', '[-1,1,0]', '[0,0,0]', '[-1,2,0]'], 0),
	(['hexagon', '[-3,-1,0]', '[0,0,0]', '[-1,2,0]'], 0),
	(['params', '1,2,1,1'], 0),
	(['params', '1,1,1,2'], 3),
	(['from-params', '1,2,1,2,1,2', '(-3,-1)'], 0),
	(['span', '[-1,0,0]', '[-3,-1,0]', '[0,0,0]', '[-1,2,0]'], 0),
	(['independent', '[-3,-1,0]', '[0,0,0]', '[-1,2,0]'], 0),
	(['improper-types'], 0),
	(['--json', '--out', 'tiling.json', 'tile', '1,1,1,1,1,1', '0,6,0,6'], 0),
	(['validate-tile', 'tiling.json'], 0),
	(['--out', 'triangle.svg', 'render', 'triangle', '(-3,-1)', '(0,0)', '(-1,2)'], 0),
	(['cross', '[0,0,-inf]', '[0,0,0]'], 3),
	(['cross', '[0,0]', '[0,0,0]'], 2),
]


def usage():
	print(__doc__)


def cd(path):
	'''changes current working directory.'''
	logging.info("cd %s" % path)
	os.chdir(path)


def exe(cmd, args=[], status=0):
	'''executes the given command and checks its exit status.'''
	args = cmd.split() + args
	logging.info('%s' % (' '.join(args)))
	result = subprocess.call(args)
	if result != status:
		raise Exception("'%s' exited with status %i, expected %i" % (' '.join(args), result, status))


def rm(path):
	'''delete directory, including sub-directories and files it contains.'''
	def onerror(function, path, excinfo):
		os.chmod(path, stat.S_IWRITE | stat.S_IREAD)
		if function == os.remove:
			os.remove(path)
		if function == os.rmdir:
			os.rmdir(path)

	if os.path.exists(path):
		logging.info("rm -rf %s" % (path))
		shutil.rmtree(path, onerror=onerror)


def mkdirs(path):
	'''create directory including missing parent directories.'''
	if not os.path.exists(path):
		logging.info("mkdirs -p %s" % (path))
		os.makedirs(path)


def create_env(top, python):
	'''create a virtual test environment and return the paths of its python
	interpreter and tropigeo command.
	'''
	win32 = sys.platform=='win32'
	python = python or sys.executable

	cmd = '%s -m pip install virtualenv' % python
	if not win32:
		cmd += ' --user'
	exe(cmd)
	exe('%s -m virtualenv %s' % (python, top))

	bindir = '%s/%s' % (top, 'Scripts' if win32 else 'bin')
	ext = '.exe' if win32 else ''
	os.environ['PATH'] = '%s%s%s' % (bindir, ';' if win32 else ':', os.environ['PATH'])
	os.environ.pop('TROPIGEO_MAX_N', None)
	return ('%s/python%s' % (bindir, ext), '%s/tropigeo%s' % (bindir, ext))


def tropigeo_setup(python, source):
	'''installs the package, including the test dependencies.'''
	exe(python, args=['-m', 'pip', 'install', '%s[test]' % source])


def tropigeo_unit(python, source):
	'''runs the unit tests against the installed package.'''
	top = os.getcwd()
	try:
		cd(source)
		exe(python, args=['-m', 'pytest', '-q', 'tests'])
	finally:
		cd(top)


def tropigeo_test(tropigeo):
	'''runs each command and checks its exit status.'''
	for (args, status) in COMMANDS:
		exe(tropigeo, args=args, status=status)


def tropigeo_playground(python, source):
	'''creates the figures of the playground.'''
	exe(python, args=['%s/playground/figures.py' % source, '--out', os.getcwd(),
		'--config', '%s/playground/tropigeo.ini' % source])


if __name__ == "__main__":
	logging.basicConfig(level=logging.DEBUG, format=' %(message)s')

	python=None
	keep=False
	unit=True

	try:
		opts, args = getopt.getopt(sys.argv[1:], 'hp:ks', ['help', 'python=', 'keep', 'skip-unit'])
		for opt, arg in opts:
			if opt in ('-h', '--help'):
				usage()
				sys.exit()
			elif opt in ('-p', '--python'):
				python = arg
			elif opt in ('-k', '--keep'):
				keep = True
			elif opt in ('-s', '--skip-unit'):
				unit = False

	except getopt.GetoptError as err:
		print(str(err))
		usage()
		sys.exit(2)

	source = os.path.abspath(os.path.dirname(__file__)).replace('\\', '/')
	top = tempfile.mkdtemp().replace('\\', '/')
	home = os.getcwd()
	try:
		(python, tropigeo) = create_env(top, python)
		cd(top)
		tropigeo_setup(python, source)
		if unit:
			tropigeo_unit(python, source)
		tropigeo_test(tropigeo)
		tropigeo_playground(python, source)
	finally:
		cd(home)
		if keep:
			logging.info("virtual environment kept at %s" % top)
		else:
			rm(top)

