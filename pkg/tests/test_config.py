#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import logging

import pytest

from tropigeo import config
from tropigeo.errors import ParseError


@pytest.fixture(autouse=True)
def no_env(monkeypatch):
	monkeypatch.delenv('TROPIGEO_MAX_N', raising=False)


def test_max_n(monkeypatch):
	assert config.max_n() == 8
	assert config.max_n(5) == 5
	assert config.cramer_bound() == 7
	monkeypatch.setenv('TROPIGEO_MAX_N', '4')
	assert config.max_n() == 4
	assert config.max_n(6) == 6
	assert config.cramer_bound() == 3
	monkeypatch.setenv('TROPIGEO_MAX_N', 'four')
	with pytest.raises(ParseError):
		config.max_n()
	with pytest.raises(ParseError):
		config.max_n(0)


def test_get_style():
	assert config.get_style('stroke:#000; fill:none;') == (('stroke', '#000'), ('fill', 'none'))
	assert config.get_style('') == ()
	with pytest.raises(ParseError):
		config.get_style('stroke')


def test_defaults(tmpdir, monkeypatch, caplog):
	monkeypatch.chdir(tmpdir)
	with caplog.at_level(logging.DEBUG):
		cfg = config.get_config()
	assert cfg['ini'] == 'tropigeo.ini'
	assert (cfg['max_n'], cfg['scale'], cfg['margin'], cfg['point_radius']) == (8, 40, '1', 3)
	assert cfg['style'] == config.RENDER_STYLE
	assert [r.levelno for r in caplog.records if 'not found' in r.getMessage()] == [logging.DEBUG]


def test_missing_explicit_file(tmpdir, caplog):
	fname = str(tmpdir.join('nowhere.ini'))
	with caplog.at_level(logging.WARNING):
		cfg = config.get_config(fname)
	assert cfg['max_n'] == 8
	assert 'nowhere.ini' in caplog.text


def test_ini_file(tmpdir, monkeypatch):
	ini = tmpdir.join('tropigeo.ini')
	ini.write('\n'.join([
		'[kernel]',
		'max_n = 5',
		'',
		'[render]',
		'scale = 20',
		'margin = 1/2',
		'point_radius = 2',
		'line = stroke:#ff0000;fill:none',
	]) + '\n')
	cfg = config.get_config(str(ini))
	assert (cfg['max_n'], cfg['scale'], cfg['margin'], cfg['point_radius']) == (5, 20, '1/2', 2)
	assert cfg['style']['line'] == (('stroke', '#ff0000'), ('fill', 'none'))
	assert cfg['style']['point'] == config.RENDER_STYLE['point']

	monkeypatch.setenv('TROPIGEO_MAX_N', '3')
	assert config.get_config(str(ini))['max_n'] == 3

	monkeypatch.chdir(tmpdir)
	assert config.get_config()['scale'] == 20


def test_ini_errors(tmpdir):
	ini = tmpdir.join('broken.ini')
	ini.write('[render]\nscale = -1\n')
	with pytest.raises(ParseError):
		config.get_config(str(ini))
	ini.write('[render]\npolygon = fill\n')
	with pytest.raises(ParseError):
		config.get_config(str(ini))
