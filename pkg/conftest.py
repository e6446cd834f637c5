#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import os
import sys

from hypothesis import settings, HealthCheck

sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

settings.register_profile('tropigeo', derandomize=True, deadline=None,
	suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile('tropigeo')
