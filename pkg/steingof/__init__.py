#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

from .version import __version__

__author__ = 'SteinGof Team'

import logging

from .errors import ConfigurationError, DimensionMismatchError, GeneratorError, KernelError, \
    ScoreEstimationError, StatisticError, SteinGofError, TestConfigError
from .kernels import KernelConfig, median_heuristic
from .scores import ConditionalScoreModel, ScoreField, SummaryStatistic, fit_conditional_gaussian, fit_score_matching
from .generators import GaussianVarianceDifference, MixtureOfGaussians, RealSubsample, SGLDGenerator, \
    build_generator
from .stein import CoordinateWeights, IndexDraw, QuadraticForm, draw_indices, ksd_u, ksd_v, npksd_stat
from .gof import TestConfig, TestReport, ksd_wild_bootstrap_test, mmd_permutation_test, mmdagg_test, npksd_test, \
    run_method

logging.getLogger('steingof').addHandler(logging.NullHandler())
