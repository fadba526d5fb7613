#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

from .config import TestConfig
from .report import TestReport
from .abstract_test import GoodnessOfFitTest, NullSimulation
from .ksd import KSDMonteCarloTest, KSDWildBootstrapTest, ksd_monte_carlo_test, ksd_wild_bootstrap_test, \
    rademacher_multipliers, wild_bootstrap_draws
from .npksd import NPKSDTest, NPKSDWildBootstrapTest, fit_generator_scores, npksd_test, npksd_wild_bootstrap_test
from .mmd import MMDAggTest, MMDPermutationTest, PooledGrams, mmd_permutation_test, mmd_u_stat, mmdagg_test
from .methods import TestMethod, run_method
