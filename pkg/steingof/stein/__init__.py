#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

from .operators import CoordinateWeights, IndexDraw, QuadraticForm, draw_indices
from .discrepancy import SteinGram, apply_operator, ksd_t_reference, ksd_u, ksd_v, npksd_stat, stein_gram, \
    stein_kernel
from .convergence import PROBE_COLUMNS, convergence_probe
