#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

from .config import ExperimentConfig, load_document
from .schema import ConfigValidator, EXPERIMENT_SCHEMA, SWEEP_AXES
from .sweep import RESULT_COLUMNS, ExperimentSweep, Trial, build_manifest, run_test
