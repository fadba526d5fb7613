#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

from .basis import ScoreBasis, SummaryKind, SummaryStatistic
from .model import ConditionalScoreModel, FitMethod
from .field import ExactConditionalScore, ExactJointScore, FittedScore, ScoreField, ScoreVariant, as_score_field, \
    score_component
from .score_matching import DEFAULT_RIDGE, fit_conditional_gaussian, fit_score_matching, score_matching_gradient, \
    sm_objective_value
