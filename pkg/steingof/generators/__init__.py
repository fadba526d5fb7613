#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

from .abstract_generator import GeneratorKind, GeneratorSpec, exact_conditional_score, exact_score, sample
from .gaussian import GaussianGenerator, GaussianVarianceDifference
from .mixture import MixtureOfGaussians
from .real import RealSubsample
from .sgld import SGLDGenerator
from .factory import build_generator
