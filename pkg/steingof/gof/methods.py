#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

from logging import Logger
from typing import Any, Optional, Union

from .config import TestConfig
from .ksd import KSDMonteCarloTest, KSDWildBootstrapTest
from .mmd import MMDAggTest, MMDPermutationTest
from .npksd import NPKSDTest, NPKSDWildBootstrapTest
from .report import TestReport
from ..errors import TestConfigError
from ..generators import GeneratorSpec
from ..scores import FitMethod, SummaryStatistic
from ..utils import NoValue, RandomStream, make_rng


class TestMethod(NoValue):
    """Test methods selectable by name."""
    __test__ = False
    NPKSD = 'npksd'
    NPKSD_MEAN = 'npksd_mean'
    NPKSD_G = 'npksd_g'
    NPKSD_WILD = 'npksd_wild'
    KSD = 'ksd'
    KSD_MC = 'ksd_mc'
    MMD = 'mmd'
    MMDAGG = 'mmdagg'


def run_method(method: Union[str, TestMethod], observed: Any, generator: GeneratorSpec,
               config: TestConfig, logger: Optional[Logger] = None) -> TestReport:
    """
    Run one test method of the observed sample against a generator.

    The NP-KSD variants fit the generator scores (npksd: score matching on the other
    coordinates; npksd_mean: score matching on their mean; npksd_g: Gaussian conditionals),
    the KSD variants use the closed-form score of the generator, and the MMD variants
    compare with N generator samples.

    :param method: The method name.
    :type method: Union[str, TestMethod]
    :param observed: Observed sample matrix (n x m).
    :type observed: Any
    :param generator: The generator under assessment.
    :type generator: GeneratorSpec
    :param config: The test configuration.
    :type config: TestConfig
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]

    :return: The test report.
    :rtype: TestReport
    """
    try:
        method = TestMethod(method)
    except ValueError:
        raise TestConfigError(f"Unknown test method '{method}'.")

    if method in (TestMethod.NPKSD, TestMethod.NPKSD_WILD):
        config = config.replace(summary=SummaryStatistic.identity(), fit=FitMethod.SCORE_MATCHING)
    elif method == TestMethod.NPKSD_MEAN:
        config = config.replace(summary=SummaryStatistic.mean(), fit=FitMethod.SCORE_MATCHING)
    elif method == TestMethod.NPKSD_G:
        config = config.replace(summary=SummaryStatistic.identity(), fit=FitMethod.GAUSSIAN)

    if method == TestMethod.NPKSD_WILD:
        return NPKSDWildBootstrapTest(config, logger).run(observed, generator)
    if method in (TestMethod.NPKSD, TestMethod.NPKSD_MEAN, TestMethod.NPKSD_G):
        return NPKSDTest(config, logger, name=method.value).run(observed, generator)
    if method == TestMethod.KSD:
        return KSDWildBootstrapTest(config, logger=logger).run(observed, generator)
    if method == TestMethod.KSD_MC:
        return KSDMonteCarloTest(config, logger).run(observed, generator)

    second = generator.sample(config.N, make_rng(config.seed, RandomStream.GENERATOR_FIT.value))
    if method == TestMethod.MMD:
        return MMDPermutationTest(config, logger).run(observed, second)
    return MMDAggTest(config, logger=logger).run(observed, second)
