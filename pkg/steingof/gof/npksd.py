#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import numpy as np

from logging import Logger
from typing import Any, Optional

from .abstract_test import GoodnessOfFitTest, NullSimulation
from .config import TestConfig
from .ksd import wild_bootstrap_draws
from .report import TestReport
from ..errors import DimensionMismatchError, TestConfigError
from ..generators import GeneratorSpec
from ..scores import ConditionalScoreModel, FitMethod, FittedScore, fit_conditional_gaussian, fit_score_matching
from ..stein import CoordinateWeights, draw_indices, npksd_stat, stein_gram
from ..utils import RandomStream, make_rng


def fit_generator_scores(generator: GeneratorSpec, config: TestConfig,
                         logger: Optional[Logger] = None) -> ConditionalScoreModel:
    """
    Fit the conditional scores of a generator on N of its samples, as configured.

    :param generator: The generator.
    :type generator: GeneratorSpec
    :param config: The test configuration (N, seed, fitting method, summary statistic, basis, ridge).
    :type config: TestConfig
    :param logger: The logger where to log information (optional).
    :type logger: Optional[Logger]

    :return: The fitted model.
    :rtype: ConditionalScoreModel
    """
    draws = generator.sample(config.N, make_rng(config.seed, RandomStream.GENERATOR_FIT.value))
    if config.fit == FitMethod.GAUSSIAN:
        return fit_conditional_gaussian(draws, config.summary, logger=logger)
    return fit_score_matching(draws, config.summary, config.basis, config.ridge, logger=logger)


class NPKSDTest(GoodnessOfFitTest):
    """
    Non-parametric KSD test of an observed sample against an implicit generator. The
    conditional scores are fitted once on N generator samples; the observed statistic and
    every null replicate use a fresh coordinate index draw, and the null replicates are
    computed on fresh n-samples of the generator (Monte Carlo null).
    """
    method = 'npksd'

    def _check(self, observed: np.ndarray, generator: Any) -> None:
        if not isinstance(generator, GeneratorSpec):
            raise TypeError("The NP-KSD test needs a generator.")
        if generator.dimension != observed.shape[1]:
            raise DimensionMismatchError(generator.dimension, observed.shape[1], "generator and observed samples")
        if self.config.N < self.config.n:
            raise TestConfigError(f"The generator sample size N={self.config.N} should be at least n={self.config.n}.")

    def _variant(self) -> str:
        return f"{self.config.fit.value}/{self.config.summary.kind.value}"

    def _simulate(self, observed: np.ndarray, generator: GeneratorSpec) -> NullSimulation:
        self._check(observed, generator)
        cfg = self.config
        m = generator.dimension
        field = FittedScore(fit_generator_scores(generator, cfg, self.logger))
        kernel = cfg.kernel.resolve(observed, logger=self.logger)
        statistic = npksd_stat(observed, field,
                               draw_indices(m, cfg.B, make_rng(cfg.seed, RandomStream.INDEX_DRAW.value)),
                               kernel, cfg.form)

        def replicate(r: int) -> float:
            samples = generator.sample(cfg.n, make_rng(cfg.seed, RandomStream.NULL_SAMPLE.value, r))
            draw = draw_indices(m, cfg.B, make_rng(cfg.seed, RandomStream.NULL_INDEX.value, r))
            return npksd_stat(samples, field, draw, kernel, cfg.form)

        return NullSimulation(statistic, self._replicates(replicate, cfg.b), kernel.sigma, self._variant())


class NPKSDWildBootstrapTest(NPKSDTest):
    """
    Non-parametric KSD statistic calibrated with a wild bootstrap of its Stein Gram. The
    bootstrap ignores the score estimation error, so its level is not controlled in general.
    """
    method = 'npksd_wild'

    def _simulate(self, observed: np.ndarray, generator: GeneratorSpec) -> NullSimulation:
        self._check(observed, generator)
        cfg = self.config
        field = FittedScore(fit_generator_scores(generator, cfg, self.logger))
        kernel = cfg.kernel.resolve(observed, logger=self.logger)
        draw = draw_indices(generator.dimension, cfg.B, make_rng(cfg.seed, RandomStream.INDEX_DRAW.value))
        gram = stein_gram(observed, field, kernel, CoordinateWeights.from_draw(draw), cfg.form, logger=self.logger)
        draws = wild_bootstrap_draws(gram.matrix, cfg.b, make_rng(cfg.seed, RandomStream.BOOTSTRAP.value))
        return NullSimulation(gram.v_statistic(), draws, kernel.sigma, f"{self._variant()}/wild")


def npksd_test(observed: Any, generator: GeneratorSpec,
               cfg: Optional[TestConfig] = None,
               logger: Optional[Logger] = None) -> TestReport:
    """
    Non-parametric KSD test with a Monte Carlo null.

    :param observed: Observed sample matrix (n x m).
    :type observed: Any
    :param generator: The generator under assessment.
    :type generator: GeneratorSpec
    :param cfg: The test configuration.
    :type cfg: Optional[TestConfig]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]

    :return: The test report.
    :rtype: TestReport
    """
    return NPKSDTest(cfg, logger).run(observed, generator)


def npksd_wild_bootstrap_test(observed: Any, generator: GeneratorSpec,
                              cfg: Optional[TestConfig] = None,
                              logger: Optional[Logger] = None) -> TestReport:
    """Non-parametric KSD test with a wild bootstrap null."""
    return NPKSDWildBootstrapTest(cfg, logger).run(observed, generator)
