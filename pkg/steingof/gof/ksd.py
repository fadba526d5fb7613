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
from typing import Any, Callable, Optional

from .abstract_test import GoodnessOfFitTest, NullSimulation
from .config import TestConfig
from .report import TestReport
from ..errors import DimensionMismatchError
from ..generators import GeneratorSpec
from ..scores import ScoreField, as_score_field
from ..stein import QuadraticForm, ksd_v, stein_gram
from ..utils import RandomStream, make_rng

Multipliers = Callable[[np.random.Generator, int, int], np.ndarray]


def rademacher_multipliers(rng: np.random.Generator, b: int, n: int) -> np.ndarray:
    """A b x n matrix of i.i.d. signs +/- 1."""
    return 2.0 * rng.integers(0, 2, size=(b, n)) - 1.0


def wild_bootstrap_draws(matrix: np.ndarray, b: int, rng: np.random.Generator,
                         multipliers: Optional[Multipliers] = None) -> np.ndarray:
    """
    Wild bootstrap replicates (1/n^2) sum_{a,c} W_a W_c U[a][c] of a V-statistic.

    :param matrix: The n x n kernel matrix U.
    :type matrix: np.ndarray
    :param b: Number of replicates.
    :type b: int
    :param rng: The random stream of the multipliers.
    :type rng: np.random.Generator
    :param multipliers: Function ``(rng, b, n) -> b x n`` multipliers (Rademacher by default).
    :type multipliers: Optional[Callable]

    :return: The b replicates.
    :rtype: np.ndarray
    """
    n = matrix.shape[0]
    weights = (rademacher_multipliers if multipliers is None else multipliers)(rng, b, n)
    return np.einsum('ra,ac,rc->r', weights, matrix, weights) / n ** 2


def _exact_field(reference: Any) -> ScoreField:
    if isinstance(reference, GeneratorSpec):
        return reference.exact_score()
    return as_score_field(reference)


class KSDWildBootstrapTest(GoodnessOfFitTest):
    """
    Kernel Stein discrepancy test with an exact score; the null distribution of the
    V-statistic is simulated with a wild bootstrap.

    :param config: The test configuration.
    :type config: TestConfig
    :param multipliers: Function ``(rng, b, n) -> b x n`` bootstrap multipliers (Rademacher by default).
    :type multipliers: Optional[Callable]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """
    method = 'ksd'

    def __init__(self, config: Optional[TestConfig] = None,
                 multipliers: Optional[Multipliers] = None,
                 logger: Optional[Logger] = None) -> None:
        super().__init__(config, logger)
        self.multipliers: Optional[Multipliers] = multipliers

    def _simulate(self, observed: np.ndarray, reference: Any) -> NullSimulation:
        field = _exact_field(reference)
        cfg = self.config
        kernel = cfg.kernel.resolve(observed, logger=self.logger)
        gram = stein_gram(observed, field, kernel, None, QuadraticForm.DIAGONAL, logger=self.logger)
        draws = wild_bootstrap_draws(gram.matrix, cfg.b, make_rng(cfg.seed, RandomStream.BOOTSTRAP.value),
                                     self.multipliers)
        return NullSimulation(gram.v_statistic(), draws, kernel.sigma, f"{field.variant.value}/wild")


class KSDMonteCarloTest(GoodnessOfFitTest):
    """
    Kernel Stein discrepancy test with an exact score; the null distribution is simulated
    by recomputing the statistic on fresh samples of the generator.
    """
    method = 'ksd_mc'

    def _simulate(self, observed: np.ndarray, reference: Any) -> NullSimulation:
        if not isinstance(reference, GeneratorSpec):
            raise TypeError("The Monte Carlo KSD test needs a generator to simulate the null.")
        if reference.dimension != observed.shape[1]:
            raise DimensionMismatchError(reference.dimension, observed.shape[1], "generator and observed samples")
        field = reference.exact_score()
        cfg = self.config
        kernel = cfg.kernel.resolve(observed, logger=self.logger)
        statistic = ksd_v(observed, field, kernel)

        def replicate(r: int) -> float:
            samples = reference.sample(cfg.n, make_rng(cfg.seed, RandomStream.NULL_SAMPLE.value, r))
            return ksd_v(samples, field, kernel)

        return NullSimulation(statistic, self._replicates(replicate, cfg.b), kernel.sigma,
                              f"{field.variant.value}/monte_carlo")


def ksd_wild_bootstrap_test(observed: Any, field: Any,
                            cfg: Optional[TestConfig] = None,
                            multipliers: Optional[Multipliers] = None,
                            logger: Optional[Logger] = None) -> TestReport:
    """
    Wild bootstrap KSD test of the observed sample against an exact score.

    :param observed: Observed sample matrix (n x m).
    :type observed: Any
    :param field: The exact score field (or a generator with a closed-form score).
    :type field: Any
    :param cfg: The test configuration.
    :type cfg: Optional[TestConfig]
    :param multipliers: Bootstrap multipliers hook (Rademacher by default).
    :type multipliers: Optional[Callable]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]

    :return: The test report.
    :rtype: TestReport
    """
    return KSDWildBootstrapTest(cfg, multipliers, logger).run(observed, field)


def ksd_monte_carlo_test(observed: Any, generator: GeneratorSpec,
                         cfg: Optional[TestConfig] = None,
                         logger: Optional[Logger] = None) -> TestReport:
    """Monte Carlo KSD test of the observed sample against a generator with a closed-form score."""
    return KSDMonteCarloTest(cfg, logger).run(observed, generator)
