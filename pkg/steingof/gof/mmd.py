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
from typing import Any, Optional, Sequence

from scipy.spatial.distance import cdist

from .abstract_test import GoodnessOfFitTest, NullSimulation
from .config import TestConfig
from .report import TestReport
from ..errors import DimensionMismatchError, TestConfigError
from ..kernels import KernelConfig, gram_matrix
from ..utils import RandomStream, as_sample_matrix, empirical_quantile, make_rng

BISECTION_STEPS = 30


def _check_pair(sp: Any, sq: Any):
    sp = as_sample_matrix(sp, "first sample")
    sq = as_sample_matrix(sq, "second sample")
    if sp.shape[1] != sq.shape[1]:
        raise DimensionMismatchError(sp.shape[1], sq.shape[1], "two-sample inputs")
    if sp.shape[0] < 2 or sq.shape[0] < 2:
        raise ValueError(f"Both samples need at least 2 rows (got {sp.shape[0]} and {sq.shape[0]}).")
    return sp, sq


def mmd_u_stat(sp: Any, sq: Any, cfg: KernelConfig) -> float:
    """
    Unbiased estimate of the squared maximum mean discrepancy,

        1/(n(n-1)) sum_{i != i'} k(x_i, x_i') + 1/(l(l-1)) sum_{j != j'} k(y_j, y_j') - 2/(nl) sum_{i,j} k(x_i, y_j).

    :param sp: First sample (n x m).
    :type sp: Any
    :param sq: Second sample (l x m).
    :type sq: Any
    :param cfg: Kernel configuration; a bandwidth rule is resolved on ``sp``.
    :type cfg: KernelConfig

    :return: The statistic.
    :rtype: float
    """
    sp, sq = _check_pair(sp, sq)
    cfg = cfg.resolve(sp)
    n, l = sp.shape[0], sq.shape[0]
    kxx = gram_matrix(sp, sp, cfg)
    kyy = gram_matrix(sq, sq, cfg)
    kxy = gram_matrix(sp, sq, cfg)
    return float((kxx.sum() - np.trace(kxx)) / (n * (n - 1))
                 + (kyy.sum() - np.trace(kyy)) / (l * (l - 1))
                 - 2.0 * kxy.sum() / (n * l))


class PooledGrams:
    """
    Gram matrices of the pooled sample for one or more bandwidths; the MMD of any split of
    the pool into n first-sample rows and l second-sample rows is read off block sums.

    :param pooled: The pooled sample, first sample on top.
    :type pooled: np.ndarray
    :param n: Size of the first sample.
    :type n: int
    :param bandwidths: The kernel bandwidths.
    :type bandwidths: Sequence[float]
    """

    def __init__(self, pooled: np.ndarray, n: int, bandwidths: Sequence[float]) -> None:
        distances = cdist(pooled, pooled, 'sqeuclidean')
        self.grams: np.ndarray = np.stack([np.exp(-distances / (2.0 * s ** 2)) for s in bandwidths])
        self.n: int = n
        self.l: int = pooled.shape[0] - n
        self.totals: np.ndarray = self.grams.sum(axis=(1, 2))
        self.diagonals: np.ndarray = np.diagonal(self.grams, axis1=1, axis2=2)

    def statistics(self, first: np.ndarray) -> np.ndarray:
        """
        MMD^2_u for every bandwidth when the rows ``first`` of the pool form the first sample.

        :param first: Indices of the n first-sample rows.
        :type first: np.ndarray

        :return: One statistic per bandwidth.
        :rtype: np.ndarray
        """
        n, l = self.n, self.l
        rows = self.grams[:, first, :]
        s_xx = rows[:, :, first].sum(axis=(1, 2))
        s_xy = rows.sum(axis=(1, 2)) - s_xx
        s_yy = self.totals - 2.0 * s_xy - s_xx
        trace_x = self.diagonals[:, first].sum(axis=1)
        trace_y = self.diagonals.sum(axis=1) - trace_x
        return (s_xx - trace_x) / (n * (n - 1)) + (s_yy - trace_y) / (l * (l - 1)) - 2.0 * s_xy / (n * l)

    def permuted(self, rng: np.random.Generator) -> np.ndarray:
        """Statistics of a uniformly random re-split of the pool."""
        return self.statistics(rng.permutation(self.n + self.l)[:self.n])


class MMDPermutationTest(GoodnessOfFitTest):
    """
    Two-sample MMD test calibrated by permutations of the pooled sample. Draw 0 of the
    null is the identity permutation.
    """
    method = 'mmd'

    def _simulate(self, observed: np.ndarray, reference: Any) -> NullSimulation:
        sp, sq = _check_pair(observed, reference)
        cfg = self.config
        kernel = cfg.kernel.resolve(sp, logger=self.logger)
        grams = PooledGrams(np.vstack([sp, sq]), sp.shape[0], [kernel.sigma])
        statistic = float(grams.statistics(np.arange(sp.shape[0]))[0])

        def replicate(r: int) -> float:
            if r == 0:
                return statistic
            return float(grams.permuted(make_rng(cfg.seed, RandomStream.PERMUTATION.value, r))[0])

        return NullSimulation(statistic, self._replicates(replicate, cfg.b), kernel.sigma, 'permutation')


class MMDAggTest(GoodnessOfFitTest):
    """
    Aggregated MMD test over a collection of bandwidths with uniform weights. B1
    permutations estimate the per-bandwidth null quantiles and B2 permutations calibrate
    the level correction u, found by bisection, so that the probability that any
    bandwidth rejects stays at most alpha.

    :param config: The test configuration (ladder, B1, B2).
    :type config: TestConfig
    :param bandwidths: Explicit bandwidths; median heuristic x 2^ladder if None.
    :type bandwidths: Optional[Sequence[float]]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """
    method = 'mmdagg'

    def __init__(self, config: Optional[TestConfig] = None,
                 bandwidths: Optional[Sequence[float]] = None,
                 logger: Optional[Logger] = None) -> None:
        super().__init__(config, logger)
        if bandwidths is not None:
            bandwidths = [float(s) for s in bandwidths]
            if not bandwidths:
                raise TestConfigError("The aggregated MMD test needs at least one bandwidth.")
            if min(bandwidths) <= 0.0:
                raise TestConfigError("Every bandwidth should be higher than 0.")
        self.bandwidths: Optional[Sequence[float]] = bandwidths

    def _quantiles(self, draws: np.ndarray, u: float) -> np.ndarray:
        level = u / draws.shape[0]
        return np.array([empirical_quantile(row, level) for row in draws])

    def _simulate(self, observed: np.ndarray, reference: Any) -> NullSimulation:
        sp, sq = _check_pair(observed, reference)
        cfg = self.config
        base = cfg.kernel.resolve(sp, logger=self.logger).sigma
        bandwidths = self.bandwidths if self.bandwidths is not None else [base * 2.0 ** k for k in cfg.ladder]
        grams = PooledGrams(np.vstack([sp, sq]), sp.shape[0], bandwidths)
        observed_stats = grams.statistics(np.arange(sp.shape[0]))

        rng = make_rng(cfg.seed, RandomStream.PERMUTATION.value, 1)
        quantile_draws = np.column_stack([grams.permuted(rng) for _ in range(cfg.B1)])
        rng = make_rng(cfg.seed, RandomStream.PERMUTATION.value, 2)
        level_draws = np.column_stack([grams.permuted(rng) for _ in range(cfg.B2)])

        def exceedance(u: float) -> float:
            margins = level_draws - self._quantiles(quantile_draws, u)[:, None]
            return float(np.mean(margins.max(axis=0) > 0.0))

        lower, upper = 0.0, float(len(bandwidths))
        if exceedance(lower) > cfg.alpha:
            self.logger.warning("The aggregated MMD level cannot be calibrated; using the most conservative quantiles.")
        else:
            for _ in range(BISECTION_STEPS):
                middle = 0.5 * (lower + upper)
                if exceedance(middle) <= cfg.alpha:
                    lower = middle
                else:
                    upper = middle

        quantiles = self._quantiles(quantile_draws, lower)
        self.logger.debug(f"aggregated MMD: u={lower:.6f}, bandwidths={bandwidths}")
        statistic = float(np.max(observed_stats - quantiles))
        null_draws = (level_draws - quantiles[:, None]).max(axis=0)
        return NullSimulation(statistic, null_draws, base, f"aggregated ({len(bandwidths)} bandwidths)",
                              null_quantile=0.0)


def mmd_permutation_test(sp: Any, sq: Any,
                         cfg: Optional[TestConfig] = None,
                         n_perm: Optional[int] = None,
                         logger: Optional[Logger] = None) -> TestReport:
    """
    MMD permutation test.

    :param sp: First (observed) sample.
    :type sp: Any
    :param sq: Second sample.
    :type sq: Any
    :param cfg: The test configuration.
    :type cfg: Optional[TestConfig]
    :param n_perm: Number of permutations, identity included (``cfg.b`` if None).
    :type n_perm: Optional[int]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]

    :return: The test report.
    :rtype: TestReport
    """
    cfg = TestConfig() if cfg is None else cfg
    if n_perm is not None:
        cfg = cfg.replace(b=n_perm)
    return MMDPermutationTest(cfg, logger).run(sp, sq)


def mmdagg_test(sp: Any, sq: Any,
                bandwidths: Optional[Sequence[float]] = None,
                B1: Optional[int] = None,
                B2: Optional[int] = None,
                cfg: Optional[TestConfig] = None,
                logger: Optional[Logger] = None) -> TestReport:
    """
    Aggregated MMD test.

    :param sp: First (observed) sample.
    :type sp: Any
    :param sq: Second sample.
    :type sq: Any
    :param bandwidths: The bandwidth collection (median heuristic ladder if None).
    :type bandwidths: Optional[Sequence[float]]
    :param B1: Quantile permutations (``cfg.B1`` if None).
    :type B1: Optional[int]
    :param B2: Level permutations (``cfg.B2`` if None).
    :type B2: Optional[int]
    :param cfg: The test configuration.
    :type cfg: Optional[TestConfig]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]

    :return: The test report.
    :rtype: TestReport
    """
    cfg = TestConfig() if cfg is None else cfg
    changes = {key: value for key, value in (('B1', B1), ('B2', B2)) if value is not None}
    if changes:
        cfg = cfg.replace(**changes)
    return MMDAggTest(cfg, bandwidths, logger).run(sp, sq)
