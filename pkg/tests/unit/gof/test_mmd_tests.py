#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import math
import numpy as np
import pytest

from steingof.errors import DimensionMismatchError, TestConfigError
from steingof.gof import PooledGrams, TestConfig, mmd_permutation_test, mmd_u_stat, mmdagg_test
from steingof.kernels import KernelConfig


class TestMMDStatistic:

    @pytest.mark.unit
    def test_two_point_samples(self) -> None:
        # identical samples {a, b}: k(a, b) + k(a, b) - (1 + k(a, b)) * 2 * 2 / 4
        sp = np.array([[0.0], [1.0]])
        assert(math.isclose(mmd_u_stat(sp, sp.copy(), KernelConfig(1.0)), math.exp(-0.5) - 1.0))

    @pytest.mark.unit
    def test_pooled_grams_match_statistic(self) -> None:
        rng = np.random.default_rng(0)
        sp, sq = rng.standard_normal((8, 2)), rng.standard_normal((11, 2)) + 0.5
        grams = PooledGrams(np.vstack([sp, sq]), 8, [0.7, 1.4])
        stats = grams.statistics(np.arange(8))
        assert(math.isclose(stats[0], mmd_u_stat(sp, sq, KernelConfig(0.7)), rel_tol=1e-10))
        assert(math.isclose(stats[1], mmd_u_stat(sp, sq, KernelConfig(1.4)), rel_tol=1e-10))

    @pytest.mark.unit
    def test_split_is_symmetric(self) -> None:
        rng = np.random.default_rng(1)
        sp, sq = rng.standard_normal((6, 1)), rng.standard_normal((6, 1))
        cfg = KernelConfig(1.0)
        assert(math.isclose(mmd_u_stat(sp, sq, cfg), mmd_u_stat(sq, sp, cfg), rel_tol=1e-10))

    @pytest.mark.unit
    def test_input_checks(self) -> None:
        with pytest.raises(DimensionMismatchError):
            mmd_u_stat(np.zeros((4, 2)), np.zeros((4, 3)), KernelConfig(1.0))
        with pytest.raises(ValueError):
            mmd_u_stat(np.zeros((1, 2)), np.zeros((4, 2)), KernelConfig(1.0))


class TestMMDTests:

    @pytest.fixture
    def cfg(self) -> TestConfig:
        return TestConfig(n=40, b=100, B1=100, B2=100, seed=2)

    @pytest.mark.unit
    def test_identity_permutation_first(self, cfg: TestConfig) -> None:
        rng = np.random.default_rng(0)
        report = mmd_permutation_test(rng.standard_normal((40, 2)), rng.standard_normal((50, 2)), cfg)
        assert(report.method == 'mmd')
        assert(report.null_draws[0] == report.statistic)
        assert(report.b == 100)

    @pytest.mark.unit
    def test_permutation_count(self, cfg: TestConfig) -> None:
        rng = np.random.default_rng(0)
        report = mmd_permutation_test(rng.standard_normal((40, 2)), rng.standard_normal((50, 2)), cfg, n_perm=30)
        assert(report.b == 30)

    @pytest.mark.unit
    def test_rejects_shift(self, cfg: TestConfig) -> None:
        rng = np.random.default_rng(1)
        sp, sq = rng.standard_normal((40, 2)), rng.standard_normal((40, 2)) + 2.0
        assert(mmd_permutation_test(sp, sq, cfg).reject)
        assert(mmdagg_test(sp, sq, cfg=cfg).reject)

    @pytest.mark.unit
    def test_aggregated_report(self, cfg: TestConfig) -> None:
        rng = np.random.default_rng(3)
        report = mmdagg_test(rng.standard_normal((40, 2)), rng.standard_normal((40, 2)), bandwidths=[0.5, 1.0, 2.0],
                             B1=60, B2=70, cfg=cfg)
        assert(report.method == 'mmdagg')
        assert(report.null_quantile == 0.0)
        assert(report.b == 70)
        assert(report.variant == 'aggregated (3 bandwidths)')

    @pytest.mark.unit
    def test_aggregated_reproducible(self, cfg: TestConfig) -> None:
        rng = np.random.default_rng(3)
        sp, sq = rng.standard_normal((40, 2)), rng.standard_normal((40, 2))
        first = mmdagg_test(sp, sq, cfg=cfg)
        second = mmdagg_test(sp, sq, cfg=cfg)
        assert(first.statistic == second.statistic)
        assert(np.array_equal(first.null_draws, second.null_draws))

    @pytest.mark.parametrize(("bandwidths"), [[], [1.0, 0.0]])
    @pytest.mark.unit
    def test_invalid_bandwidths(self, cfg: TestConfig, bandwidths: list) -> None:
        with pytest.raises(TestConfigError):
            mmdagg_test(np.zeros((5, 1)), np.ones((5, 1)), bandwidths=bandwidths, cfg=cfg)

    @pytest.mark.unit
    def test_too_few_permutations(self, cfg: TestConfig) -> None:
        with pytest.raises(TestConfigError):
            mmdagg_test(np.zeros((5, 1)), np.ones((5, 1)), B1=10, cfg=cfg)


class TestMMDLevel:

    @pytest.mark.parametrize(("N"), [20, 1000])
    @pytest.mark.statistical
    @pytest.mark.unit
    def test_level_holds_as_generator_sample_grows(self, N: int) -> None:
        # the permutation null is exact under exchangeability, so the level holds at every N
        rng = np.random.default_rng(97)
        cfg = TestConfig(n=50, N=N, b=200, seed=5)
        decisions = [mmd_permutation_test(rng.standard_normal((50, 3)), rng.standard_normal((N, 3)),
                                          cfg.replace(seed=trial)).reject
                     for trial in range(200)]
        assert(np.mean(decisions) <= 0.10)
