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
import pytest

from steingof.errors import DimensionMismatchError, TestConfigError
from steingof.generators import GaussianVarianceDifference, MixtureOfGaussians
from steingof.gof import TestConfig, TestMethod, fit_generator_scores, npksd_test, npksd_wild_bootstrap_test, \
    run_method
from steingof.kernels import KernelConfig, median_heuristic
from steingof.scores import FitMethod, FittedScore, SummaryStatistic
from steingof.stein import draw_indices, npksd_stat
from steingof.utils import RandomStream, make_rng


class TestNPKSD:

    @pytest.fixture
    def generator(self) -> GaussianVarianceDifference:
        return GaussianVarianceDifference(3)

    @pytest.fixture
    def cfg(self) -> TestConfig:
        return TestConfig(n=20, N=100, B=5, b=20, seed=1)

    @pytest.fixture
    def observed(self, generator: GaussianVarianceDifference) -> np.ndarray:
        return generator.sample(20, np.random.default_rng(10))

    @pytest.mark.unit
    def test_report(self, generator: GaussianVarianceDifference, cfg: TestConfig, observed: np.ndarray) -> None:
        report = npksd_test(observed, generator, cfg)
        assert(report.method == 'npksd')
        assert(report.variant == 'score_matching/identity')
        assert(report.b == 20)
        assert(np.all(np.isfinite(report.null_draws)))
        assert(0.0 < report.p_value <= 1.0)
        assert(report.bandwidth > 0.0)

    @pytest.mark.unit
    def test_reproducible(self, generator: GaussianVarianceDifference, cfg: TestConfig,
                          observed: np.ndarray) -> None:
        first = npksd_test(observed, generator, cfg)
        second = npksd_test(observed, generator, cfg)
        assert(first.statistic == second.statistic)
        assert(np.array_equal(first.null_draws, second.null_draws))
        third = npksd_test(observed, generator, cfg.replace(seed=2))
        assert(not np.array_equal(first.null_draws, third.null_draws))

    @pytest.mark.unit
    def test_null_uses_observed_bandwidth(self, generator: GaussianVarianceDifference) -> None:
        observed = 3.0 * np.random.default_rng(0).standard_normal((30, 3))
        cfg = TestConfig(n=30, N=200, B=10, b=20, seed=4)
        report = npksd_test(observed, generator, cfg)
        assert(report.bandwidth == pytest.approx(median_heuristic(observed)))

        field = FittedScore(fit_generator_scores(generator, cfg))
        samples = generator.sample(30, make_rng(4, RandomStream.NULL_SAMPLE.value, 0))
        draw = draw_indices(3, 10, make_rng(4, RandomStream.NULL_INDEX.value, 0))
        first = npksd_stat(samples, field, draw, KernelConfig(report.bandwidth), cfg.form)
        assert(report.null_draws[0] == pytest.approx(first, rel=1e-12))
        refitted = npksd_stat(samples, field, draw, KernelConfig(median_heuristic(samples)), cfg.form)
        assert(report.null_draws[0] != pytest.approx(refitted, rel=1e-6))

    @pytest.mark.unit
    def test_observed_size_overrides_n(self, generator: GaussianVarianceDifference, cfg: TestConfig,
                                       observed: np.ndarray) -> None:
        report = npksd_test(observed[:15], generator, cfg)
        assert(report.config.n == 15)

    @pytest.mark.unit
    def test_generator_sample_size(self, generator: GaussianVarianceDifference, observed: np.ndarray) -> None:
        with pytest.raises(TestConfigError):
            npksd_test(observed, generator, TestConfig(n=20, N=10, b=20))

    @pytest.mark.unit
    def test_dimension_mismatch(self, cfg: TestConfig, observed: np.ndarray) -> None:
        with pytest.raises(DimensionMismatchError):
            npksd_test(observed, GaussianVarianceDifference(2), cfg)

    @pytest.mark.unit
    def test_needs_generator(self, cfg: TestConfig, observed: np.ndarray) -> None:
        with pytest.raises(TypeError):
            npksd_test(observed, GaussianVarianceDifference(3).exact_score(), cfg)

    @pytest.mark.unit
    def test_wild_bootstrap(self, generator: GaussianVarianceDifference, cfg: TestConfig,
                            observed: np.ndarray) -> None:
        report = npksd_wild_bootstrap_test(observed, generator, cfg)
        assert(report.method == 'npksd_wild')
        assert(report.variant == 'score_matching/identity/wild')
        assert(report.b == 20)

    @pytest.mark.unit
    def test_mixture_generator(self, cfg: TestConfig) -> None:
        generator = MixtureOfGaussians(2, rho_per=0.2)
        observed = generator.sample(20, np.random.default_rng(0))
        assert(np.isfinite(npksd_test(observed, generator, cfg).statistic))


class TestFitGeneratorScores:

    @pytest.mark.unit
    def test_score_matching(self) -> None:
        model = fit_generator_scores(GaussianVarianceDifference(2), TestConfig(N=300))
        assert(model.method == FitMethod.SCORE_MATCHING)
        assert(model.sample_count == 300)

    @pytest.mark.unit
    def test_gaussian(self) -> None:
        model = fit_generator_scores(GaussianVarianceDifference(2), TestConfig(N=300, fit=FitMethod.GAUSSIAN,
                                                                               summary=SummaryStatistic.mean()))
        assert(model.method == FitMethod.GAUSSIAN)
        assert(model.summary == SummaryStatistic.mean())


class TestRunMethod:

    @pytest.fixture
    def cfg(self) -> TestConfig:
        return TestConfig(n=20, N=60, B=4, b=20, B1=50, B2=50, seed=5)

    @pytest.fixture
    def observed(self) -> np.ndarray:
        return GaussianVarianceDifference(2).sample(20, np.random.default_rng(3))

    @pytest.mark.parametrize(("method", "variant"), [
        ('npksd', 'score_matching/identity'),
        ('npksd_mean', 'score_matching/mean'),
        ('npksd_g', 'gaussian/identity'),
        ('npksd_wild', 'score_matching/identity/wild'),
        ('ksd', 'exact_joint/wild'),
        ('ksd_mc', 'exact_joint/monte_carlo'),
        ('mmd', 'permutation'),
    ])
    @pytest.mark.unit
    def test_methods(self, cfg: TestConfig, observed: np.ndarray, method: str, variant: str) -> None:
        report = run_method(method, observed, GaussianVarianceDifference(2), cfg)
        assert(report.method == method)
        assert(report.variant == variant)

    @pytest.mark.unit
    def test_aggregated_mmd(self, cfg: TestConfig, observed: np.ndarray) -> None:
        report = run_method(TestMethod.MMDAGG, observed, GaussianVarianceDifference(2), cfg)
        assert(report.method == 'mmdagg')
        assert(report.null_quantile == 0.0)

    @pytest.mark.unit
    def test_unknown_method(self, cfg: TestConfig, observed: np.ndarray) -> None:
        with pytest.raises(TestConfigError):
            run_method('energy', observed, GaussianVarianceDifference(2), cfg)
