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

from typing import List

from steingof.generators import GaussianVarianceDifference, GeneratorSpec, MixtureOfGaussians, SGLDGenerator
from steingof.gof import TestConfig, TestReport, ksd_monte_carlo_test, ksd_wild_bootstrap_test, run_method
from steingof.utils import RandomStream, derive_seed, make_rng


def run_trials(method: str, model: GeneratorSpec, truth: GeneratorSpec, cfg: TestConfig,
               trials: int) -> List[TestReport]:
    reports = []
    for trial in range(trials):
        seed = derive_seed(cfg.seed, 0, trial)
        observed = truth.sample(cfg.n, make_rng(seed, RandomStream.OBSERVED.value))
        reports.append(run_method(method, observed, model, cfg.replace(seed=seed)))
    return reports


def rejection_rate(method: str, model: GeneratorSpec, truth: GeneratorSpec, cfg: TestConfig, trials: int) -> float:
    return float(np.mean([report.reject for report in run_trials(method, model, truth, cfg, trials)]))


class TestRejectionRates:

    @pytest.fixture
    def cfg(self) -> TestConfig:
        return TestConfig(n=30, N=200, B=10, b=50, seed=17)

    @pytest.mark.parametrize(("method"), ['npksd', 'mmd'])
    @pytest.mark.statistical
    @pytest.mark.unit
    def test_level_under_null(self, cfg: TestConfig, method: str) -> None:
        model = GaussianVarianceDifference(3)
        assert(rejection_rate(method, model, model, cfg, 40) <= 0.2)

    @pytest.mark.statistical
    @pytest.mark.unit
    def test_power_under_variance_perturbation(self, cfg: TestConfig) -> None:
        cfg = cfg.replace(n=100, N=300)
        rate = rejection_rate('npksd', GaussianVarianceDifference(3), GaussianVarianceDifference(3, sigma_per=1.0),
                              cfg, 20)
        assert(rate >= 0.6)

    @pytest.mark.statistical
    @pytest.mark.unit
    def test_exact_ksd_power(self, cfg: TestConfig) -> None:
        cfg = cfg.replace(n=100, b=100)
        rate = rejection_rate('ksd', GaussianVarianceDifference(3), GaussianVarianceDifference(3, sigma_per=1.0),
                              cfg, 20)
        assert(rate >= 0.6)


class TestVarianceDifference:

    @pytest.fixture
    def cfg(self) -> TestConfig:
        return TestConfig(n=100, N=500, B=20, b=200, seed=29)

    @pytest.mark.parametrize(("method"), ['npksd', 'npksd_mean'])
    @pytest.mark.statistical
    @pytest.mark.unit
    def test_type_one_error(self, cfg: TestConfig, method: str) -> None:
        model = GaussianVarianceDifference(3)
        # binomial slack over 100 trials at level 0.05
        assert(rejection_rate(method, model, model, cfg, 100) <= 0.12)

    @pytest.mark.statistical
    @pytest.mark.unit
    def test_power_grows_with_perturbation(self, cfg: TestConfig) -> None:
        model = GaussianVarianceDifference(3)
        grid = [0.0, 0.1, 0.2, 0.3, 0.4]
        rates = [rejection_rate('npksd', model, GaussianVarianceDifference(3, sigma_per=s), cfg, 100) for s in grid]
        assert(all(later >= earlier - 0.08 for earlier, later in zip(rates, rates[1:])))
        assert(rates[-1] - rates[1] >= 0.2)

    @pytest.mark.statistical
    @pytest.mark.unit
    def test_null_p_values_are_uniform(self, cfg: TestConfig) -> None:
        model = GaussianVarianceDifference(3)
        cfg = cfg.replace(b=99)
        p_values = np.array([report.p_value for report in run_trials('npksd', model, model, cfg, 200)])
        grid = np.arange(1, cfg.b + 2) / (cfg.b + 1)
        ecdf = np.array([np.mean(p_values <= level + 1e-12) for level in grid])
        assert(np.max(np.abs(ecdf - grid)) <= 0.12)


class TestIncreasingGeneratorSampleSize:

    @pytest.fixture
    def cfg(self) -> TestConfig:
        return TestConfig(n=50, b=500, B1=200, B2=200, seed=41)

    @pytest.mark.parametrize(("N"), [20, 1000])
    @pytest.mark.statistical
    @pytest.mark.unit
    def test_aggregated_mmd_level(self, cfg: TestConfig, N: int) -> None:
        model = GaussianVarianceDifference(3)
        assert(rejection_rate('mmdagg', model, model, cfg.replace(N=N), 100) <= 0.10)

    @pytest.mark.parametrize(("N"), [20, 1000])
    @pytest.mark.statistical
    @pytest.mark.unit
    def test_exact_ksd_level(self, cfg: TestConfig, N: int) -> None:
        model = GaussianVarianceDifference(3)
        assert(rejection_rate('ksd', model, model, cfg.replace(N=N), 100) <= 0.12)


class TestMixtureResampleSize:

    @pytest.mark.statistical
    @pytest.mark.unit
    def test_half_dimension_draw_is_competitive(self) -> None:
        model = MixtureOfGaussians(40)
        truth = MixtureOfGaussians(40, rho_per=0.4)
        cfg = TestConfig(n=100, N=500, b=200, seed=53)
        half = rejection_rate('npksd', model, truth, cfg.replace(B=20), 100)
        full = rejection_rate('npksd', model, truth, cfg.replace(B=40), 100)
        assert(abs(half - full) <= 0.1)


class TestLangevinGenerator:

    @pytest.mark.statistical
    @pytest.mark.unit
    def test_near_level_against_target(self) -> None:
        target = GaussianVarianceDifference(3)
        model = SGLDGenerator(target.exact_score(), step=0.05, burn_in=100, thinning=5)
        cfg = TestConfig(n=100, N=500, B=20, b=200, seed=61)
        assert(rejection_rate('npksd_mean', model, target, cfg, 100) <= 0.15)


class TestNullSimulationAgreement:

    @pytest.mark.statistical
    @pytest.mark.unit
    def test_wild_bootstrap_matches_monte_carlo_quantile(self) -> None:
        model = GaussianVarianceDifference(3)
        cfg = TestConfig(n=100, b=500, seed=71)
        wild, monte_carlo = [], []
        for trial in range(5):
            seed = derive_seed(cfg.seed, 0, trial)
            observed = model.sample(cfg.n, make_rng(seed, RandomStream.OBSERVED.value))
            wild.append(ksd_wild_bootstrap_test(observed, model, cfg.replace(seed=seed)).null_quantile)
            monte_carlo.append(ksd_monte_carlo_test(observed, model, cfg.replace(seed=seed)).null_quantile)
        assert(abs(np.mean(wild) - np.mean(monte_carlo)) <= 0.25 * np.mean(monte_carlo))
