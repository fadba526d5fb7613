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

from steingof.errors import DimensionMismatchError, KernelError
from steingof.kernels import BandwidthRule, KernelConfig, eval_kernel, gram_matrix, kernel_partials, \
    median_heuristic


class TestGaussianKernel:

    @pytest.fixture
    def cfg(self) -> KernelConfig:
        return KernelConfig(1.3)

    @pytest.mark.unit
    def test_kernel_value(self, cfg: KernelConfig) -> None:
        assert(eval_kernel([0.5, -1.0], [0.5, -1.0], cfg) == 1.0)
        assert(math.isclose(eval_kernel([0.0], [1.3], cfg), math.exp(-0.5)))

    @pytest.mark.parametrize(("i", "j"), [(0, 0), (0, 1), (1, 2), (2, 2)])
    @pytest.mark.unit
    def test_partials_match_finite_differences(self, cfg: KernelConfig, i: int, j: int) -> None:
        x = np.array([0.3, -0.7, 1.1])
        y = np.array([-0.2, 0.4, 0.9])
        h = 1e-5
        e_i, e_j = np.eye(3)[i] * h, np.eye(3)[j] * h

        partials = kernel_partials(x, y, i, j, cfg)
        dxi = (eval_kernel(x + e_i, y, cfg) - eval_kernel(x - e_i, y, cfg)) / (2 * h)
        dyj = (eval_kernel(x, y + e_j, cfg) - eval_kernel(x, y - e_j, cfg)) / (2 * h)
        dxi_dyj = (eval_kernel(x + e_i, y + e_j, cfg) - eval_kernel(x + e_i, y - e_j, cfg)
                   - eval_kernel(x - e_i, y + e_j, cfg) + eval_kernel(x - e_i, y - e_j, cfg)) / (4 * h * h)

        assert(math.isclose(partials.k, eval_kernel(x, y, cfg)))
        assert(abs(partials.dxi - dxi) < 1e-7)
        assert(abs(partials.dyj - dyj) < 1e-7)
        assert(abs(partials.dxi_dyj - dxi_dyj) < 1e-4)

    @pytest.mark.unit
    def test_partials_reject_bad_coordinates(self, cfg: KernelConfig) -> None:
        with pytest.raises(IndexError):
            kernel_partials([0.0, 1.0], [1.0, 0.0], 2, 0, cfg)
        with pytest.raises(DimensionMismatchError):
            kernel_partials([0.0, 1.0], [1.0], 0, 0, cfg)

    @pytest.mark.unit
    def test_gram_matrix(self, cfg: KernelConfig) -> None:
        x = np.random.default_rng(0).standard_normal((5, 2))
        gram = gram_matrix(x, x, cfg)
        assert(gram.shape == (5, 5))
        assert(np.allclose(gram, gram.T))
        assert(np.allclose(np.diag(gram), 1.0))
        with pytest.raises(DimensionMismatchError):
            gram_matrix(x, np.zeros((3, 3)), cfg)


class TestBandwidth:

    @pytest.mark.unit
    def test_median_heuristic(self) -> None:
        # squared distances 1, 9, 4
        assert(math.isclose(median_heuristic([[0.0], [1.0], [3.0]]), math.sqrt(2.0)))

    @pytest.mark.unit
    def test_median_heuristic_fallback(self) -> None:
        assert(median_heuristic(np.ones((4, 2))) == 1.0)

    @pytest.mark.unit
    def test_median_heuristic_needs_two_samples(self) -> None:
        with pytest.raises(KernelError):
            median_heuristic([[1.0, 2.0]])

    @pytest.mark.unit
    def test_config_resolution(self) -> None:
        cfg = KernelConfig()
        assert(not cfg.is_resolved)
        with pytest.raises(KernelError):
            cfg.sigma
        resolved = cfg.resolve([[0.0], [1.0], [3.0]])
        assert(math.isclose(resolved.sigma, math.sqrt(2.0)))
        assert(resolved.resolve([[5.0], [6.0]]) is resolved)

    @pytest.mark.parametrize(("bandwidth"), [0.0, -1.0, float("inf"), float("nan")])
    @pytest.mark.unit
    def test_invalid_bandwidth(self, bandwidth: float) -> None:
        with pytest.raises(KernelError):
            KernelConfig(bandwidth)

    @pytest.mark.unit
    def test_config_json(self) -> None:
        assert(KernelConfig().as_dict() == {'family': 'gaussian', 'bandwidth': 'median'})
        cfg = KernelConfig.from_dict({'bandwidth': 0.5})
        assert(cfg.sigma == 0.5)
        assert(KernelConfig.from_dict({}).bandwidth == BandwidthRule.MEDIAN_HEURISTIC)
