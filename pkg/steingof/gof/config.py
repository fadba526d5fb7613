#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import copy

from typing import Any, Dict, Optional, Sequence

from ..errors import TestConfigError
from ..kernels import BandwidthRule, KernelConfig
from ..scores import DEFAULT_RIDGE, FitMethod, ScoreBasis, SummaryKind, SummaryStatistic
from ..stein import QuadraticForm

DEFAULT_LADDER = (-2, -1, 0, 1, 2)
MIN_NULL_DRAWS = 20
MIN_AGG_PERMUTATIONS = 50


class TestConfig:
    """
    Parameters shared by every goodness-of-fit test.

    :param alpha: Test level in (0, 1).
    :type alpha: float
    :param n: Observed sample size (at least 2).
    :type n: int
    :param N: Number of generator samples (score fit, or second sample of the two-sample tests).
    :type N: int
    :param B: Index re-sample size.
    :type B: int
    :param b: Number of null replicates (Monte Carlo draws, bootstrap draws or permutations).
    :type b: int
    :param seed: Base seed of every random stream of the test.
    :type seed: int
    :param summary: Summary statistic of the conditional score fit.
    :type summary: Optional[SummaryStatistic]
    :param basis: Feature map of the conditional score fit.
    :type basis: Optional[ScoreBasis]
    :param ridge: Ridge penalty of the score-matching fit.
    :type ridge: float
    :param kernel: Kernel configuration (median heuristic by default).
    :type kernel: Optional[KernelConfig]
    :param form: Quadratic form of the non-parametric Stein kernel.
    :type form: QuadraticForm
    :param fit: Conditional score fitting method.
    :type fit: FitMethod
    :param ladder: Exponents k of the aggregated test bandwidths (median x 2^k).
    :type ladder: Optional[Sequence[float]]
    :param B1: Permutations estimating the per-bandwidth quantiles of the aggregated test.
    :type B1: int
    :param B2: Permutations calibrating the level of the aggregated test.
    :type B2: int
    :param threads: Number of worker processes for the null replicates.
    :type threads: int
    """
    __test__ = False

    def __init__(self,
                 alpha: float = 0.05,
                 n: int = 100,
                 N: int = 500,
                 B: int = 20,
                 b: int = 200,
                 seed: int = 0,
                 summary: Optional[SummaryStatistic] = None,
                 basis: Optional[ScoreBasis] = None,
                 ridge: float = DEFAULT_RIDGE,
                 kernel: Optional[KernelConfig] = None,
                 form: QuadraticForm = QuadraticForm.SCALAR,
                 fit: FitMethod = FitMethod.SCORE_MATCHING,
                 ladder: Optional[Sequence[float]] = None,
                 B1: int = 500,
                 B2: int = 500,
                 threads: int = 1) -> None:
        """Create a test configuration and check its sanity."""
        if not 0.0 < alpha < 1.0:
            raise TestConfigError(f"The level should be in (0, 1) (got {alpha}).")
        if n < 2:
            raise TestConfigError(f"The observed sample size should be at least 2 (got {n}).")
        if N < 2:
            raise TestConfigError(f"The generator sample size should be at least 2 (got {N}).")
        if B < 1:
            raise TestConfigError(f"The re-sample size should be at least 1 (got {B}).")
        if b < MIN_NULL_DRAWS:
            raise TestConfigError(f"The number of null replicates should be at least {MIN_NULL_DRAWS} (got {b}).")
        if min(B1, B2) < MIN_AGG_PERMUTATIONS:
            raise TestConfigError(f"B1 and B2 should be at least {MIN_AGG_PERMUTATIONS} (got {B1}, {B2}).")
        if ridge < 0.0:
            raise TestConfigError(f"The ridge penalty should be non-negative (got {ridge}).")
        if seed < 0:
            raise TestConfigError(f"The seed should be a non-negative integer (got {seed}).")
        ladder = DEFAULT_LADDER if ladder is None else tuple(ladder)
        if not ladder:
            raise TestConfigError("The bandwidth ladder should not be empty.")

        self.alpha: float = float(alpha)
        self.n: int = int(n)
        self.N: int = int(N)
        self.B: int = int(B)
        self.b: int = int(b)
        self.seed: int = int(seed)
        self.summary: SummaryStatistic = SummaryStatistic.identity() if summary is None else summary
        self.basis: ScoreBasis = ScoreBasis() if basis is None else basis
        self.ridge: float = float(ridge)
        self.kernel: KernelConfig = KernelConfig() if kernel is None else kernel
        self.form: QuadraticForm = form
        self.fit: FitMethod = fit
        self.ladder: tuple = ladder
        self.B1: int = int(B1)
        self.B2: int = int(B2)
        self.threads: int = max(1, int(threads))

    def replace(self, **changes: Any) -> 'TestConfig':
        """A copy of the configuration with some fields changed."""
        fields = copy.copy(self.__dict__)
        fields.update(changes)
        return TestConfig(**fields)

    def as_dict(self) -> Dict[str, Any]:
        """A JSON representation of the configuration.

        :return: A JSON object representation of the configuration.
        :rtype: Dict[str, Any]
        """
        return {
            'alpha': self.alpha,
            'n': self.n,
            'N': self.N,
            'B': self.B,
            'b': self.b,
            'seed': self.seed,
            'summary': self.summary.kind.value,
            'degree': self.basis.degree,
            'ridge': self.ridge,
            'kernel': self.kernel.as_dict(),
            'form': self.form.value,
            'fit': self.fit.value,
            'ladder': list(self.ladder),
            'B1': self.B1,
            'B2': self.B2
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], **overrides: Any) -> 'TestConfig':
        """
        Build a configuration from its JSON representation; missing fields take their defaults.

        :param data: JSON object (as produced by :meth:`as_dict`).
        :type data: Dict[str, Any]
        :param overrides: Fields that take precedence over ``data`` (None values are ignored).

        :return: The test configuration.
        :rtype: TestConfig
        """
        fields: Dict[str, Any] = {key: data[key] for key in ('alpha', 'n', 'N', 'B', 'b', 'seed', 'ridge',
                                                             'ladder', 'B1', 'B2') if key in data}
        if 'summary' in data:
            fields['summary'] = SummaryStatistic(SummaryKind(data['summary']))
        if 'degree' in data:
            fields['basis'] = ScoreBasis(data['degree'])
        if 'kernel' in data:
            fields['kernel'] = KernelConfig.from_dict(data['kernel'])
        elif 'bandwidth' in data:
            bandwidth = data['bandwidth']
            fields['kernel'] = KernelConfig(BandwidthRule(bandwidth) if isinstance(bandwidth, str) else bandwidth)
        if 'form' in data:
            fields['form'] = QuadraticForm(data['form'])
        if 'fit' in data:
            fields['fit'] = FitMethod(data['fit'])
        fields.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**fields)

    def __repr__(self) -> str:
        return f"TestConfig({self.as_dict()})"
