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

from typing import Any, Dict, List, Sequence

from .basis import ScoreBasis, SummaryKind, SummaryStatistic
from ..errors import DimensionMismatchError
from ..utils import NoValue, as_sample_matrix


class FitMethod(NoValue):
    """How the coefficients of a conditional score model were obtained."""
    SCORE_MATCHING = 'score_matching'
    GAUSSIAN = 'gaussian'


class ConditionalScoreModel:
    """Per-coordinate conditional score functions s^(i)(x | t) = theta_i^T phi(x, t).

    Instances are immutable once built: the coefficient arrays are marked read-only so that a
    fitted model can be shared between workers.

    :param coefficients: One coefficient vector per coordinate.
    :type coefficients: Sequence[np.ndarray]
    :param summary: The summary statistic t.
    :type summary: SummaryStatistic
    :param basis: The feature map phi.
    :type basis: ScoreBasis
    :param ridge: Ridge penalty used for the fit.
    :type ridge: float
    :param sample_count: Number of generator samples used for the fit.
    :type sample_count: int
    :param method: Fitting method.
    :type method: FitMethod
    """

    def __init__(self,
                 coefficients: Sequence[np.ndarray],
                 summary: SummaryStatistic,
                 basis: ScoreBasis,
                 ridge: float,
                 sample_count: int,
                 method: FitMethod = FitMethod.SCORE_MATCHING) -> None:
        self.summary: SummaryStatistic = summary
        self.basis: ScoreBasis = basis
        self.ridge: float = float(ridge)
        self.sample_count: int = int(sample_count)
        self.method: FitMethod = method

        m = len(coefficients)
        expected = basis.feature_count(summary.dimension(m))
        thetas: List[np.ndarray] = []
        for i, theta in enumerate(coefficients):
            theta = np.array(theta, dtype=float).reshape(-1)
            if theta.size != expected:
                raise DimensionMismatchError(expected, theta.size, f"coefficients of coordinate {i}")
            theta.setflags(write=False)
            thetas.append(theta)
        self.coefficients: List[np.ndarray] = thetas

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def scores(self, samples: Any) -> np.ndarray:
        """
        Evaluate every coordinate score at every sample.

        :param samples: Sample matrix (n x m).
        :type samples: Any

        :return: An n x m matrix with entry [a, i] = s^(i)(z_a^(i) | t(z_a^(-i))).
        :rtype: np.ndarray
        """
        samples = self._check(samples)
        out = np.empty_like(samples)
        for i, theta in enumerate(self.coefficients):
            out[:, i] = self.basis.features(samples[:, i], self.summary.apply(samples, i)) @ theta
        return out

    def score_derivatives(self, samples: Any) -> np.ndarray:
        """
        Derivative of each coordinate score with respect to its own coordinate, t held fixed.

        :param samples: Sample matrix (n x m).
        :type samples: Any

        :return: An n x m matrix.
        :rtype: np.ndarray
        """
        samples = self._check(samples)
        out = np.empty_like(samples)
        for i, theta in enumerate(self.coefficients):
            out[:, i] = self.basis.derivative(samples[:, i], self.summary.apply(samples, i)) @ theta
        return out

    def _check(self, samples: Any) -> np.ndarray:
        samples = as_sample_matrix(samples)
        if samples.shape[1] != self.dimension:
            raise DimensionMismatchError(self.dimension, samples.shape[1], "conditional score model")
        return samples

    def as_dict(self) -> Dict[str, Any]:
        """A JSON representation of the model.

        :return: A JSON object representation of the model.
        :rtype: Dict[str, Any]
        """
        return {
            'method': self.method.value,
            'dimension': self.dimension,
            'summary': self.summary.as_dict(),
            'basis': self.basis.as_dict(),
            'ridge': self.ridge,
            'sampleCount': self.sample_count,
            'coefficients': [theta.tolist() for theta in self.coefficients]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ConditionalScoreModel':
        return cls(
            coefficients=[np.asarray(theta) for theta in data['coefficients']],
            summary=SummaryStatistic(SummaryKind(data['summary']['kind'])),
            basis=ScoreBasis(data['basis']['degree']),
            ridge=data['ridge'],
            sample_count=data['sampleCount'],
            method=FitMethod(data['method'])
        )

    def __repr__(self) -> str:
        return (f"ConditionalScoreModel(m={self.dimension}, {self.summary}, {self.basis}, "
                f"method={self.method.value}, N={self.sample_count})")
