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
import scipy.linalg
import scipy.stats

from logging import Logger
from typing import Any, Dict, Optional

from .abstract_generator import GeneratorKind, GeneratorSpec
from ..errors import DimensionMismatchError, GeneratorError
from ..scores.field import ExactJointScore, ScoreField


PD_TOLERANCE = 1e-10


def cholesky_or_raise(covariance: np.ndarray, what: str) -> np.ndarray:
    """
    Lower Cholesky factor of a covariance matrix, or a GeneratorError if it is not positive
    definite. Matrices whose smallest eigenvalue is within PD_TOLERANCE (relative to the
    largest) of zero are rejected, including singular matrices that Cholesky accepts after
    rounding.
    """
    eigenvalues = scipy.linalg.eigvalsh(covariance)
    if eigenvalues[0] <= PD_TOLERANCE * max(1.0, abs(eigenvalues[-1])):
        raise GeneratorError(f"The {what} covariance matrix is not positive definite "
                             f"(smallest eigenvalue {eigenvalues[0]:.3g}).")
    try:
        return scipy.linalg.cholesky(covariance, lower=True)
    except np.linalg.LinAlgError:
        raise GeneratorError(f"The {what} covariance matrix is not positive definite.")


class GaussianGenerator(GeneratorSpec):
    """Multivariate Gaussian N(mean, covariance).

    :param mean: Mean vector (length m).
    :type mean: Any
    :param covariance: Covariance matrix (m x m), validated by Cholesky factorisation.
    :type covariance: Any
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """

    def __init__(self, mean: Any, covariance: Any,
                 kind: GeneratorKind = GeneratorKind.GAUSSIAN,
                 logger: Optional[Logger] = None) -> None:
        mean = np.asarray(mean, dtype=float).reshape(-1)
        super().__init__(kind, mean.size, logger)
        covariance = np.asarray(covariance, dtype=float)
        if covariance.shape != (self.dimension, self.dimension):
            raise DimensionMismatchError(self.dimension, covariance.shape[0], "Gaussian mean and covariance")
        if not np.allclose(covariance, covariance.T):
            raise GeneratorError("The Gaussian covariance matrix is not symmetric.")
        self.mean: np.ndarray = mean
        self.covariance: np.ndarray = covariance
        self.factor: np.ndarray = cholesky_or_raise(covariance, "Gaussian")
        self.precision: np.ndarray = scipy.linalg.cho_solve((self.factor, True), np.eye(self.dimension))

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        count = self._check_count(count)
        return self.mean + rng.standard_normal((count, self.dimension)) @ self.factor.T

    def log_density(self, samples: Any) -> np.ndarray:
        return np.atleast_1d(scipy.stats.multivariate_normal(self.mean, self.covariance).logpdf(samples))

    def exact_score(self) -> ScoreField:
        precision, mean = self.precision, self.mean
        diagonal = -np.diag(precision)
        return ExactJointScore(
            self.dimension,
            score=lambda z: -(z - mean) @ precision,
            derivative=lambda z: np.broadcast_to(diagonal, z.shape).copy(),
            name=f"{self.kind.value} score"
        )

    def _conditional_law(self, i: int, rest: np.ndarray):
        others = [j for j in range(self.dimension) if j != i]
        cross = self.covariance[i, others]
        if not others:
            return np.full(rest.shape[0], self.mean[i]), self.covariance[i, i]
        block = self.covariance[np.ix_(others, others)]
        regression = scipy.linalg.solve(block, cross, assume_a='pos')
        means = self.mean[i] + (rest - self.mean[others]) @ regression
        return means, self.covariance[i, i] - cross @ regression

    def conditional_score(self, i: int, x: np.ndarray, rest: np.ndarray) -> np.ndarray:
        means, variance = self._conditional_law(i, np.asarray(rest, dtype=float).reshape(len(x), -1))
        return -(np.asarray(x, dtype=float) - means) / variance

    def conditional_score_derivative(self, i: int, x: np.ndarray, rest: np.ndarray) -> np.ndarray:
        _, variance = self._conditional_law(i, np.asarray(rest, dtype=float).reshape(len(x), -1))
        return np.full(len(x), -1.0 / variance)

    def as_dict(self) -> Dict[str, Any]:
        return {
            'type': self.kind.value,
            'mean': self.mean.tolist(),
            'covariance': self.covariance.tolist()
        }


class GaussianVarianceDifference(GaussianGenerator):
    """Zero-mean Gaussian whose variances are all perturbed by the same amount,
    N(0, (1 + sigma_per) I). The null model is sigma_per = 0.

    :param dimension: Sample dimension m.
    :type dimension: int
    :param sigma_per: Variance perturbation (higher than -1).
    :type sigma_per: float
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """

    def __init__(self, dimension: int, sigma_per: float = 0.0, logger: Optional[Logger] = None) -> None:
        if sigma_per <= -1.0:
            raise GeneratorError(f"The variance perturbation should be higher than -1 (got {sigma_per}).")
        if int(dimension) != dimension or dimension < 1:
            raise GeneratorError(f"The generator dimension should be a positive integer (got {dimension}).")
        self.sigma_per: float = float(sigma_per)
        super().__init__(np.zeros(int(dimension)), (1.0 + self.sigma_per) * np.eye(int(dimension)),
                         kind=GeneratorKind.GVD, logger=logger)

    def as_dict(self) -> Dict[str, Any]:
        return {
            'type': self.kind.value,
            'dimension': self.dimension,
            'sigma_per': self.sigma_per
        }
