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

from logging import Logger
from scipy.special import logsumexp
from typing import Any, Dict, Optional, Tuple

from .abstract_generator import GeneratorKind, GeneratorSpec
from .gaussian import cholesky_or_raise
from ..errors import DimensionMismatchError, GeneratorError
from ..scores.field import ExactJointScore, ScoreField

DEFAULT_SEPARATION = 2.0


def adjacent_covariance(dimension: int, rho_per: float) -> np.ndarray:
    """Unit-diagonal covariance with ``rho_per`` on the first off-diagonals."""
    covariance = np.eye(dimension)
    if dimension > 1:
        off = np.arange(dimension - 1)
        covariance[off, off + 1] = rho_per
        covariance[off + 1, off] = rho_per
    return covariance


class MixtureOfGaussians(GeneratorSpec):
    """Two-component Gaussian mixture sharing the covariance matrix of the components.
    The null model has identity covariances; the alternative perturbs the covariance
    between adjacent coordinates by ``rho_per``.

    :param dimension: Sample dimension m.
    :type dimension: int
    :param rho_per: Covariance between adjacent coordinates.
    :type rho_per: float
    :param means: Component means (2 x m); defaults to +/- (2, 0, ..., 0).
    :type means: Optional[Any]
    :param weights: Mixing weights; defaults to 1/2, 1/2.
    :type weights: Optional[Any]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """

    def __init__(self, dimension: int,
                 rho_per: float = 0.0,
                 means: Optional[Any] = None,
                 weights: Optional[Any] = None,
                 logger: Optional[Logger] = None) -> None:
        super().__init__(GeneratorKind.MOG, dimension, logger)
        if means is None:
            first = np.zeros(self.dimension)
            first[0] = DEFAULT_SEPARATION
            means = np.vstack([-first, first])
        means = np.atleast_2d(np.asarray(means, dtype=float))
        if means.shape[1] != self.dimension:
            raise DimensionMismatchError(self.dimension, means.shape[1], "mixture component means")
        weights = np.full(means.shape[0], 1.0 / means.shape[0]) if weights is None \
            else np.asarray(weights, dtype=float).reshape(-1)
        if weights.size != means.shape[0]:
            raise DimensionMismatchError(means.shape[0], weights.size, "mixture means and weights")
        if np.any(weights <= 0.0) or not np.isclose(weights.sum(), 1.0):
            raise GeneratorError("The mixing weights should be positive and sum to 1.")

        self.rho_per: float = float(rho_per)
        self.means: np.ndarray = means
        self.weights: np.ndarray = weights
        self.covariance: np.ndarray = adjacent_covariance(self.dimension, self.rho_per)
        self.factor: np.ndarray = cholesky_or_raise(self.covariance, f"mixture (rho_per={self.rho_per})")
        self.precision: np.ndarray = scipy.linalg.cho_solve((self.factor, True), np.eye(self.dimension))
        self._log_det: float = 2.0 * float(np.sum(np.log(np.diag(self.factor))))
        self.logger.debug(f"created mixture of {len(self.weights)} Gaussians in dimension {self.dimension}.")

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        count = self._check_count(count)
        components = rng.choice(len(self.weights), size=count, p=self.weights)
        noise = rng.standard_normal((count, self.dimension)) @ self.factor.T
        return self.means[components] + noise

    def _component_log_densities(self, samples: np.ndarray) -> np.ndarray:
        # n x K
        centred = samples[:, None, :] - self.means[None, :, :]
        quadratic = np.einsum('nki,ij,nkj->nk', centred, self.precision, centred)
        return np.log(self.weights) - 0.5 * (quadratic + self._log_det + self.dimension * np.log(2.0 * np.pi))

    def log_density(self, samples: Any) -> np.ndarray:
        samples = np.atleast_2d(np.asarray(samples, dtype=float))
        return logsumexp(self._component_log_densities(samples), axis=1)

    def responsibilities(self, samples: np.ndarray) -> np.ndarray:
        log_joint = self._component_log_densities(samples)
        return np.exp(log_joint - logsumexp(log_joint, axis=1, keepdims=True))

    def _gradients(self, samples: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Responsibilities (n x K) and component scores P (mu_k - x) (n x K x m)."""
        component_scores = (self.means[None, :, :] - samples[:, None, :]) @ self.precision
        return self.responsibilities(samples), component_scores

    def _score(self, samples: np.ndarray) -> np.ndarray:
        weights, component_scores = self._gradients(samples)
        return np.einsum('nk,nki->ni', weights, component_scores)

    def _score_derivative(self, samples: np.ndarray) -> np.ndarray:
        weights, component_scores = self._gradients(samples)
        score = np.einsum('nk,nki->ni', weights, component_scores)
        second_moment = np.einsum('nk,nki->ni', weights, component_scores ** 2)
        return second_moment - score ** 2 - np.diag(self.precision)

    def exact_score(self) -> ScoreField:
        return ExactJointScore(self.dimension, score=self._score, derivative=self._score_derivative,
                               name=f"{self.kind.value} score")

    def _assemble(self, i: int, x: np.ndarray, rest: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float).reshape(-1)
        rest = np.asarray(rest, dtype=float).reshape(x.size, self.dimension - 1)
        return np.insert(rest, i, x, axis=1)

    def conditional_score(self, i: int, x: np.ndarray, rest: np.ndarray) -> np.ndarray:
        # every component conditional is N(mu_ki - sum_{j!=i} P_ij (z_j - mu_kj) / P_ii, 1 / P_ii)
        samples = self._assemble(i, x, rest)
        weights = self.responsibilities(samples)
        others = [j for j in range(self.dimension) if j != i]
        variance = 1.0 / self.precision[i, i]
        scores = np.empty((samples.shape[0], len(self.weights)))
        for k, mean in enumerate(self.means):
            conditional_mean = mean[i] - variance * (samples[:, others] - mean[others]) @ self.precision[i, others]
            scores[:, k] = -(samples[:, i] - conditional_mean) / variance
        return np.sum(weights * scores, axis=1)

    def conditional_score_derivative(self, i: int, x: np.ndarray, rest: np.ndarray) -> np.ndarray:
        return self._score_derivative(self._assemble(i, x, rest))[:, i]

    def as_dict(self) -> Dict[str, Any]:
        return {
            'type': self.kind.value,
            'dimension': self.dimension,
            'rho_per': self.rho_per,
            'means': self.means.tolist(),
            'weights': self.weights.tolist()
        }
