#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import logging
import numpy as np
import scipy.linalg

from logging import Logger
from typing import Any, List, Optional, Tuple

from .basis import ScoreBasis, SummaryStatistic
from .field import as_score_field
from .model import ConditionalScoreModel, FitMethod
from ..errors import ScoreEstimationError
from ..utils import as_sample_matrix

DEFAULT_RIDGE = 1e-4
MIN_CONDITIONAL_VARIANCE = 1e-12


def _moments(samples: np.ndarray, i: int, summary: SummaryStatistic,
             basis: ScoreBasis) -> Tuple[np.ndarray, np.ndarray]:
    """Empirical feature Gram G_i and mean feature derivative g_i of coordinate i."""
    x = samples[:, i]
    t = summary.apply(samples, i)
    phi = basis.features(x, t)
    dphi = basis.derivative(x, t)
    count = samples.shape[0]
    return phi.T @ phi / count, dphi.sum(axis=0) / count


def fit_score_matching(samples: Any,
                       summary: Optional[SummaryStatistic] = None,
                       basis: Optional[ScoreBasis] = None,
                       ridge: float = DEFAULT_RIDGE,
                       logger: Optional[Logger] = None) -> ConditionalScoreModel:
    """
    Fit one conditional score per coordinate by minimising the integration-by-parts
    score-matching objective

        (1/N) sum_l [ 1/2 (theta^T phi_l)^2 + theta^T d/dx phi_l ] + ridge * ||theta||^2,

    whose unique minimiser is theta = -(G + 2 ridge I)^{-1} g.

    :param samples: Generator draws (N x m).
    :type samples: Any
    :param summary: Summary statistic t (identity by default).
    :type summary: Optional[SummaryStatistic]
    :param basis: Feature map (degree 2 by default).
    :type basis: Optional[ScoreBasis]
    :param ridge: Non-negative ridge penalty.
    :type ridge: float
    :param logger: The logger where to log information (optional).
    :type logger: Optional[Logger]

    :return: The fitted conditional score model.
    :rtype: ConditionalScoreModel
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    summary = SummaryStatistic.identity() if summary is None else summary
    basis = ScoreBasis() if basis is None else basis
    if ridge < 0.0:
        raise ValueError("The ridge penalty should be a non-negative number.")

    samples = as_sample_matrix(samples, "generator samples")
    count, m = samples.shape
    if ridge == 0.0 and count < 2:
        raise ScoreEstimationError(f"Score matching without ridge needs at least 2 samples (got {count}).")

    coefficients: List[np.ndarray] = []
    for i in range(m):
        gram, mean_derivative = _moments(samples, i, summary, basis)
        system = gram + 2.0 * ridge * np.eye(gram.shape[0])
        if ridge == 0.0 and np.linalg.matrix_rank(gram) < gram.shape[0]:
            raise ScoreEstimationError(
                f"Singular score-matching system for coordinate {i}; use a ridge penalty higher than 0.0.")
        try:
            factor = scipy.linalg.cho_factor(system)
        except np.linalg.LinAlgError as e:
            raise ScoreEstimationError(
                f"Singular score-matching system for coordinate {i} ({e}); use a ridge penalty higher than 0.0.")
        coefficients.append(-scipy.linalg.cho_solve(factor, mean_derivative))

    model = ConditionalScoreModel(coefficients, summary, basis, ridge, count, FitMethod.SCORE_MATCHING)
    logger.debug(f"fitted {model}")
    return model


def fit_conditional_gaussian(samples: Any,
                             summary: Optional[SummaryStatistic] = None,
                             logger: Optional[Logger] = None) -> ConditionalScoreModel:
    """
    Fit a Gaussian conditional law per coordinate: ordinary least squares of x^(i) on
    [1, t(x^(-i))] gives the conditional mean a_i + b_i^T t, and the residual variance
    (denominator N - dim(t) - 1) the conditional variance. The resulting score
    -(x - a_i - b_i^T t) / var_i is linear, so it is stored as a degree-1 model.

    :param samples: Generator draws (N x m).
    :type samples: Any
    :param summary: Summary statistic t (identity by default).
    :type summary: Optional[SummaryStatistic]
    :param logger: The logger where to log information (optional).
    :type logger: Optional[Logger]

    :return: The fitted conditional score model.
    :rtype: ConditionalScoreModel
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    summary = SummaryStatistic.identity() if summary is None else summary
    samples = as_sample_matrix(samples, "generator samples")
    count, m = samples.shape
    t_dim = summary.dimension(m)
    if count < t_dim + 2:
        raise ScoreEstimationError(
            f"The Gaussian conditional fit needs at least {t_dim + 2} samples (got {count}).")

    coefficients: List[np.ndarray] = []
    for i in range(m):
        design = np.hstack([np.ones((count, 1)), summary.apply(samples, i)])
        solution, _, rank, _ = scipy.linalg.lstsq(design, samples[:, i])
        if rank < design.shape[1]:
            raise ScoreEstimationError(f"Rank-deficient design for the Gaussian conditional of coordinate {i}.")
        residuals = samples[:, i] - design @ solution
        variance = float(residuals @ residuals) / (count - t_dim - 1)
        if variance < MIN_CONDITIONAL_VARIANCE:
            raise ScoreEstimationError(
                f"Degenerate Gaussian conditional for coordinate {i} (residual variance {variance}).")
        coefficients.append(np.concatenate([[solution[0], -1.0], solution[1:]]) / variance)

    model = ConditionalScoreModel(coefficients, summary, ScoreBasis(1), 0.0, count, FitMethod.GAUSSIAN)
    logger.debug(f"fitted {model}")
    return model


def score_matching_gradient(model: ConditionalScoreModel, samples: Any) -> List[np.ndarray]:
    """
    Gradient of the empirical ridge score-matching objective at the coefficients of a model,
    one vector per coordinate.

    :param model: A conditional score model.
    :type model: ConditionalScoreModel
    :param samples: The samples the objective is evaluated on.
    :type samples: Any

    :return: Per-coordinate gradients.
    :rtype: List[np.ndarray]
    """
    samples = as_sample_matrix(samples)
    gradients: List[np.ndarray] = []
    for i, theta in enumerate(model.coefficients):
        gram, mean_derivative = _moments(samples, i, model.summary, model.basis)
        gradients.append(gram @ theta + mean_derivative + 2.0 * model.ridge * theta)
    return gradients


def sm_objective_value(field: Any, samples: Any) -> float:
    """
    Integration-by-parts score-matching objective
    (1/(N m)) sum_l sum_i [ 1/2 s^(i)(z_l)^2 + d/dx s^(i)(z_l) ], a fit diagnostic.

    :param field: A score field or a fitted conditional score model.
    :type field: Any
    :param samples: Sample matrix (N x m).
    :type samples: Any

    :return: The objective value.
    :rtype: float
    """
    field = as_score_field(field)
    scores = field.scores(samples)
    derivatives = field.score_derivatives(samples)
    return float(np.mean(0.5 * scores ** 2 + derivatives))
