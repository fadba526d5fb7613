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

from logging import Logger
from typing import Any, Optional

from .operators import CoordinateWeights, IndexDraw, QuadraticForm
from ..errors import DimensionMismatchError, StatisticError
from ..kernels import KernelConfig, gram_matrix
from ..scores.field import ScoreField, as_score_field
from ..utils import as_sample_matrix


def _weight_vector(weights: Optional[CoordinateWeights], m: int) -> np.ndarray:
    """Weight values, or unit weights when none are given."""
    if weights is None:
        return np.ones(m)
    if weights.dimension != m:
        raise DimensionMismatchError(m, weights.dimension, "coordinate weights")
    return np.asarray(weights.values)


def _stein_block(x: np.ndarray, sx: np.ndarray, y: np.ndarray, sy: np.ndarray,
                 w: np.ndarray, sigma: float, form: QuadraticForm) -> np.ndarray:
    """
    Stein kernel values u(x_a, y_b) for two sample matrices and their scores, with the
    Gaussian kernel partials expanded in closed form.
    """
    s2 = sigma ** 2
    k = gram_matrix(x, y, KernelConfig(sigma))

    if form == QuadraticForm.SCALAR:
        wd = (x @ w)[:, None] - (y @ w)[None, :]
        wsx = sx @ w
        wsy = sy @ w
        return k * (w @ w / s2 - wd ** 2 / s2 ** 2
                    + (wsx[:, None] - wsy[None, :]) * wd / s2
                    + np.outer(wsx, wsy))

    w2 = w ** 2
    sq_dist = ((x ** 2) @ w2)[:, None] + ((y ** 2) @ w2)[None, :] - 2.0 * (x * w2) @ y.T
    cross = ((sx * x) @ w2)[:, None] + ((sy * y) @ w2)[None, :] - (sx * w2) @ y.T - (x * w2) @ sy.T
    return k * (w2.sum() / s2 - sq_dist / s2 ** 2 + cross / s2 + (sx * w2) @ sy.T)


class SteinGram:
    """
    Matrix of Stein kernel values U[a][b] = u(z_a, z_b) over one sample set, with the
    score field, kernel configuration and weights it was built from.

    :param matrix: The symmetric n x n matrix.
    :type matrix: np.ndarray
    :param field: The score field.
    :type field: ScoreField
    :param cfg: The resolved kernel configuration.
    :type cfg: KernelConfig
    :param weights: The coordinate weights (None for unit weights).
    :type weights: Optional[CoordinateWeights]
    :param form: The quadratic form.
    :type form: QuadraticForm
    """

    def __init__(self, matrix: np.ndarray, field: ScoreField, cfg: KernelConfig,
                 weights: Optional[CoordinateWeights], form: QuadraticForm) -> None:
        self.matrix: np.ndarray = matrix
        self.field: ScoreField = field
        self.cfg: KernelConfig = cfg
        self.weights: Optional[CoordinateWeights] = weights
        self.form: QuadraticForm = form

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def v_statistic(self) -> float:
        """(1/n^2) sum_{a,b} U[a][b]."""
        return float(self.matrix.mean())

    def u_statistic(self) -> float:
        """(1/(n(n-1))) sum_{a != b} U[a][b]."""
        n = self.size
        if n < 2:
            raise ValueError(f"The U-statistic needs at least 2 samples (got {n}).")
        return float((self.matrix.sum() - np.trace(self.matrix)) / (n * (n - 1)))

    def row_means(self) -> np.ndarray:
        """(1/n) sum_b U[a][b] for every a."""
        return self.matrix.mean(axis=1)

    def __repr__(self) -> str:
        return f"SteinGram(n={self.size}, form={self.form.value}, {self.cfg})"


def stein_gram(samples: Any, field: Any, cfg: KernelConfig,
               weights: Optional[CoordinateWeights] = None,
               form: QuadraticForm = QuadraticForm.SCALAR,
               logger: Optional[Logger] = None) -> SteinGram:
    """
    Assemble the Stein Gram matrix of a sample set.

    :param samples: Sample matrix (n x m).
    :type samples: Any
    :param field: A score field or a fitted conditional score model.
    :type field: Any
    :param cfg: Kernel configuration; an unresolved bandwidth rule is resolved on ``samples``.
    :type cfg: KernelConfig
    :param weights: Coordinate weights; unit weights if None.
    :type weights: Optional[CoordinateWeights]
    :param form: The quadratic form.
    :type form: QuadraticForm
    :param logger: The logger where to log information (optional).
    :type logger: Optional[Logger]

    :return: The Stein Gram.
    :rtype: SteinGram
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    field = as_score_field(field)
    samples = as_sample_matrix(samples)
    if samples.shape[1] != field.dimension:
        raise DimensionMismatchError(field.dimension, samples.shape[1], "samples and score field")
    w = _weight_vector(weights, field.dimension)
    cfg = cfg.resolve(samples, logger=logger)

    scores = field.scores(samples)
    matrix = _stein_block(samples, scores, samples, scores, w, cfg.sigma, form)
    matrix = 0.5 * (matrix + matrix.T)
    if not np.all(np.isfinite(np.diag(matrix))):
        raise StatisticError("The Stein Gram matrix has non-finite entries")
    logger.debug(f"assembled a {samples.shape[0]} x {samples.shape[0]} Stein Gram ({form.value} form).")
    return SteinGram(matrix, field, cfg, weights, form)


def stein_kernel(x: Any, y: Any, field: Any, weights: Optional[CoordinateWeights], cfg: KernelConfig,
                 form: QuadraticForm = QuadraticForm.SCALAR) -> float:
    """
    Stein kernel u(x, y), the RKHS inner product of the weighted Stein operator applied
    to k(x, .) and k(y, .):

        sum_{i,j} w_i w_j [ d_xi d_yj k + s^(i)(x) d_yj k + s^(j)(y) d_xi k + s^(i)(x) s^(j)(y) k ]

    (i = j terms only for the diagonal form).

    :param x: First point (length m).
    :param y: Second point (length m).
    :param field: A score field or a fitted conditional score model.
    :param weights: Coordinate weights; unit weights if None.
    :type weights: Optional[CoordinateWeights]
    :param cfg: A resolved kernel configuration.
    :type cfg: KernelConfig
    :param form: The quadratic form.
    :type form: QuadraticForm

    :return: The Stein kernel value.
    :rtype: float
    """
    field = as_score_field(field)
    x = np.asarray(x, dtype=float).reshape(1, -1)
    y = np.asarray(y, dtype=float).reshape(1, -1)
    for point in (x, y):
        if point.shape[1] != field.dimension:
            raise DimensionMismatchError(field.dimension, point.shape[1], "point and score field")
    w = _weight_vector(weights, field.dimension)
    return float(_stein_block(x, field.scores(x), y, field.scores(y), w, cfg.sigma, form)[0, 0])


def apply_operator(field: Any, weights: Optional[CoordinateWeights], x: Any, y: Any, cfg: KernelConfig) -> float:
    """
    The weighted Stein operator applied to the kernel section k(., y) and evaluated at x,
    sum_i w_i [ d_xi k(x, y) + k(x, y) s^(i)(x) ].

    :param field: A score field or a fitted conditional score model.
    :param weights: Coordinate weights; unit weights if None.
    :type weights: Optional[CoordinateWeights]
    :param x: The evaluation point (length m).
    :param y: The kernel centre (length m).
    :param cfg: A resolved kernel configuration.
    :type cfg: KernelConfig

    :return: The operator value.
    :rtype: float
    """
    field = as_score_field(field)
    x = np.asarray(x, dtype=float).reshape(1, -1)
    y = np.asarray(y, dtype=float).reshape(1, -1)
    if x.shape[1] != field.dimension or y.shape[1] != field.dimension:
        raise DimensionMismatchError(field.dimension, max(x.shape[1], y.shape[1]), "point and score field")
    w = _weight_vector(weights, field.dimension)
    diff = (x - y)[0]
    k = float(np.exp(-diff @ diff / (2.0 * cfg.sigma ** 2)))
    return float(w @ (-diff / cfg.sigma ** 2 * k + k * field.scores(x)[0]))


def ksd_v(samples: Any, field: Any, cfg: KernelConfig,
          form: QuadraticForm = QuadraticForm.DIAGONAL,
          weights: Optional[CoordinateWeights] = None) -> float:
    """
    Kernel Stein discrepancy V-statistic (1/n^2) sum_{a,b} u(z_a, z_b). By default the
    classic joint-score kernel (diagonal form, unit weights).

    :return: The statistic (non-negative up to rounding).
    :rtype: float
    """
    return stein_gram(samples, field, cfg, weights, form).v_statistic()


def ksd_u(samples: Any, field: Any, cfg: KernelConfig,
          form: QuadraticForm = QuadraticForm.DIAGONAL,
          weights: Optional[CoordinateWeights] = None) -> float:
    """Kernel Stein discrepancy U-statistic (1/(n(n-1))) sum_{a != b} u(z_a, z_b)."""
    samples = as_sample_matrix(samples)
    if samples.shape[0] < 2:
        raise ValueError(f"The U-statistic needs at least 2 samples (got {samples.shape[0]}).")
    return stein_gram(samples, field, cfg, weights, form).u_statistic()


def npksd_stat(samples: Any, model: Any, draw: IndexDraw, cfg: KernelConfig,
               form: QuadraticForm = QuadraticForm.SCALAR) -> float:
    """
    Non-parametric KSD V-statistic with the re-sampled Stein operator: the weights are
    the index counts of ``draw`` divided by B.

    :param samples: Observed sample matrix (n x m).
    :type samples: Any
    :param model: A fitted conditional score model (or any score field).
    :type model: Any
    :param draw: The index draw.
    :type draw: IndexDraw
    :param cfg: Kernel configuration.
    :type cfg: KernelConfig
    :param form: The quadratic form.
    :type form: QuadraticForm

    :return: The statistic.
    :rtype: float
    """
    field = as_score_field(model)
    if draw.dimension != field.dimension:
        raise DimensionMismatchError(field.dimension, draw.dimension, "index draw and score model")
    return stein_gram(samples, field, cfg, CoordinateWeights.from_draw(draw), form).v_statistic()


def ksd_t_reference(samples: Any, field: ScoreField, cfg: KernelConfig,
                    form: QuadraticForm = QuadraticForm.SCALAR) -> float:
    """
    Population target of the non-parametric statistic: uniform coordinate weights with the
    exact conditional scores.
    """
    field = as_score_field(field)
    return stein_gram(samples, field, cfg, CoordinateWeights.uniform(field.dimension), form).v_statistic()
