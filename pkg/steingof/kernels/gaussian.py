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
import math
import numpy as np

from logging import Logger
from typing import Any, Dict, NamedTuple, Optional, Union

from scipy.spatial.distance import cdist, pdist

from ..errors import DimensionMismatchError, KernelError
from ..utils import NoValue, as_sample_matrix

MEDIAN_FALLBACK = 1.0


class KernelFamily(NoValue):
    """Kernel family."""
    GAUSSIAN = 'gaussian'


class BandwidthRule(NoValue):
    """Data-driven bandwidth selection rule."""
    MEDIAN_HEURISTIC = 'median'


class KernelPartials(NamedTuple):
    """Kernel value and its first/mixed partial derivatives at one pair of points."""
    dxi: float
    dyj: float
    dxi_dyj: float
    k: float


class KernelConfig:
    """Configuration of an RKHS kernel.

    :param bandwidth: Either a positive bandwidth or :attr:`BandwidthRule.MEDIAN_HEURISTIC`.
    :type bandwidth: Union[float, BandwidthRule]
    :param family: Kernel family (only Gaussian is available).
    :type family: KernelFamily
    """

    def __init__(self,
                 bandwidth: Union[float, BandwidthRule] = BandwidthRule.MEDIAN_HEURISTIC,
                 family: KernelFamily = KernelFamily.GAUSSIAN) -> None:
        """A kernel configuration."""
        if not isinstance(family, KernelFamily):
            raise TypeError("A KernelFamily should be provided.")
        if not isinstance(bandwidth, BandwidthRule):
            bandwidth = float(bandwidth)
            if not math.isfinite(bandwidth) or bandwidth <= 0.0:
                raise KernelError(f"The kernel bandwidth should be a finite number higher than 0.0 (got {bandwidth}).")
        self.family: KernelFamily = family
        self.bandwidth: Union[float, BandwidthRule] = bandwidth

    @property
    def is_resolved(self) -> bool:
        return not isinstance(self.bandwidth, BandwidthRule)

    @property
    def sigma(self) -> float:
        """The explicit bandwidth; raises if the configuration still holds a selection rule."""
        if not self.is_resolved:
            raise KernelError("The kernel bandwidth has not been resolved; call resolve() first.")
        return self.bandwidth

    def resolve(self, samples: Any, logger: Optional[Logger] = None) -> 'KernelConfig':
        """
        Resolve the bandwidth rule against a sample set.

        :param samples: The sample set the bandwidth is selected on.
        :type samples: Any

        :return: A kernel configuration with an explicit bandwidth.
        :rtype: KernelConfig
        """
        if self.is_resolved:
            return self
        return KernelConfig(median_heuristic(samples, logger=logger), self.family)

    def as_dict(self) -> Dict[str, Union[str, float]]:
        return {
            'family': self.family.value,
            'bandwidth': self.bandwidth if self.is_resolved else self.bandwidth.value
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'KernelConfig':
        bandwidth = data.get('bandwidth', BandwidthRule.MEDIAN_HEURISTIC.value)
        if isinstance(bandwidth, str):
            bandwidth = BandwidthRule(bandwidth)
        return cls(bandwidth, KernelFamily(data.get('family', KernelFamily.GAUSSIAN.value)))

    def __repr__(self) -> str:
        return f"KernelConfig(family={self.family.value}, bandwidth={self.as_dict()['bandwidth']})"


def _as_pair(x: Any, y: Any):
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise DimensionMismatchError(x.size, y.size, "kernel arguments")
    return x, y


def eval_kernel(x: Any, y: Any, cfg: KernelConfig) -> float:
    """
    Gaussian kernel k(x, y) = exp(-||x - y||^2 / (2 sigma^2)).

    :param x: First point.
    :param y: Second point.
    :param cfg: A resolved kernel configuration.
    :type cfg: KernelConfig

    :return: The kernel value in (0, 1].
    :rtype: float
    """
    x, y = _as_pair(x, y)
    diff = x - y
    return float(np.exp(-np.dot(diff, diff) / (2.0 * cfg.sigma ** 2)))


def kernel_partials(x: Any, y: Any, i: int, j: int, cfg: KernelConfig) -> KernelPartials:
    """
    Analytic partial derivatives of the Gaussian kernel: d/dx_i, d/dy_j and d^2/dx_i dy_j.
    Coordinates are zero-based.

    :param x: First point.
    :param y: Second point.
    :param i: Coordinate of the derivative in x.
    :type i: int
    :param j: Coordinate of the derivative in y.
    :type j: int
    :param cfg: A resolved kernel configuration.
    :type cfg: KernelConfig

    :return: The partial derivatives and the kernel value.
    :rtype: KernelPartials
    """
    x, y = _as_pair(x, y)
    m = x.size
    for name, index in (('i', i), ('j', j)):
        if not 0 <= index < m:
            raise IndexError(f"Coordinate {name}={index} is out of range for dimension {m}.")
    s2 = cfg.sigma ** 2
    diff = x - y
    k = float(np.exp(-np.dot(diff, diff) / (2.0 * s2)))
    return KernelPartials(
        dxi=-diff[i] / s2 * k,
        dyj=diff[j] / s2 * k,
        dxi_dyj=((1.0 if i == j else 0.0) / s2 - diff[i] * diff[j] / s2 ** 2) * k,
        k=k
    )


def median_heuristic(samples: Any, logger: Optional[Logger] = None) -> float:
    """
    Median heuristic bandwidth sigma = sqrt(median_{i<j} ||x_i - x_j||^2 / 2), with a
    fallback of 1.0 when the median squared distance is zero.

    :param samples: Sample matrix (rows are observations).
    :type samples: Any
    :param logger: The logger where to log warnings (optional).
    :type logger: Optional[Logger]

    :return: The bandwidth.
    :rtype: float
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    samples = as_sample_matrix(samples)
    if samples.shape[0] < 2:
        raise KernelError(f"The median heuristic needs at least 2 samples (got {samples.shape[0]}).")

    median = float(np.median(pdist(samples, 'sqeuclidean')))
    if median <= 0.0:
        logger.warning(f"Degenerate sample set for the median heuristic, using bandwidth {MEDIAN_FALLBACK}.")
        return MEDIAN_FALLBACK
    sigma = math.sqrt(median / 2.0)
    logger.debug(f"median heuristic bandwidth: {sigma}")
    return sigma


def gram_matrix(x: Any, y: Any, cfg: KernelConfig) -> np.ndarray:
    """
    Kernel Gram matrix K[a][b] = k(x_a, y_b).

    :param x: First sample matrix.
    :param y: Second sample matrix.
    :param cfg: A resolved kernel configuration.
    :type cfg: KernelConfig

    :return: The Gram matrix.
    :rtype: np.ndarray
    """
    x = as_sample_matrix(x)
    y = as_sample_matrix(y)
    if x.shape[1] != y.shape[1]:
        raise DimensionMismatchError(x.shape[1], y.shape[1], "Gram matrix arguments")
    return np.exp(-cdist(x, y, 'sqeuclidean') / (2.0 * cfg.sigma ** 2))
