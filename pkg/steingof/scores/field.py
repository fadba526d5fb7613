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

from abc import ABC, abstractmethod
from typing import Any, Callable, Optional

from .model import ConditionalScoreModel
from ..errors import DimensionMismatchError, ScoreEstimationError, SteinGofError
from ..utils import NoValue, as_sample_matrix

JointFunction = Callable[[np.ndarray], np.ndarray]
ConditionalFunction = Callable[[int, np.ndarray, np.ndarray], np.ndarray]


class ScoreVariant(NoValue):
    """Where the score values of a field come from."""
    EXACT_JOINT = 'exact_joint'
    EXACT_CONDITIONAL = 'exact_conditional'
    FITTED = 'fitted'


class ScoreField(ABC):
    """Uniform interface over exact and fitted score functions.

    :param dimension: Sample dimension m.
    :type dimension: int
    :param name: Human readable description.
    :type name: Optional[str]
    """

    variant: ScoreVariant

    def __init__(self, dimension: int, name: Optional[str] = None) -> None:
        if dimension < 1:
            raise ValueError("The dimension of a score field should be at least 1.")
        self.dimension: int = int(dimension)
        self.name: str = name if name else self.variant.value

    @abstractmethod
    def _scores(self, samples: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def _score_derivatives(self, samples: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def scores(self, samples: Any) -> np.ndarray:
        """
        Score components at every sample.

        :param samples: Sample matrix (n x m).
        :type samples: Any

        :return: An n x m matrix whose entry [a, i] is the i-th score component at z_a.
        :rtype: np.ndarray
        """
        values = self._scores(self._check(samples))
        if not np.all(np.isfinite(values)):
            raise ScoreEstimationError(f"The score field '{self.name}' produced non-finite values.")
        return values

    def score_derivatives(self, samples: Any) -> np.ndarray:
        """
        Derivative of the i-th score component with respect to the i-th coordinate.

        :param samples: Sample matrix (n x m).
        :type samples: Any

        :return: An n x m matrix.
        :rtype: np.ndarray
        """
        return self._score_derivatives(self._check(samples))

    def _check(self, samples: Any) -> np.ndarray:
        samples = as_sample_matrix(samples)
        if samples.shape[1] != self.dimension:
            raise DimensionMismatchError(self.dimension, samples.shape[1], f"score field '{self.name}'")
        return samples

    def __repr__(self) -> str:
        return f"{type(self).__name__}(m={self.dimension}, name={self.name})"


class ExactJointScore(ScoreField):
    """Closed-form joint score s_q(z) = grad log q(z).

    :param dimension: Sample dimension m.
    :type dimension: int
    :param score: Vectorised score, mapping an n x m matrix to an n x m matrix.
    :type score: Callable[[np.ndarray], np.ndarray]
    :param derivative: Vectorised diagonal of the Hessian of log q (optional).
    :type derivative: Optional[Callable[[np.ndarray], np.ndarray]]
    :param name: Human readable description.
    :type name: Optional[str]
    """
    variant = ScoreVariant.EXACT_JOINT

    def __init__(self, dimension: int, score: JointFunction,
                 derivative: Optional[JointFunction] = None,
                 name: Optional[str] = None) -> None:
        super().__init__(dimension, name)
        self._score = score
        self._derivative = derivative

    def _scores(self, samples: np.ndarray) -> np.ndarray:
        return np.asarray(self._score(samples), dtype=float).reshape(samples.shape)

    def _score_derivatives(self, samples: np.ndarray) -> np.ndarray:
        if self._derivative is None:
            raise ScoreEstimationError(f"The score field '{self.name}' has no analytic derivative.")
        return np.asarray(self._derivative(samples), dtype=float).reshape(samples.shape)


class ExactConditionalScore(ScoreField):
    """Closed-form conditional scores s^(i)(x | x^(-i)), one coordinate at a time.

    :param dimension: Sample dimension m.
    :type dimension: int
    :param conditional: Function ``(i, x, rest) -> scores`` with x of length n and rest n x (m-1).
    :type conditional: Callable[[int, np.ndarray, np.ndarray], np.ndarray]
    :param derivative: Function ``(i, x, rest) -> d/dx scores`` (optional).
    :type derivative: Optional[Callable[[int, np.ndarray, np.ndarray], np.ndarray]]
    :param name: Human readable description.
    :type name: Optional[str]
    """
    variant = ScoreVariant.EXACT_CONDITIONAL

    def __init__(self, dimension: int, conditional: ConditionalFunction,
                 derivative: Optional[ConditionalFunction] = None,
                 name: Optional[str] = None) -> None:
        super().__init__(dimension, name)
        self._conditional = conditional
        self._derivative = derivative

    def _per_coordinate(self, function: ConditionalFunction, samples: np.ndarray) -> np.ndarray:
        out = np.empty_like(samples)
        for i in range(self.dimension):
            out[:, i] = function(i, samples[:, i], np.delete(samples, i, axis=1))
        return out

    def _scores(self, samples: np.ndarray) -> np.ndarray:
        return self._per_coordinate(self._conditional, samples)

    def _score_derivatives(self, samples: np.ndarray) -> np.ndarray:
        if self._derivative is None:
            raise ScoreEstimationError(f"The score field '{self.name}' has no analytic derivative.")
        return self._per_coordinate(self._derivative, samples)


class FittedScore(ScoreField):
    """Score field backed by a fitted conditional score model.

    :param model: The fitted model.
    :type model: ConditionalScoreModel
    """
    variant = ScoreVariant.FITTED

    def __init__(self, model: ConditionalScoreModel, name: Optional[str] = None) -> None:
        super().__init__(model.dimension, name if name else f"fitted ({model.method.value}, {model.summary.kind.value})")
        self.model: ConditionalScoreModel = model

    def _scores(self, samples: np.ndarray) -> np.ndarray:
        return self.model.scores(samples)

    def _score_derivatives(self, samples: np.ndarray) -> np.ndarray:
        return self.model.score_derivatives(samples)


def as_score_field(source: Any) -> ScoreField:
    """Wrap a fitted model into a field; score fields pass through unchanged."""
    if isinstance(source, ScoreField):
        return source
    if isinstance(source, ConditionalScoreModel):
        return FittedScore(source)
    raise TypeError("A ScoreField or a ConditionalScoreModel should be provided.")


def score_component(field: ScoreField, z: Any, i: int) -> float:
    """
    The i-th score component of a field at a single point.

    :param field: The score field.
    :type field: ScoreField
    :param z: The point (length m).
    :type z: Any
    :param i: The coordinate (zero-based).
    :type i: int

    :return: The score value.
    :rtype: float
    """
    z = np.asarray(z, dtype=float).reshape(1, -1)
    if not np.all(np.isfinite(z)):
        raise SteinGofError("Score evaluation requires a finite point.")
    if not 0 <= i < field.dimension:
        raise IndexError(f"Coordinate {i} is out of range for dimension {field.dimension}.")
    return float(field.scores(z)[0, i])
