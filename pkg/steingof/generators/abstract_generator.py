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

from abc import ABC, abstractmethod
from logging import Logger
from typing import Any, Dict, Optional

from ..errors import GeneratorError
from ..scores.field import ExactConditionalScore, ScoreField
from ..utils import NoValue


class GeneratorKind(NoValue):
    """Generator variant."""
    GAUSSIAN = 'gaussian'
    GVD = 'gvd'
    MOG = 'mog'
    REAL = 'real'
    SGLD = 'sgld'


class GeneratorSpec(ABC):
    """
    An abstract class of sample generators, the models under assessment.

    :param kind: The generator variant.
    :type kind: GeneratorKind
    :param dimension: Sample dimension m.
    :type dimension: int
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """

    def __init__(self, kind: GeneratorKind, dimension: int, logger: Optional[Logger] = None) -> None:
        """Create an object of the generator."""
        if int(dimension) != dimension or dimension < 1:
            raise GeneratorError(f"The generator dimension should be a positive integer (got {dimension}).")
        self.logger: Logger = logging.getLogger(__name__) if logger is None else logger
        self.kind: GeneratorKind = kind
        self.dimension: int = int(dimension)

    @abstractmethod
    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """
        Draw samples from the generator.

        :param count: Number of samples.
        :type count: int
        :param rng: The random stream.
        :type rng: np.random.Generator

        :return: A count x m sample matrix.
        :rtype: np.ndarray
        """
        raise NotImplementedError

    @abstractmethod
    def as_dict(self) -> Dict[str, Any]:
        """A JSON representation of the generator.

        :return: A JSON object representation of the generator.
        :rtype: Dict[str, Any]
        """
        raise NotImplementedError

    def exact_score(self) -> ScoreField:
        """
        The closed-form joint score of the generator's distribution.

        :return: The exact joint score field.
        :rtype: ScoreField
        """
        raise GeneratorError(f"The '{self.kind.value}' generator has no closed-form density.")

    def conditional_score(self, i: int, x: np.ndarray, rest: np.ndarray) -> np.ndarray:
        """
        Closed-form score of coordinate i given the other coordinates.

        :param i: The coordinate (zero-based).
        :type i: int
        :param x: Values of coordinate i (length n).
        :type x: np.ndarray
        :param rest: Values of the other coordinates (n x (m-1)).
        :type rest: np.ndarray

        :return: The conditional scores (length n).
        :rtype: np.ndarray
        """
        raise GeneratorError(f"The '{self.kind.value}' generator has no closed-form conditional density.")

    def conditional_score_derivative(self, i: int, x: np.ndarray, rest: np.ndarray) -> np.ndarray:
        raise GeneratorError(f"The '{self.kind.value}' generator has no closed-form conditional density.")

    def exact_conditional_field(self) -> ScoreField:
        """
        The closed-form conditional scores given every other coordinate, as a score field.

        :return: The exact conditional score field.
        :rtype: ScoreField
        """
        self.conditional_score(0, np.zeros(1), np.zeros((1, self.dimension - 1)))
        return ExactConditionalScore(self.dimension, self.conditional_score, self.conditional_score_derivative,
                                     name=f"{self.kind.value} conditional")

    def _check_count(self, count: int) -> int:
        if int(count) != count or count < 1:
            raise GeneratorError(f"The sample count should be a positive integer (got {count}).")
        return int(count)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.as_dict()})"


def sample(spec: GeneratorSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draw ``count`` samples from a generator.

    :param spec: The generator.
    :type spec: GeneratorSpec
    :param count: Number of samples.
    :type count: int
    :param rng: The random stream.
    :type rng: np.random.Generator

    :return: A count x m sample matrix.
    :rtype: np.ndarray
    """
    return spec.sample(count, rng)


def exact_score(spec: GeneratorSpec) -> ScoreField:
    """The closed-form joint score field of a generator."""
    return spec.exact_score()


def exact_conditional_score(spec: GeneratorSpec, i: int, x: float, rest: Any) -> float:
    """
    Closed-form conditional score of coordinate i at a single point.

    :param spec: The generator.
    :type spec: GeneratorSpec
    :param i: The coordinate (zero-based).
    :type i: int
    :param x: Value of coordinate i.
    :type x: float
    :param rest: Values of the other m - 1 coordinates.
    :type rest: Any

    :return: The conditional score.
    :rtype: float
    """
    if not 0 <= i < spec.dimension:
        raise IndexError(f"Coordinate {i} is out of range for dimension {spec.dimension}.")
    rest = np.asarray(rest, dtype=float).reshape(1, spec.dimension - 1)
    return float(spec.conditional_score(i, np.asarray([x], dtype=float), rest)[0])
