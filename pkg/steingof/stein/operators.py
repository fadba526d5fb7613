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

from typing import Any, Dict

from ..utils import NoValue


class QuadraticForm(NoValue):
    """How the coordinate operators are combined inside the Stein kernel.

    SCALAR keeps every (i, j) cross term of the scalar-valued weighted operator;
    DIAGONAL keeps the i = j terms only (vector-valued operator, classic KSD).
    """
    SCALAR = 'scalar'
    DIAGONAL = 'diagonal'


class IndexDraw:
    """
    A multiset of B coordinate indices drawn with replacement from {0, ..., m-1}.

    :param indices: The drawn indices (zero-based).
    :type indices: Any
    :param dimension: The dimension m the indices are drawn from.
    :type dimension: int
    """

    def __init__(self, indices: Any, dimension: int) -> None:
        indices = np.asarray(indices, dtype=int).reshape(-1)
        if dimension < 1:
            raise ValueError(f"The dimension should be at least 1 (got {dimension}).")
        if indices.size < 1:
            raise ValueError("An index draw should hold at least one index.")
        if np.any(indices < 0) or np.any(indices >= dimension):
            raise ValueError(f"Every drawn index should be in [0, {dimension - 1}].")
        indices.setflags(write=False)
        self.indices: np.ndarray = indices
        self.dimension: int = int(dimension)
        self.counts: np.ndarray = np.bincount(indices, minlength=self.dimension)
        self.counts.setflags(write=False)

    @property
    def size(self) -> int:
        """The draw size B."""
        return int(self.indices.size)

    def as_dict(self) -> Dict[str, Any]:
        return {'dimension': self.dimension, 'counts': self.counts.tolist()}

    def __repr__(self) -> str:
        return f"IndexDraw(m={self.dimension}, B={self.size})"


def draw_indices(m: int, B: int, rng: np.random.Generator) -> IndexDraw:
    """
    Draw B coordinate indices uniformly with replacement from {0, ..., m-1}.

    :param m: The dimension.
    :type m: int
    :param B: The draw size.
    :type B: int
    :param rng: The random stream.
    :type rng: np.random.Generator

    :return: The index draw.
    :rtype: IndexDraw
    """
    if m < 1 or B < 1:
        raise ValueError(f"Index draws need m >= 1 and B >= 1 (got m={m}, B={B}).")
    return IndexDraw(rng.integers(0, m, size=B), m)


class CoordinateWeights:
    """
    Non-negative coordinate weights summing to 1 that combine the per-coordinate
    Stein operators. Build them with :meth:`uniform` or :meth:`from_draw`.

    :param values: The weights (length m).
    :type values: Any
    """

    def __init__(self, values: Any) -> None:
        values = np.asarray(values, dtype=float).reshape(-1)
        if values.size < 1 or np.any(values < 0.0) or not np.isclose(values.sum(), 1.0):
            raise ValueError("Coordinate weights should be non-negative and sum to 1.")
        values.setflags(write=False)
        self.values: np.ndarray = values

    @classmethod
    def uniform(cls, m: int) -> 'CoordinateWeights':
        """Weights 1/m on every coordinate."""
        if m < 1:
            raise ValueError(f"The dimension should be at least 1 (got {m}).")
        return cls(np.full(m, 1.0 / m))

    @classmethod
    def from_draw(cls, draw: IndexDraw) -> 'CoordinateWeights':
        """Weights k_i / B, so that one weighted pass equals the average over the B drawn operators."""
        return cls(draw.counts / draw.size)

    @property
    def dimension(self) -> int:
        return int(self.values.size)

    def __repr__(self) -> str:
        return f"CoordinateWeights({np.array2string(self.values, precision=4)})"
