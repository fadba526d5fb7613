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

from typing import Dict, Union

from ..utils import NoValue


def _columns(x: np.ndarray, t: np.ndarray):
    x = np.asarray(x, dtype=float).reshape(-1)
    t = np.asarray(t, dtype=float)
    t = np.zeros((x.size, 0)) if t.size == 0 else t.reshape(x.size, -1)
    return x, t


class SummaryKind(NoValue):
    """Summary statistic of the remaining coordinates."""
    IDENTITY = 'identity'
    MEAN = 'mean'


class SummaryStatistic:
    """Summary statistic t(x^(-i)) on which the conditional score of coordinate i is conditioned.

    :param kind: Identity (keep every other coordinate) or Mean (average of the other coordinates).
    :type kind: SummaryKind
    """

    def __init__(self, kind: SummaryKind = SummaryKind.IDENTITY) -> None:
        if not isinstance(kind, SummaryKind):
            raise TypeError("A SummaryKind should be provided.")
        self.kind: SummaryKind = kind

    @classmethod
    def identity(cls) -> 'SummaryStatistic':
        return cls(SummaryKind.IDENTITY)

    @classmethod
    def mean(cls) -> 'SummaryStatistic':
        return cls(SummaryKind.MEAN)

    def dimension(self, m: int) -> int:
        """Output dimension of t for samples of dimension m."""
        if m <= 1:
            return 0
        return m - 1 if self.kind == SummaryKind.IDENTITY else 1

    def apply(self, samples: np.ndarray, i: int) -> np.ndarray:
        """
        Evaluate t on the coordinates other than i.

        :param samples: Sample matrix (n x m).
        :type samples: np.ndarray
        :param i: The excluded coordinate (zero-based).
        :type i: int

        :return: An n x dim(t) matrix.
        :rtype: np.ndarray
        """
        rest = np.delete(samples, i, axis=1)
        if self.kind == SummaryKind.IDENTITY or rest.shape[1] == 0:
            return rest
        return rest.mean(axis=1, keepdims=True)

    def as_dict(self) -> Dict[str, str]:
        return {'kind': self.kind.value}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SummaryStatistic) and self.kind == other.kind

    def __hash__(self) -> int:
        return hash(self.kind)

    def __repr__(self) -> str:
        return f"SummaryStatistic({self.kind.value})"


class ScoreBasis:
    """Polynomial feature map phi(x, t) of a linear-in-parameters conditional score model.

    The features are ``1, x, ..., x^degree`` followed by ``t_j`` and, from degree 2 on, the
    interactions ``x * t_j``.

    :param degree: Polynomial degree in x.
    :type degree: int
    """

    def __init__(self, degree: int = 2) -> None:
        if int(degree) != degree or degree < 1:
            raise ValueError("The basis degree should be an integer of at least 1.")
        self.degree: int = int(degree)

    @property
    def has_interactions(self) -> bool:
        return self.degree >= 2

    def feature_count(self, t_dim: int) -> int:
        return (self.degree + 1) + (2 if self.has_interactions else 1) * t_dim

    def features(self, x: np.ndarray, t: np.ndarray) -> np.ndarray:
        """
        Feature matrix phi(x, t).

        :param x: Coordinate values (length n).
        :type x: np.ndarray
        :param t: Summary statistics (n x dim(t)).
        :type t: np.ndarray

        :return: An n x p feature matrix.
        :rtype: np.ndarray
        """
        x, t = _columns(x, t)
        blocks = [np.vander(x, self.degree + 1, increasing=True), t]
        if self.has_interactions:
            blocks.append(x[:, None] * t)
        return np.hstack(blocks)

    def derivative(self, x: np.ndarray, t: np.ndarray) -> np.ndarray:
        """
        Derivative of the feature matrix with respect to x, holding t fixed.

        :param x: Coordinate values (length n).
        :type x: np.ndarray
        :param t: Summary statistics (n x dim(t)).
        :type t: np.ndarray

        :return: An n x p matrix.
        :rtype: np.ndarray
        """
        x, t = _columns(x, t)
        powers = np.vander(x, self.degree, increasing=True) * np.arange(1, self.degree + 1)
        blocks = [np.zeros((x.size, 1)), powers, np.zeros_like(t)]
        if self.has_interactions:
            blocks.append(t)
        return np.hstack(blocks)

    def as_dict(self) -> Dict[str, Union[int, bool]]:
        return {'degree': self.degree, 'interactions': self.has_interactions}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScoreBasis) and self.degree == other.degree

    def __hash__(self) -> int:
        return hash(self.degree)

    def __repr__(self) -> str:
        return f"ScoreBasis(degree={self.degree})"
