#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import json
import math
import pathlib
import numpy as np

from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple, TypeVar

from pathos.pools import ProcessPool

from .errors import SteinGofError

T = TypeVar("T")
R = TypeVar("R")


class NoValue(Enum):
    def __repr__(self):
        return '<%s.%s>' % (self.__class__.__name__, self.name)


class RandomStream(NoValue):
    """Purpose tags mixed into derived seeds so that independent draws never share a stream."""
    OBSERVED = 1
    GENERATOR_FIT = 2
    INDEX_DRAW = 3
    NULL_SAMPLE = 4
    NULL_INDEX = 5
    BOOTSTRAP = 6
    PERMUTATION = 7


def read_json(json_filename: pathlib.Path) -> Dict[str, Any]:
    """
    Read the JSON from the file path.

    :param json_filename: The path of the JSON file.
    :type json_filename: pathlib.Path

    :return: The json object loaded with json data from the file
    :rtype: Dict[str, Any]
    """
    with open(json_filename) as data:
        return json.load(data)


def derive_seed(base_seed: int, *keys: int) -> int:
    """
    Derive a 64-bit seed from a base seed and a tuple of stream keys.

    :param base_seed: The base seed.
    :type base_seed: int
    :param keys: Non-negative integers naming the stream (round, trial, replicate, ...).
    :type keys: int

    :return: A 64-bit seed.
    :rtype: int
    """
    words = np.random.SeedSequence([int(base_seed), *[int(k) for k in keys]]).generate_state(2, dtype=np.uint32)
    return int(words[0]) << 32 | int(words[1])


def make_rng(base_seed: int, *keys: int) -> np.random.Generator:
    """
    Build a random generator for the stream ``(base_seed, *keys)``.

    :param base_seed: The base seed.
    :type base_seed: int
    :param keys: Non-negative integers naming the stream.
    :type keys: int

    :return: A numpy random generator.
    :rtype: np.random.Generator
    """
    return np.random.default_rng(np.random.SeedSequence([int(base_seed), *[int(k) for k in keys]]))


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """
    Apply a function to every item, optionally on a pool of worker processes.
    Results are returned in input order.

    :param func: The function to apply.
    :type func: Callable
    :param items: The inputs.
    :type items: Iterable
    :param threads: Number of workers; values below 2 run sequentially.
    :type threads: int

    :return: The list of results.
    :rtype: List
    """
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]

    pool = ProcessPool(nodes=min(threads, len(items)))
    try:
        return list(pool.map(func, items))
    finally:
        pool.close()
        pool.join()
        pool.clear()


def as_sample_matrix(samples: Any, what: str = "samples") -> np.ndarray:
    """
    Coerce an input into a finite two-dimensional float matrix (rows are observations).
    One-dimensional inputs are read as a single column.

    :param samples: Array-like input.
    :type samples: Any
    :param what: Name used in error messages.
    :type what: str

    :return: A float matrix.
    :rtype: np.ndarray
    """
    matrix = np.asarray(samples, dtype=float)
    if matrix.ndim == 1:
        matrix = matrix[:, None]
    if matrix.ndim != 2:
        raise ValueError(f"{what} must be a matrix, got an array with {matrix.ndim} dimensions.")
    if not np.all(np.isfinite(matrix)):
        raise SteinGofError(f"{what} contain non-finite values.")
    return matrix


def empirical_quantile(null_draws: Sequence[float], alpha: float) -> float:
    """
    The empirical (1 - alpha)-quantile as the order statistic of rank ceil((1 - alpha) * b).

    :param null_draws: Simulated statistics.
    :type null_draws: Sequence[float]
    :param alpha: Test level.
    :type alpha: float

    :return: The quantile.
    :rtype: float
    """
    ordered = np.sort(np.asarray(null_draws, dtype=float))
    rank = math.ceil(round((1.0 - alpha) * len(ordered), 10))
    rank = min(max(rank, 1), len(ordered))
    return float(ordered[rank - 1])


def monte_carlo_p_value(statistic: float, null_draws: Sequence[float]) -> float:
    """
    Monte Carlo p-value (1 + #{null >= statistic}) / (b + 1).

    :param statistic: The observed statistic.
    :type statistic: float
    :param null_draws: Simulated statistics.
    :type null_draws: Sequence[float]

    :return: The p-value in (0, 1].
    :rtype: float
    """
    draws = np.asarray(null_draws, dtype=float)
    return float((1 + np.count_nonzero(draws >= statistic)) / (len(draws) + 1))


def calibrate(statistic: float, null_draws: Sequence[float], alpha: float) -> Tuple[float, float, bool]:
    """
    Quantile, p-value and decision (reject iff statistic > quantile).

    :return: ``(quantile, p_value, reject)``.
    :rtype: Tuple[float, float, bool]
    """
    quantile = empirical_quantile(null_draws, alpha)
    return quantile, monte_carlo_p_value(statistic, null_draws), bool(statistic > quantile)
