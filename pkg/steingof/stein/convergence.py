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
import pandas as pd

from logging import Logger
from typing import Dict, List, Optional, Sequence

from .discrepancy import ksd_t_reference, stein_gram
from .operators import CoordinateWeights, QuadraticForm, draw_indices
from ..generators import GaussianVarianceDifference, GeneratorSpec
from ..kernels import KernelConfig
from ..errors import DimensionMismatchError
from ..scores import DEFAULT_RIDGE, ScoreBasis, ScoreField, SummaryStatistic, fit_score_matching
from ..utils import RandomStream, make_rng

PROBE_COLUMNS = ['N', 'B', 'gap_mean', 'gap_sd', 'seeds']


def convergence_probe(m: int, n: int, Ns: Sequence[int], Bs: Sequence[int], seeds: Sequence[int],
                      target: Optional[GeneratorSpec] = None,
                      exact_score: bool = False,
                      deterministic_uniform: bool = False,
                      summary: Optional[SummaryStatistic] = None,
                      basis: Optional[ScoreBasis] = None,
                      ridge: float = DEFAULT_RIDGE,
                      cfg: Optional[KernelConfig] = None,
                      form: QuadraticForm = QuadraticForm.SCALAR,
                      logger: Optional[Logger] = None) -> pd.DataFrame:
    """
    Measure how fast the non-parametric statistic approaches its population target. For
    every seed a fixed observed set of size n is drawn from the target; for every (N, B) the
    conditional scores are fitted on N target draws, the statistic is computed with a fresh
    index draw of size B, and the gap |npksd - ksd_t| is recorded.

    :param m: Dimension (used when no target is given: standard Gaussian in dimension m).
    :type m: int
    :param n: Observed sample size.
    :type n: int
    :param Ns: Generator sample sizes.
    :type Ns: Sequence[int]
    :param Bs: Index draw sizes.
    :type Bs: Sequence[int]
    :param seeds: Base seeds, one repetition each.
    :type seeds: Sequence[int]
    :param target: A generator with exact conditional scores (optional).
    :type target: Optional[GeneratorSpec]
    :param exact_score: Use the exact conditional scores instead of fitting them.
    :type exact_score: bool
    :param deterministic_uniform: When B equals m, use uniform weights instead of a random draw.
    :type deterministic_uniform: bool
    :param summary: Summary statistic of the fit (identity by default).
    :type summary: Optional[SummaryStatistic]
    :param basis: Feature map of the fit (degree 2 by default).
    :type basis: Optional[ScoreBasis]
    :param ridge: Ridge penalty of the fit.
    :type ridge: float
    :param cfg: Kernel configuration (median heuristic on the observed set by default).
    :type cfg: Optional[KernelConfig]
    :param form: The quadratic form.
    :type form: QuadraticForm
    :param logger: The logger where to log information (optional).
    :type logger: Optional[Logger]

    :return: One row per (N, B) with the mean and standard deviation of the gap over seeds.
    :rtype: pd.DataFrame
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    target = GaussianVarianceDifference(m) if target is None else target
    if target.dimension != m:
        raise DimensionMismatchError(m, target.dimension, "convergence probe target")
    exact: ScoreField = target.exact_conditional_field()
    cfg = KernelConfig() if cfg is None else cfg
    if not seeds:
        raise ValueError("The convergence probe needs at least one seed.")

    gaps: Dict[tuple, List[float]] = {(N, B): [] for N in Ns for B in Bs}
    for seed in seeds:
        observed = target.sample(n, make_rng(seed, RandomStream.OBSERVED.value))
        resolved = cfg.resolve(observed, logger=logger)
        reference = ksd_t_reference(observed, exact, resolved, form)
        for N in Ns:
            if exact_score:
                field = exact
            else:
                draws = target.sample(N, make_rng(seed, RandomStream.GENERATOR_FIT.value, N))
                field = fit_score_matching(draws, summary, basis, ridge, logger=logger)
            for B in Bs:
                if deterministic_uniform and B == target.dimension:
                    weights = CoordinateWeights.uniform(target.dimension)
                else:
                    draw = draw_indices(target.dimension, B, make_rng(seed, RandomStream.INDEX_DRAW.value, N, B))
                    weights = CoordinateWeights.from_draw(draw)
                value = stein_gram(observed, field, resolved, weights, form).v_statistic()
                gaps[(N, B)].append(abs(value - reference))
        logger.debug(f"convergence probe: seed {seed} done.")

    rows = [[N, B, float(np.mean(values)), float(np.std(values)), len(values)]
            for (N, B), values in gaps.items()]
    logger.info(f"convergence probe over {len(rows)} (N, B) point(s) and {len(seeds)} seed(s).")
    return pd.DataFrame(rows, columns=PROBE_COLUMNS)
