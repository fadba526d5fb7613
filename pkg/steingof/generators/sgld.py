#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import math
import numpy as np

from logging import Logger
from typing import Any, Dict, Optional

from .abstract_generator import GeneratorKind, GeneratorSpec
from ..errors import GeneratorError
from ..scores.field import ScoreField

DEFAULT_STEP = 0.01
DEFAULT_BURN_IN = 1000
DEFAULT_THINNING = 10


class SGLDGenerator(GeneratorSpec):
    """
    Langevin sampler driven by a score field, x <- x + (step / 2) s(x) + sqrt(step) xi with
    xi ~ N(0, I). Chains start from N(0, I), run ``burn_in`` steps and then emit one state
    every ``thinning`` steps. All chains are advanced together.

    :param target: The score field of the target density.
    :type target: ScoreField
    :param step: Step size (higher than 0).
    :type step: float
    :param burn_in: Number of discarded initial steps.
    :type burn_in: int
    :param thinning: Number of steps between two emitted states.
    :type thinning: int
    :param chains: Number of parallel chains; one chain per requested sample if None.
    :type chains: Optional[int]
    :param target_document: JSON description of the target generator, echoed by ``as_dict`` (optional).
    :type target_document: Optional[Dict[str, Any]]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """

    def __init__(self, target: ScoreField,
                 step: float = DEFAULT_STEP,
                 burn_in: int = DEFAULT_BURN_IN,
                 thinning: int = DEFAULT_THINNING,
                 chains: Optional[int] = None,
                 target_document: Optional[Dict[str, Any]] = None,
                 logger: Optional[Logger] = None) -> None:
        super().__init__(GeneratorKind.SGLD, target.dimension, logger)
        if not step > 0.0:
            raise GeneratorError(f"The SGLD step size should be higher than 0 (got {step}).")
        if burn_in < 0 or thinning < 1:
            raise GeneratorError("The SGLD burn-in should be non-negative and the thinning at least 1.")
        if chains is not None and chains < 1:
            raise GeneratorError(f"The number of SGLD chains should be at least 1 (got {chains}).")
        self.target: ScoreField = target
        self.step: float = float(step)
        self.burn_in: int = int(burn_in)
        self.thinning: int = int(thinning)
        self.chains: Optional[int] = None if chains is None else int(chains)
        self.target_document: Optional[Dict[str, Any]] = target_document

    def _advance(self, state: np.ndarray, steps: int, rng: np.random.Generator) -> np.ndarray:
        noise_scale = math.sqrt(self.step)
        for _ in range(steps):
            state = state + 0.5 * self.step * self.target.scores(state) \
                + noise_scale * rng.standard_normal(state.shape)
        return state

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        count = self._check_count(count)
        chains = count if self.chains is None else min(self.chains, count)
        per_chain = math.ceil(count / chains)

        state = self._advance(rng.standard_normal((chains, self.dimension)), self.burn_in, rng)
        emitted = []
        for _ in range(per_chain):
            state = self._advance(state, self.thinning, rng)
            emitted.append(state)
        self.logger.debug(f"ran {chains} SGLD chain(s) for {self.burn_in + per_chain * self.thinning} steps.")
        # emission-major order: the first rows come from distinct chains
        return np.stack(emitted, axis=0).reshape(-1, self.dimension)[:count]

    def exact_score(self) -> ScoreField:
        return self.target

    def as_dict(self) -> Dict[str, Any]:
        return {
            'type': self.kind.value,
            'dimension': self.dimension,
            'target': self.target_document if self.target_document else self.target.name,
            'step': self.step,
            'burn_in': self.burn_in,
            'thinning': self.thinning,
            'chains': self.chains
        }
