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
import logging
import pathlib
import numpy as np
import pandas as pd

from datetime import datetime, timezone
from logging import Logger
from typing import List, NamedTuple, Optional

from .config import ExperimentConfig
from ..errors import ConfigurationError
from ..gof import TestMethod, TestReport, run_method
from ..utils import derive_seed, parallel_map
from ..version import __manifest_version__, __version__

RESULT_COLUMNS = ['axis', 'method', 'rate_mean', 'rate_sd', 'trials', 'rounds']


class Trial(NamedTuple):
    """One test run of a sweep."""
    method: TestMethod
    axis_value: float
    round: int
    trial: int


def run_test(config: ExperimentConfig,
             method: Optional[TestMethod] = None,
             logger: Optional[Logger] = None) -> TestReport:
    """
    Run the single test an experiment configuration describes.

    :param config: The experiment configuration.
    :type config: ExperimentConfig
    :param method: The method (the configured one if None).
    :type method: Optional[TestMethod]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]

    :return: The test report.
    :rtype: TestReport
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    method = config.method if method is None else method
    if method is None:
        raise ConfigurationError("method: the experiment names no test method.")
    observed = config.observed_sample(config.test.n, config.seed)
    return run_method(method, observed, config.build_generator(), config.test, logger)


class ExperimentSweep:
    """
    Rejection-rate sweep: every method is run ``trials`` times per round and per value of
    the sweep axis, for ``rounds`` rounds. Trial seeds are derived from (base seed, round,
    trial), so results do not depend on the execution order or the number of workers.

    :param config: The experiment configuration (with a sweep section).
    :type config: ExperimentConfig
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """

    def __init__(self, config: ExperimentConfig, logger: Optional[Logger] = None) -> None:
        """Create an object of the sweep."""
        if config.axis is None:
            raise ConfigurationError("sweep: the experiment has no sweep section.")
        if not config.methods:
            raise ConfigurationError("methods: a sweep needs at least one method.")
        self.config: ExperimentConfig = config
        self.logger: Logger = logging.getLogger(__name__) if logger is None else logger

    def trials(self) -> List[Trial]:
        """Every test run of the sweep."""
        return [Trial(method, value, r, t)
                for method in self.config.methods
                for value in self.config.grid
                for r in range(self.config.rounds)
                for t in range(self.config.trials)]

    def run_trial(self, trial: Trial) -> bool:
        """
        Run one trial and return its decision.

        :param trial: The trial.
        :type trial: Trial

        :return: Whether the null hypothesis was rejected.
        :rtype: bool
        """
        config = self.config
        seed = derive_seed(config.seed, trial.round, trial.trial)
        test = config.test_config(trial.axis_value, seed)
        observed = config.observed_sample(test.n, seed, trial.axis_value)
        generator = config.build_generator()
        report = run_method(trial.method, observed, generator, test, self.logger)
        return report.reject

    def run(self) -> pd.DataFrame:
        """
        Run the sweep.

        :return: One row per (method, axis value) with columns
            ``axis, method, rate_mean, rate_sd, trials, rounds``.
        :rtype: pd.DataFrame
        """
        trials = self.trials()
        self.logger.info(f"running {len(trials)} trial(s) of experiment '{self.config.experiment_id}' "
                         f"on {self.config.threads} worker(s).")
        decisions = parallel_map(self.run_trial, trials, self.config.threads)

        frame = pd.DataFrame([[t.method.value, t.axis_value, t.round, int(d)] for t, d in zip(trials, decisions)],
                             columns=['method', 'axis', 'round', 'reject'])
        per_round = frame.groupby(['method', 'axis', 'round'], sort=True)['reject'].mean().reset_index()
        rows = []
        for (method, axis), group in per_round.groupby(['method', 'axis'], sort=True):
            rates = group['reject'].to_numpy(dtype=float)
            rows.append([axis, method, float(np.mean(rates)), float(np.std(rates)),
                         self.config.trials, self.config.rounds])
        results = pd.DataFrame(rows, columns=RESULT_COLUMNS)
        return results.sort_values(['method', 'axis'], kind='mergesort').reset_index(drop=True)

    def write(self, results: pd.DataFrame, out_dir: pathlib.Path) -> None:
        """
        Write the results CSV and the manifest into a directory.

        :param results: The sweep results.
        :type results: pd.DataFrame
        :param out_dir: The output directory.
        :type out_dir: pathlib.Path
        """
        out_dir = pathlib.Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_path = self.config.output_path(out_dir, 'csv')
        results.to_csv(csv_path, index=False)
        manifest_path = self.config.output_path(out_dir, 'manifest')
        with open(manifest_path, 'w') as outfile:
            outfile.write(json.dumps(build_manifest(self.config), indent=4))
        self.logger.info(f"wrote {csv_path} and {manifest_path}.")


def build_manifest(config: ExperimentConfig) -> dict:
    """A manifest recording every resolved parameter of an experiment; it can be loaded back as a configuration."""
    return {
        'manifestVersion': __manifest_version__,
        'steingofVersion': __version__,
        'createdAt': datetime.now(timezone.utc).isoformat(),
        'config': config.as_dict()
    }
