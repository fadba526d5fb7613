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
import pathlib
import numpy as np

from typing import Any, Dict, Optional, Sequence

from .config import TestConfig
from ..utils import calibrate


class TestReport:
    """
    Outcome of one goodness-of-fit test.

    :param method: Name of the test method.
    :type method: str
    :param statistic: The observed statistic tau.
    :type statistic: float
    :param null_draws: The simulated null statistics.
    :type null_draws: Sequence[float]
    :param config: The test configuration.
    :type config: TestConfig
    :param bandwidth: The resolved kernel bandwidth (on the observed sample).
    :type bandwidth: float
    :param variant: Score variant or statistic variant used.
    :type variant: str
    :param wall_time: Elapsed seconds.
    :type wall_time: float
    :param null_quantile: Decision threshold; the empirical (1 - alpha)-quantile of the null draws if None.
    :type null_quantile: Optional[float]
    """
    __test__ = False

    def __init__(self,
                 method: str,
                 statistic: float,
                 null_draws: Sequence[float],
                 config: TestConfig,
                 bandwidth: float,
                 variant: str,
                 wall_time: float = 0.0,
                 null_quantile: Optional[float] = None) -> None:
        self.method: str = method
        self.statistic: float = float(statistic)
        self.null_draws: np.ndarray = np.asarray(null_draws, dtype=float)
        self.config: TestConfig = config
        self.bandwidth: float = float(bandwidth)
        self.variant: str = variant
        self.wall_time: float = float(wall_time)

        quantile, self.p_value, reject = calibrate(self.statistic, self.null_draws, config.alpha)
        if null_quantile is not None:
            quantile = float(null_quantile)
            reject = bool(self.statistic > quantile)
        self.null_quantile: float = quantile
        self.reject: bool = reject

    @property
    def b(self) -> int:
        return int(self.null_draws.size)

    def as_dict(self, include_draws: bool = True) -> Dict[str, Any]:
        """A JSON representation of the report.

        :param include_draws: Whether the null draws are included.
        :type include_draws: bool

        :return: A JSON object representation of the report.
        :rtype: Dict[str, Any]
        """
        report = {
            'method': self.method,
            'statistic': self.statistic,
            'null_quantile': self.null_quantile,
            'p_value': self.p_value,
            'reject': self.reject,
            'alpha': self.config.alpha,
            'n': self.config.n,
            'N': self.config.N,
            'B': self.config.B,
            'b': self.b,
            'seed': self.config.seed,
            'bandwidth': self.bandwidth,
            'variant': self.variant,
            'wall_time': self.wall_time,
            'config': self.config.as_dict()
        }
        if include_draws:
            report['null_draws'] = self.null_draws.tolist()
        return report

    def write_json(self, json_file_path: Optional[pathlib.Path] = None) -> None:
        """
        Write a JSON file of the report.

        :param json_file_path: JSON output file name.
        :type json_file_path: Optional[pathlib.Path]
        """
        if not json_file_path:
            json_file_path = pathlib.Path(f"{self.method}-report.json")
        with open(json_file_path, "w") as outfile:
            outfile.write(json.dumps(self.as_dict(), indent=4))

    def __repr__(self) -> str:
        return (f"TestReport({self.method}: statistic={self.statistic:.6g}, "
                f"quantile={self.null_quantile:.6g}, p={self.p_value:.4f}, reject={self.reject})")
