#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import pathlib
import numpy as np
import pandas as pd

from logging import Logger
from typing import Any, Dict, List, Optional, Union

from .abstract_generator import GeneratorKind, GeneratorSpec
from ..errors import GeneratorError, SteinGofError
from ..utils import as_sample_matrix


class RealSubsample(GeneratorSpec):
    """
    Generator that resamples the rows of a fixed dataset uniformly with replacement.

    :param dataset: The data matrix (rows are samples).
    :type dataset: Any
    :param source: Where the dataset was read from (optional, informative only).
    :type source: Optional[str]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """

    def __init__(self, dataset: Any, source: Optional[str] = None, logger: Optional[Logger] = None) -> None:
        try:
            dataset = as_sample_matrix(dataset, "real dataset")
        except SteinGofError as e:
            raise GeneratorError(str(e))
        if dataset.shape[0] == 0:
            raise GeneratorError("The real dataset should not be empty.")
        super().__init__(GeneratorKind.REAL, dataset.shape[1], logger)
        dataset = dataset.copy()
        dataset.setflags(write=False)
        self.dataset: np.ndarray = dataset
        self.source: Optional[str] = source
        self.logger.debug(f"loaded {dataset.shape[0]} rows of dimension {self.dimension}.")

    @classmethod
    def from_csv(cls, path: Union[str, pathlib.Path], logger: Optional[Logger] = None) -> 'RealSubsample':
        """
        Read a dataset from a CSV file with a header row naming the columns and one
        sample per row.

        :param path: The CSV file.
        :type path: Union[str, pathlib.Path]
        :param logger: The logger where to log information/warning or errors (optional).
        :type logger: Optional[Logger]

        :return: The resampling generator.
        :rtype: RealSubsample
        """
        path = pathlib.Path(path)
        try:
            frame = pd.read_csv(path, dtype=str, skipinitialspace=True)
        except pd.errors.EmptyDataError:
            raise GeneratorError(f"The CSV file '{path}' is empty.")
        except pd.errors.ParserError as e:
            raise GeneratorError(f"Malformed CSV file '{path}': {e}")
        if frame.empty:
            raise GeneratorError(f"The CSV file '{path}' has no data rows.")

        values = frame.apply(pd.to_numeric, errors='coerce')
        bad_rows: List[int] = [int(index) + 2 for index in values.index[values.isna().any(axis=1)]]
        if bad_rows:
            shown = ", ".join(str(line) for line in bad_rows[:10])
            raise GeneratorError(f"Malformed CSV file '{path}': non-numeric or missing values on line(s) {shown}.")
        return cls(values.to_numpy(dtype=float), source=str(path), logger=logger)

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        count = self._check_count(count)
        return self.dataset[rng.integers(0, self.dataset.shape[0], size=count)]

    def as_dict(self) -> Dict[str, Any]:
        return {
            'type': self.kind.value,
            'dimension': self.dimension,
            'rows': int(self.dataset.shape[0]),
            'path': self.source
        }
