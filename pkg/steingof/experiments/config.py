#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import copy
import json
import logging
import pathlib
import numpy as np

from logging import Logger
from typing import Any, Dict, List, Optional, Union

from .schema import ConfigValidator
from ..errors import ConfigurationError
from ..generators import GeneratorSpec, RealSubsample, build_generator
from ..gof import TestConfig, TestMethod
from ..utils import RandomStream, make_rng, read_json

DEFAULT_OUTPUTS = {
    'report': 'report.json',
    'csv': 'results.csv',
    'manifest': 'manifest.json',
    'score': 'score.json',
    'probe': 'probe.csv'
}


def load_document(path: Union[str, pathlib.Path]) -> Dict[str, Any]:
    """
    Read a JSON configuration file; parse errors are reported with their line and column.

    :param path: The configuration file.
    :type path: Union[str, pathlib.Path]

    :return: The JSON document.
    :rtype: Dict[str, Any]
    """
    path = pathlib.Path(path)
    try:
        return read_json(path)
    except FileNotFoundError:
        raise ConfigurationError(f"Configuration file not found: {path}")
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")


def _resolve_paths(document: Dict[str, Any], base_path: pathlib.Path) -> None:
    """Make the file paths of a generator description absolute, in place."""
    if isinstance(document.get('path'), str):
        document['path'] = str((base_path / document['path']).resolve())
    if isinstance(document.get('target'), dict):
        _resolve_paths(document['target'], base_path)


class ExperimentConfig:
    """
    A validated experiment: the generator under assessment, where the observed sample comes
    from, the test configuration, and optionally a sweep or a convergence probe.

    :param document: The experiment configuration in JSON format (or a manifest wrapping one).
    :type document: Dict[str, Any]
    :param base_path: Directory against which relative paths are resolved.
    :type base_path: Optional[pathlib.Path]
    :param seed: Base seed overriding the configuration (optional).
    :type seed: Optional[int]
    :param threads: Number of worker processes (optional).
    :type threads: Optional[int]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]
    """

    def __init__(self, document: Dict[str, Any],
                 base_path: Optional[pathlib.Path] = None,
                 seed: Optional[int] = None,
                 threads: Optional[int] = None,
                 logger: Optional[Logger] = None) -> None:
        """Create and validate an experiment configuration."""
        self.logger: Logger = logging.getLogger(__name__) if logger is None else logger
        if not isinstance(document, dict):
            raise ConfigurationError("The experiment configuration should be a JSON object.")
        if 'manifestVersion' in document:
            self.logger.debug("unwrapping the configuration recorded in a manifest.")
            document = document.get('config', {})
        document = copy.deepcopy(document)
        ConfigValidator(self.logger).validate(document)

        self.base_path: pathlib.Path = pathlib.Path.cwd() if base_path is None else pathlib.Path(base_path)
        self.experiment_id: str = document['id']
        self.generator_document: Dict[str, Any] = document['generator']
        self.observed_document: Optional[Dict[str, Any]] = document.get('observed')
        _resolve_paths(self.generator_document, self.base_path)
        if self.observed_document and 'generator' in self.observed_document:
            _resolve_paths(self.observed_document['generator'], self.base_path)
        elif self.observed_document:
            self.observed_document['csv'] = str((self.base_path / self.observed_document['csv']).resolve())
        try:
            self.test: TestConfig = TestConfig.from_dict(document.get('test', {}), seed=seed, threads=threads)
        except (ValueError, TypeError) as e:
            raise ConfigurationError(f"test: {e}")

        methods: List[str] = document.get('methods', [document['method']] if 'method' in document else [])
        self.methods: List[TestMethod] = [TestMethod(m) for m in methods]
        self.method: Optional[TestMethod] = TestMethod(document['method']) if 'method' in document else \
            (self.methods[0] if self.methods else None)

        sweep = document.get('sweep')
        self.axis: Optional[str] = sweep['axis'] if sweep else None
        self.grid: List[float] = list(sweep['grid']) if sweep else []
        self.trials: int = sweep.get('trials', 1) if sweep else 1
        self.rounds: int = sweep.get('rounds', 1) if sweep else 1
        self.probe: Dict[str, Any] = document.get('probe', {})
        self.outputs: Dict[str, str] = {**DEFAULT_OUTPUTS, **document.get('output', {})}
        self._real: Optional[RealSubsample] = None

    @classmethod
    def load(cls, path: Union[str, pathlib.Path],
             seed: Optional[int] = None,
             threads: Optional[int] = None,
             logger: Optional[Logger] = None) -> 'ExperimentConfig':
        """
        Load and validate an experiment configuration (or sweep manifest) file.

        :param path: The configuration file.
        :type path: Union[str, pathlib.Path]
        :param seed: Base seed overriding the configuration (optional).
        :type seed: Optional[int]
        :param threads: Number of worker processes (optional).
        :type threads: Optional[int]
        :param logger: The logger where to log information/warning or errors (optional).
        :type logger: Optional[Logger]

        :return: The experiment configuration.
        :rtype: ExperimentConfig
        """
        path = pathlib.Path(path)
        return cls(load_document(path), path.resolve().parent, seed, threads, logger)

    @property
    def seed(self) -> int:
        return self.test.seed

    @property
    def threads(self) -> int:
        return self.test.threads

    def build_generator(self) -> GeneratorSpec:
        """The generator under assessment."""
        return build_generator(self.generator_document, self.base_path, self.logger)

    def observed_generator(self, axis_value: Optional[float] = None) -> Optional[GeneratorSpec]:
        """
        The generator of the observed sample, with the swept perturbation applied; None when
        the observed sample is read from a CSV file.

        :param axis_value: Value of a ``sigma_per`` or ``rho_per`` sweep axis (optional).
        :type axis_value: Optional[float]

        :return: The observed-sample generator.
        :rtype: Optional[GeneratorSpec]
        """
        if self.observed_document and 'csv' in self.observed_document:
            return None
        document = copy.deepcopy(self.observed_document['generator'] if self.observed_document
                                 else self.generator_document)
        if axis_value is not None and self.axis in ('sigma_per', 'rho_per'):
            document[self.axis] = axis_value
        return build_generator(document, self.base_path, self.logger)

    def test_config(self, axis_value: Optional[float] = None, seed: Optional[int] = None) -> TestConfig:
        """The test configuration with a swept size and a trial seed applied."""
        changes: Dict[str, Any] = {}
        if seed is not None:
            changes.update(seed=seed, threads=1)
        if axis_value is not None and self.axis in ('N', 'B', 'n'):
            changes[self.axis] = int(axis_value)
        return self.test.replace(**changes) if changes else self.test

    def observed_sample(self, n: int, seed: int, axis_value: Optional[float] = None) -> np.ndarray:
        """
        Draw the observed sample of one trial. A CSV sample is used whole when it has at most
        n rows, and subsampled without replacement otherwise.

        :param n: Observed sample size.
        :type n: int
        :param seed: The trial seed.
        :type seed: int
        :param axis_value: Value of a perturbation sweep axis (optional).
        :type axis_value: Optional[float]

        :return: The observed sample matrix.
        :rtype: np.ndarray
        """
        rng = make_rng(seed, RandomStream.OBSERVED.value)
        generator = self.observed_generator(axis_value)
        if generator is not None:
            return generator.sample(n, rng)
        if self._real is None:
            self._real = RealSubsample.from_csv(self.observed_document['csv'], self.logger)
        dataset = self._real.dataset
        if dataset.shape[0] <= n:
            return np.array(dataset)
        return dataset[np.sort(rng.choice(dataset.shape[0], size=n, replace=False))]

    def output_path(self, out_dir: pathlib.Path, key: str) -> pathlib.Path:
        return pathlib.Path(out_dir) / self.outputs[key]

    def as_dict(self) -> Dict[str, Any]:
        """A JSON representation with every resolved parameter.

        :return: A JSON object representation of the experiment.
        :rtype: Dict[str, Any]
        """
        document: Dict[str, Any] = {
            'id': self.experiment_id,
            'generator': copy.deepcopy(self.generator_document),
            'test': self.test.as_dict()
        }
        if self.method is not None:
            document['method'] = self.method.value
        if self.methods:
            document['methods'] = [m.value for m in self.methods]
        if self.observed_document:
            document['observed'] = copy.deepcopy(self.observed_document)
        if self.axis:
            document['sweep'] = {'axis': self.axis, 'grid': list(self.grid), 'trials': self.trials,
                                 'rounds': self.rounds}
        if self.probe:
            document['probe'] = copy.deepcopy(self.probe)
        document['output'] = dict(self.outputs)
        return document
