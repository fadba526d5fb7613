#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import jsonschema
import logging

from logging import Logger
from typing import Any, Dict, Optional

from ..errors import ConfigurationError
from ..generators import GeneratorKind
from ..gof import TestMethod
from ..scores import FitMethod, SummaryKind
from ..stein import QuadraticForm

SWEEP_AXES = ('sigma_per', 'rho_per', 'N', 'B', 'n')

_positive_int = {"type": "integer", "minimum": 1}
_number_list = {"type": "array", "items": {"type": "number"}, "minItems": 1}

GENERATOR_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["type"],
    "properties": {
        "type": {"enum": [kind.value for kind in GeneratorKind]},
        "dimension": _positive_int,
        "sigma_per": {"type": "number", "exclusiveMinimum": -1},
        "rho_per": {"type": "number"},
        "mean": _number_list,
        "covariance": {"type": "array", "items": _number_list, "minItems": 1},
        "means": {"type": "array", "items": _number_list, "minItems": 1},
        "weights": _number_list,
        "path": {"type": "string"},
        "target": {"type": "object"},
        "step": {"type": "number", "exclusiveMinimum": 0},
        "burn_in": {"type": "integer", "minimum": 0},
        "thinning": _positive_int,
        "chains": {"type": ["integer", "null"], "minimum": 1}
    },
    "allOf": [
        {"if": {"properties": {"type": {"enum": ["gvd", "mog"]}}}, "then": {"required": ["dimension"]}},
        {"if": {"properties": {"type": {"const": "gaussian"}}}, "then": {"required": ["mean", "covariance"]}},
        {"if": {"properties": {"type": {"const": "real"}}}, "then": {"required": ["path"]}},
        {"if": {"properties": {"type": {"const": "sgld"}}}, "then": {"required": ["target"]}}
    ]
}

TEST_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "alpha": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
        "n": {"type": "integer", "minimum": 2},
        "N": {"type": "integer", "minimum": 2},
        "B": _positive_int,
        "b": {"type": "integer", "minimum": 20},
        "seed": {"type": "integer", "minimum": 0},
        "summary": {"enum": [kind.value for kind in SummaryKind]},
        "degree": _positive_int,
        "ridge": {"type": "number", "minimum": 0},
        "kernel": {
            "type": "object",
            "properties": {
                "family": {"const": "gaussian"},
                "bandwidth": {"oneOf": [{"type": "number", "exclusiveMinimum": 0}, {"const": "median"}]}
            },
            "additionalProperties": False
        },
        "bandwidth": {"oneOf": [{"type": "number", "exclusiveMinimum": 0}, {"const": "median"}]},
        "form": {"enum": [form.value for form in QuadraticForm]},
        "fit": {"enum": [fit.value for fit in FitMethod]},
        "ladder": _number_list,
        "B1": {"type": "integer", "minimum": 50},
        "B2": {"type": "integer", "minimum": 50}
    },
    "additionalProperties": False
}

EXPERIMENT_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "steingof experiment",
    "type": "object",
    "required": ["id", "generator"],
    "properties": {
        "id": {"type": "string", "minLength": 1},
        "method": {"enum": [method.value for method in TestMethod]},
        "methods": {"type": "array", "items": {"enum": [method.value for method in TestMethod]},
                    "minItems": 1, "uniqueItems": True},
        "generator": GENERATOR_SCHEMA,
        "observed": {
            "type": "object",
            "oneOf": [
                {"required": ["generator"], "properties": {"generator": GENERATOR_SCHEMA}},
                {"required": ["csv"], "properties": {"csv": {"type": "string"}}}
            ]
        },
        "test": TEST_SCHEMA,
        "sweep": {
            "type": "object",
            "required": ["axis", "grid"],
            "properties": {
                "axis": {"enum": list(SWEEP_AXES)},
                "grid": _number_list,
                "trials": _positive_int,
                "rounds": _positive_int
            },
            "additionalProperties": False
        },
        "probe": {
            "type": "object",
            "required": ["Ns", "Bs"],
            "properties": {
                "n": {"type": "integer", "minimum": 2},
                "Ns": {"type": "array", "items": {"type": "integer", "minimum": 2}, "minItems": 1},
                "Bs": {"type": "array", "items": _positive_int, "minItems": 1},
                "seeds": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
                "exact_score": {"type": "boolean"},
                "deterministic_uniform": {"type": "boolean"}
            },
            "additionalProperties": False
        },
        "output": {
            "type": "object",
            "properties": {
                "report": {"type": "string"},
                "csv": {"type": "string"},
                "manifest": {"type": "string"},
                "score": {"type": "string"},
                "probe": {"type": "string"}
            },
            "additionalProperties": False
        }
    }
}


class ConfigValidator:
    """
    Validate experiment configuration documents against the experiment JSON schema, then
    check the constraints the schema cannot express.

    :param logger: The logger where to log information/warning or errors.
    :type logger: Optional[Logger]
    """

    def __init__(self, logger: Optional[Logger] = None) -> None:
        """Create an object of the configuration validator."""
        self.logger: Logger = logging.getLogger(__name__) if logger is None else logger
        self.schema: Dict[str, Any] = EXPERIMENT_SCHEMA

    def validate(self, data: Dict[str, Any]) -> None:
        """
        Perform syntax validation against the schema, and semantic validation.

        :param data: Experiment configuration in JSON format.
        :type data: Dict[str, Any]
        """
        self._syntax_validation(data)
        self._semantic_validation(data)

    def _syntax_validation(self, data: Dict[str, Any]) -> None:
        v = jsonschema.Draft7Validator(self.schema)
        has_error = False
        for error in sorted(v.iter_errors(data), key=str):
            msg = ' > '.join([str(e) for e in error.absolute_path]) + ': ' + error.message
            self.logger.error(msg)
            has_error = True

        if has_error:
            raise ConfigurationError('The experiment configuration has syntax errors.')

    def _semantic_validation(self, data: Dict[str, Any]) -> None:
        has_error = False

        if 'sweep' in data:
            axis = data['sweep']['axis']
            observed = data.get('observed', {}).get('generator', data['generator'])
            if axis == 'sigma_per' and observed['type'] != GeneratorKind.GVD.value:
                self.logger.error("sweep > axis: 'sigma_per' sweeps need a 'gvd' observed generator.")
                has_error = True
            if axis == 'rho_per' and observed['type'] != GeneratorKind.MOG.value:
                self.logger.error("sweep > axis: 'rho_per' sweeps need a 'mog' observed generator.")
                has_error = True
            if axis in ('sigma_per', 'rho_per') and 'csv' in data.get('observed', {}):
                self.logger.error(f"sweep > axis: '{axis}' sweeps cannot use a CSV observed sample.")
                has_error = True
            if 'methods' not in data and 'method' not in data:
                self.logger.error("methods: a sweep needs at least one method.")
                has_error = True

        test = data.get('test', {})
        if test.get('N', 500) < test.get('n', 100) and \
                any(m.startswith('npksd') for m in data.get('methods', [data.get('method', '')])):
            self.logger.error("test > N: the NP-KSD methods need N >= n.")
            has_error = True

        if has_error:
            raise ConfigurationError('The experiment configuration has semantic errors.')
