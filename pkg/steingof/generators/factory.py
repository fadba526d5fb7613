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
import pathlib

from logging import Logger
from typing import Any, Dict, Optional

from .abstract_generator import GeneratorKind, GeneratorSpec
from .gaussian import GaussianGenerator, GaussianVarianceDifference
from .mixture import MixtureOfGaussians
from .real import RealSubsample
from .sgld import DEFAULT_BURN_IN, DEFAULT_STEP, DEFAULT_THINNING, SGLDGenerator
from ..errors import GeneratorError


def build_generator(document: Dict[str, Any],
                    base_path: Optional[pathlib.Path] = None,
                    logger: Optional[Logger] = None) -> GeneratorSpec:
    """
    Build a generator from its JSON description, the inverse of ``GeneratorSpec.as_dict``.

    :param document: JSON object with a ``type`` field (gaussian, gvd, mog, real, sgld).
    :type document: Dict[str, Any]
    :param base_path: Directory against which relative CSV paths are resolved (optional).
    :type base_path: Optional[pathlib.Path]
    :param logger: The logger where to log information/warning or errors (optional).
    :type logger: Optional[Logger]

    :return: The generator.
    :rtype: GeneratorSpec
    """
    try:
        kind = GeneratorKind(document['type'])
    except KeyError:
        raise GeneratorError("The generator description has no 'type' field.")
    except ValueError:
        raise GeneratorError(f"Unknown generator type '{document['type']}'.")

    if kind == GeneratorKind.GVD:
        return GaussianVarianceDifference(document['dimension'], document.get('sigma_per', 0.0), logger=logger)

    if kind == GeneratorKind.GAUSSIAN:
        return GaussianGenerator(document['mean'], document['covariance'], logger=logger)

    if kind == GeneratorKind.MOG:
        return MixtureOfGaussians(document['dimension'], rho_per=document.get('rho_per', 0.0),
                                  means=document.get('means'), weights=document.get('weights'), logger=logger)

    if kind == GeneratorKind.REAL:
        if 'path' not in document or document['path'] is None:
            raise GeneratorError("A 'real' generator needs the 'path' of a CSV file.")
        path = pathlib.Path(document['path'])
        if base_path is not None and not path.is_absolute():
            path = base_path / path
        return RealSubsample.from_csv(path, logger=logger)

    if not isinstance(document.get('target'), dict):
        raise GeneratorError("An 'sgld' generator needs a 'target' generator description.")
    target = build_generator(document['target'], base_path, logger)
    return SGLDGenerator(target.exact_score(),
                         step=document.get('step', DEFAULT_STEP),
                         burn_in=document.get('burn_in', DEFAULT_BURN_IN),
                         thinning=document.get('thinning', DEFAULT_THINNING),
                         chains=document.get('chains'),
                         target_document=copy.deepcopy(document['target']),
                         logger=logger)
