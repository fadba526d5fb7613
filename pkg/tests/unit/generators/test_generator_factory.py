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
import pytest

from steingof.errors import GeneratorError
from steingof.generators import GaussianGenerator, GaussianVarianceDifference, MixtureOfGaussians, RealSubsample, \
    SGLDGenerator, build_generator


class TestBuildGenerator:

    @pytest.mark.unit
    def test_gvd(self) -> None:
        generator = build_generator({'type': 'gvd', 'dimension': 3, 'sigma_per': 0.4})
        assert(isinstance(generator, GaussianVarianceDifference))
        assert(build_generator(generator.as_dict()).as_dict() == generator.as_dict())

    @pytest.mark.unit
    def test_gaussian(self) -> None:
        generator = build_generator({'type': 'gaussian', 'mean': [0.0, 1.0], 'covariance': [[1.0, 0.2], [0.2, 1.0]]})
        assert(isinstance(generator, GaussianGenerator))
        assert(np.array_equal(generator.mean, [0.0, 1.0]))

    @pytest.mark.unit
    def test_mixture(self) -> None:
        generator = build_generator({'type': 'mog', 'dimension': 2, 'rho_per': 0.3})
        assert(isinstance(generator, MixtureOfGaussians))
        assert(generator.covariance[0, 1] == 0.3)
        assert(build_generator(generator.as_dict()).as_dict() == generator.as_dict())

    @pytest.mark.unit
    def test_real_relative_path(self, tmp_path: pathlib.Path) -> None:
        (tmp_path / "data.csv").write_text("x\n1\n2\n")
        generator = build_generator({'type': 'real', 'path': 'data.csv'}, base_path=tmp_path)
        assert(isinstance(generator, RealSubsample))
        assert(generator.dimension == 1)

    @pytest.mark.unit
    def test_sgld(self) -> None:
        target = {'type': 'gvd', 'dimension': 2}
        generator = build_generator({'type': 'sgld', 'target': target, 'step': 0.1, 'burn_in': 10})
        assert(isinstance(generator, SGLDGenerator))
        assert(generator.dimension == 2)
        assert(generator.as_dict()['target'] == target)
        assert(generator.burn_in == 10)

    @pytest.mark.parametrize(("document"), [
        {},
        {'type': 'gan'},
        {'type': 'real'},
        {'type': 'sgld'},
    ])
    @pytest.mark.unit
    def test_invalid(self, document: dict) -> None:
        with pytest.raises(GeneratorError):
            build_generator(document)
