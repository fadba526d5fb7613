#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import numpy as np
import pytest

from steingof.errors import DimensionMismatchError, GeneratorError
from steingof.generators import GaussianGenerator, GaussianVarianceDifference, GeneratorKind, MixtureOfGaussians, \
    SGLDGenerator, exact_conditional_score, exact_score, sample
from steingof.utils import make_rng


def finite_difference_gradient(function, z: np.ndarray, h: float = 1e-5) -> np.ndarray:
    gradient = np.empty_like(z)
    for i in range(z.size):
        step = np.zeros_like(z)
        step[i] = h
        gradient[i] = (function(z + step) - function(z - step)) / (2 * h)
    return gradient


class TestGaussianVarianceDifference:

    @pytest.mark.unit
    def test_moments(self) -> None:
        generator = GaussianVarianceDifference(3, sigma_per=1.0)
        draws = sample(generator, 20000, np.random.default_rng(0))
        assert(draws.shape == (20000, 3))
        assert(np.allclose(draws.mean(axis=0), 0.0, atol=0.05))
        assert(np.allclose(draws.var(axis=0), 2.0, atol=0.1))

    @pytest.mark.unit
    def test_scores(self) -> None:
        generator = GaussianVarianceDifference(2, sigma_per=1.0)
        assert(np.allclose(exact_score(generator).scores([[1.0, 2.0]]), [[-0.5, -1.0]]))
        assert(np.allclose(exact_score(generator).score_derivatives([[1.0, 2.0]]), -0.5))
        assert(exact_conditional_score(generator, 1, 3.0, [7.0]) == pytest.approx(-1.5))

    @pytest.mark.unit
    def test_invalid_perturbation(self) -> None:
        with pytest.raises(GeneratorError):
            GaussianVarianceDifference(2, sigma_per=-1.0)

    @pytest.mark.unit
    def test_invalid_dimension(self) -> None:
        with pytest.raises(GeneratorError):
            GaussianVarianceDifference(0)

    @pytest.mark.unit
    def test_invalid_count(self) -> None:
        with pytest.raises(GeneratorError):
            GaussianVarianceDifference(2).sample(0, np.random.default_rng(0))

    @pytest.mark.unit
    def test_json(self) -> None:
        generator = GaussianVarianceDifference(4, sigma_per=0.5)
        assert(generator.kind == GeneratorKind.GVD)
        assert(generator.as_dict() == {'type': 'gvd', 'dimension': 4, 'sigma_per': 0.5})


class TestGaussianGenerator:

    @pytest.fixture
    def generator(self) -> GaussianGenerator:
        return GaussianGenerator([1.0, -1.0], [[1.0, 0.5], [0.5, 1.0]])

    @pytest.mark.unit
    def test_conditional_is_joint_component(self, generator: GaussianGenerator) -> None:
        z = np.random.default_rng(4).standard_normal((6, 2))
        assert(np.allclose(generator.exact_conditional_field().scores(z), generator.exact_score().scores(z)))

    @pytest.mark.unit
    def test_score_is_log_density_gradient(self, generator: GaussianGenerator) -> None:
        z = np.array([0.3, 0.2])
        expected = finite_difference_gradient(lambda p: generator.log_density(p)[0], z)
        assert(np.allclose(generator.exact_score().scores(z[None, :])[0], expected, atol=1e-6))

    @pytest.mark.unit
    def test_not_positive_definite(self) -> None:
        with pytest.raises(GeneratorError):
            GaussianGenerator([0.0, 0.0], [[1.0, 2.0], [2.0, 1.0]])

    @pytest.mark.unit
    def test_shape_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError):
            GaussianGenerator([0.0, 0.0], np.eye(3))


class TestMixtureOfGaussians:

    @pytest.fixture
    def mixture(self) -> MixtureOfGaussians:
        return MixtureOfGaussians(3, rho_per=0.3)

    @pytest.mark.unit
    def test_component_proportions(self, mixture: MixtureOfGaussians) -> None:
        draws = mixture.sample(20000, np.random.default_rng(1))
        assert(abs(np.mean(draws[:, 0] > 0.0) - 0.5) < 0.03)
        assert(np.allclose(draws[:, 1:].mean(axis=0), 0.0, atol=0.05))

    @pytest.mark.unit
    def test_zero_score_at_origin(self, mixture: MixtureOfGaussians) -> None:
        assert(np.allclose(mixture.exact_score().scores(np.zeros((1, 3))), 0.0))

    @pytest.mark.unit
    def test_score_is_log_density_gradient(self, mixture: MixtureOfGaussians) -> None:
        for z in np.random.default_rng(2).standard_normal((4, 3)) * 2.0:
            expected = finite_difference_gradient(lambda p: mixture.log_density(p)[0], z)
            assert(np.allclose(mixture.exact_score().scores(z[None, :])[0], expected, atol=1e-5))

    @pytest.mark.unit
    def test_score_derivative(self, mixture: MixtureOfGaussians) -> None:
        field = mixture.exact_score()
        for z in np.random.default_rng(3).standard_normal((4, 3)):
            expected = [finite_difference_gradient(lambda p: field.scores(p[None, :])[0, i], z)[i] for i in range(3)]
            assert(np.allclose(field.score_derivatives(z[None, :])[0], expected, atol=1e-4))

    @pytest.mark.unit
    def test_conditional_is_joint_component(self, mixture: MixtureOfGaussians) -> None:
        z = np.random.default_rng(6).standard_normal((8, 3)) * 2.0
        conditional = mixture.exact_conditional_field()
        assert(np.allclose(conditional.scores(z), mixture.exact_score().scores(z)))
        assert(np.allclose(conditional.score_derivatives(z), mixture.exact_score().score_derivatives(z)))

    @pytest.mark.unit
    def test_covariance_gate(self) -> None:
        assert(MixtureOfGaussians(40, rho_per=0.2).dimension == 40)
        with pytest.raises(GeneratorError):
            MixtureOfGaussians(40, rho_per=0.6)

    @pytest.mark.unit
    @pytest.mark.parametrize("dimension", [3, 4, 5])
    def test_covariance_gate_at_boundary(self, dimension: int) -> None:
        boundary = 1.0 / (2.0 * np.cos(np.pi / (dimension + 1)))
        with pytest.raises(GeneratorError):
            MixtureOfGaussians(dimension, rho_per=boundary)
        with pytest.raises(GeneratorError):
            MixtureOfGaussians(dimension, rho_per=-boundary)
        assert(MixtureOfGaussians(dimension, rho_per=0.99 * boundary).dimension == dimension)

    @pytest.mark.unit
    def test_invalid_weights(self) -> None:
        with pytest.raises(GeneratorError):
            MixtureOfGaussians(2, weights=[0.7, 0.7])
        with pytest.raises(DimensionMismatchError):
            MixtureOfGaussians(2, weights=[1.0])

    @pytest.mark.unit
    def test_json(self, mixture: MixtureOfGaussians) -> None:
        document = mixture.as_dict()
        assert(document['type'] == 'mog')
        assert(document['means'] == [[-2.0, 0.0, 0.0], [2.0, 0.0, 0.0]])
        assert(document['weights'] == [0.5, 0.5])


class TestSGLDGenerator:

    @pytest.mark.unit
    def test_moments(self) -> None:
        generator = SGLDGenerator(GaussianVarianceDifference(2).exact_score(), step=0.05, burn_in=200, thinning=5)
        draws = generator.sample(2000, np.random.default_rng(0))
        assert(draws.shape == (2000, 2))
        assert(np.allclose(draws.mean(axis=0), 0.0, atol=0.1))
        assert(np.allclose(draws.var(axis=0), 1.0, atol=0.15))

    @pytest.mark.unit
    def test_chains(self) -> None:
        generator = SGLDGenerator(GaussianVarianceDifference(3).exact_score(), burn_in=10, thinning=2, chains=4)
        assert(generator.sample(10, np.random.default_rng(0)).shape == (10, 3))
        assert(generator.exact_score().dimension == 3)

    @pytest.mark.parametrize(("options"), [{'step': 0.0}, {'burn_in': -1}, {'thinning': 0}, {'chains': 0}])
    @pytest.mark.unit
    def test_invalid_options(self, options: dict) -> None:
        with pytest.raises(GeneratorError):
            SGLDGenerator(GaussianVarianceDifference(1).exact_score(), **options)


class TestDeterminism:

    @pytest.mark.parametrize(("generator"), [
        GaussianVarianceDifference(3, sigma_per=0.2),
        MixtureOfGaussians(3, rho_per=0.1),
        SGLDGenerator(GaussianVarianceDifference(2).exact_score(), burn_in=5, thinning=2, chains=3),
    ])
    @pytest.mark.unit
    def test_same_stream_same_samples(self, generator) -> None:
        first = generator.sample(25, make_rng(7, 2))
        second = generator.sample(25, make_rng(7, 2))
        other = generator.sample(25, make_rng(7, 3))
        assert(np.array_equal(first, second))
        assert(not np.array_equal(first, other))
