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
from steingof.generators import RealSubsample


class TestRealSubsample:

    @pytest.fixture
    def csv_file(self, tmp_path: pathlib.Path) -> pathlib.Path:
        path = tmp_path / "data.csv"
        path.write_text("a, b\n1.0, 2.0\n3.0, 4.0\n5.0, 6.0\n")
        return path

    @pytest.mark.unit
    def test_from_csv(self, csv_file: pathlib.Path) -> None:
        generator = RealSubsample.from_csv(csv_file)
        assert(generator.dimension == 2)
        assert(np.array_equal(generator.dataset, [[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]]))
        assert(generator.as_dict() == {'type': 'real', 'dimension': 2, 'rows': 3, 'path': str(csv_file)})

    @pytest.mark.unit
    def test_samples_are_dataset_rows(self, csv_file: pathlib.Path) -> None:
        generator = RealSubsample.from_csv(csv_file)
        draws = generator.sample(50, np.random.default_rng(0))
        assert(draws.shape == (50, 2))
        rows = {tuple(row) for row in generator.dataset}
        assert(all(tuple(row) in rows for row in draws))

    @pytest.mark.unit
    def test_dataset_is_copied(self) -> None:
        data = np.arange(6.0).reshape(3, 2)
        generator = RealSubsample(data)
        assert(not generator.dataset.flags.writeable)
        data[0, 0] = 10.0
        assert(data.flags.writeable)
        assert(generator.dataset[0, 0] == 0.0)

    @pytest.mark.parametrize(("content", "line"), [
        ("a,b\n1,2\n3,x\n", "3"),
        ("a,b\n1,2\n3,4\n,6\n", "4"),
    ])
    @pytest.mark.unit
    def test_malformed_rows(self, tmp_path: pathlib.Path, content: str, line: str) -> None:
        path = tmp_path / "bad.csv"
        path.write_text(content)
        with pytest.raises(GeneratorError, match=f"line\\(s\\) {line}"):
            RealSubsample.from_csv(path)

    @pytest.mark.parametrize(("content"), ["", "a,b\n"])
    @pytest.mark.unit
    def test_empty_file(self, tmp_path: pathlib.Path, content: str) -> None:
        path = tmp_path / "empty.csv"
        path.write_text(content)
        with pytest.raises(GeneratorError):
            RealSubsample.from_csv(path)

    @pytest.mark.unit
    def test_non_finite_dataset(self) -> None:
        with pytest.raises(GeneratorError):
            RealSubsample([[1.0, np.inf]])
