#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

from typing import Optional


class SteinGofError(Exception):
    """Base class of every error raised by the package."""


class DimensionMismatchError(SteinGofError, ValueError):
    """Two inputs that must share a dimension do not.

    :param expected: The dimension required by the first operand.
    :type expected: int
    :param actual: The dimension found in the second operand.
    :type actual: int
    :param what: Short description of the operands.
    :type what: Optional[str]
    """

    def __init__(self, expected: int, actual: int, what: Optional[str] = None) -> None:
        self.expected = expected
        self.actual = actual
        prefix = f"{what}: " if what else ""
        super().__init__(f"{prefix}dimension mismatch ({expected} vs {actual}).")


class KernelError(SteinGofError):
    pass


class ScoreEstimationError(SteinGofError):
    pass


class GeneratorError(SteinGofError):
    pass


class TestConfigError(SteinGofError, ValueError):
    __test__ = False


class StatisticError(SteinGofError):
    """A test statistic evaluated to a non-finite value.

    :param replicate: Index of the offending null replicate, ``None`` for the observed statistic.
    :type replicate: Optional[int]
    """

    def __init__(self, message: str, replicate: Optional[int] = None) -> None:
        self.replicate = replicate
        where = "observed statistic" if replicate is None else f"null replicate {replicate}"
        super().__init__(f"{message} ({where}).")


class ConfigurationError(SteinGofError):
    pass
