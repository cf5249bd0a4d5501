#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import numpy
import pytest


@pytest.fixture
def rng() -> numpy.random.Generator:
    """
    A generator with a fixed seed so that every randomized test is reproducible.
    """
    return numpy.random.default_rng(20260101)
