from fractions import Fraction

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_rational(rng, lo=-12, hi=12, maxden=12) -> Fraction:
    return Fraction(int(rng.integers(lo, hi + 1)), int(rng.integers(1, maxden + 1)))
