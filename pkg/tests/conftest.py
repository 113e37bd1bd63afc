import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_complex(rng, lo=-2.0, hi=2.0) -> complex:
    return complex(rng.uniform(lo, hi), rng.uniform(lo, hi))
