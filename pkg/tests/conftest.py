import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

coords = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
norms = st.sampled_from([1.0, 1.5, 2.0, 3.0, math.inf])


def vectors(dim):
    return hnp.arrays(np.float64, dim, elements=coords)


@st.composite
def vector_triples(draw, min_dim=1, max_dim=8):
    dim = draw(st.integers(min_dim, max_dim))
    return tuple(draw(vectors(dim)) for _ in range(3))


@st.composite
def nonzero_vectors(draw, min_dim=1, max_dim=6):
    dim = draw(st.integers(min_dim, max_dim))
    v = draw(vectors(dim))
    if not np.any(np.abs(v) > 1e-3):
        v = v.copy()
        v[draw(st.integers(0, dim - 1))] = draw(st.sampled_from([-1.0, 1.0])) * draw(
            st.floats(1e-3, 10)
        )
    return v


@pytest.fixture
def fixtures_dir():
    return FIXTURES
