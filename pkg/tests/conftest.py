import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from twohilb.core import OneCell, TwoCell, from_function

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


sizes = st.integers(1, 3)
dims = st.integers(0, 3)


@st.composite
def one_cells(draw, source=None, target=None, max_dim=3):
    n = draw(sizes) if source is None else source
    m = draw(sizes) if target is None else target
    rows = draw(st.lists(st.lists(st.integers(0, max_dim), min_size=n, max_size=n),
                         min_size=m, max_size=m))
    return OneCell(n, m, rows)


@st.composite
def two_cells(draw, f=None, g=None):
    f = draw(one_cells()) if f is None else f
    g = draw(one_cells(f.source, f.target)) if g is None else g
    seed = draw(st.integers(0, 2**32 - 1))
    r = np.random.default_rng(seed)
    return from_function(f, g, lambda i, j: r.normal(size=(g.dims[i][j], f.dims[i][j]))
                         + 1j * r.normal(size=(g.dims[i][j], f.dims[i][j])))


def assert_cells_close(a: TwoCell, b: TwoCell, tol=1e-9):
    assert a.source == b.source and a.target == b.target
    for ra, rb in zip(a.entries, b.entries):
        for x, y in zip(ra, rb):
            np.testing.assert_allclose(x, y, atol=tol, rtol=0)
