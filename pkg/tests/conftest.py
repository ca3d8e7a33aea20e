import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from relmetric.relation import Relation

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def relations(draw, n_x=None, max_x=4, max_y=4, min_y=0):
    """Random small relation; ``n_x`` pins the feature count."""
    nx = draw(st.integers(0, max_x)) if n_x is None else n_x
    ny = draw(st.integers(min_y, max_y))
    bits = draw(st.lists(st.booleans(), min_size=nx * ny, max_size=nx * ny))
    return Relation.from_array(np.array(bits, dtype=bool).reshape(nx, ny))


@st.composite
def relation_tuples(draw, k=2, max_x=4, max_y=4, min_y=0, same_y=False):
    nx = draw(st.integers(1, max_x))
    if same_y:
        ny = draw(st.integers(min_y, max_y))
        return tuple(draw(relations(n_x=nx, max_y=ny, min_y=ny)) for _ in range(k))
    return tuple(draw(relations(n_x=nx, max_y=max_y, min_y=min_y)) for _ in range(k))


def random_relation(rng: np.random.Generator, n_x: int, n_y: int, density=0.5) -> Relation:
    return Relation.from_array(rng.random((n_x, n_y)) < density)


# Acceptance results, printed once at the end of the session.
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
