import numpy as np
import pytest

from optocorr import ReducedParams
from optocorr.sweep import GRID_RANGES


def draw_params(rng: np.random.Generator) -> ReducedParams:
    return ReducedParams(
        alpha=rng.uniform(*GRID_RANGES["alpha"]),
        beta=rng.uniform(*GRID_RANGES["beta"]),
        r=rng.uniform(*GRID_RANGES["r"]),
        n_th=rng.uniform(*GRID_RANGES["n_th"]),
    )


def seeded_draws(n: int, seed: int) -> list[ReducedParams]:
    rng = np.random.default_rng(seed)
    return [draw_params(rng) for _ in range(n)]


# Corners and edges of the supported parameter box, including the
# degenerate beta = 0 / r = 0 boundaries.
CORNER_PARAMS = [
    ReducedParams(alpha=a, beta=b, r=r, n_th=n)
    for a in (1e-3, 0.05, 1.0)
    for b in (0.0, 1.0, 100.0)
    for r in (0.0, 1.0, 3.0)
    for n in (0.0, 1.0, 100.0)
]


@pytest.fixture(scope="session")
def grid_draws() -> list[ReducedParams]:
    return seeded_draws(60, seed=20240917)
