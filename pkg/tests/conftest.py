import numpy as np
import pytest

from cvectors.dynkin import DynkinType


def dynkin_b(name: str) -> np.ndarray:
    return DynkinType.parse(name).exchange_matrix()


def random_skew(rng, n: int, bound: int = 2) -> np.ndarray:
    upper = np.triu(rng.integers(-bound, bound + 1, size=(n, n)), 1)
    return (upper - upper.T).astype(np.int64)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
