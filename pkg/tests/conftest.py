import pytest

from chordlab import kernels
from chordlab.generate import enumerate_cubic


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    kernels.warmup()


@pytest.fixture(scope="session")
def corpus():
    """Connected cubic graphs per order, cached for the whole run."""
    return {n: enumerate_cubic(n) for n in (4, 6, 8, 10)}
