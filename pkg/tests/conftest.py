import pytest

from graph_core import Graph
from tests.named_graphs import BOWTIE, DUMBBELL, FUSED5, THETA7, TWO_TRIANGLES


@pytest.fixture
def theta7() -> Graph:
    return THETA7


@pytest.fixture
def dumbbell() -> Graph:
    return DUMBBELL


@pytest.fixture
def bowtie() -> Graph:
    return BOWTIE


@pytest.fixture
def fused5() -> Graph:
    return FUSED5


@pytest.fixture
def two_triangles() -> Graph:
    return TWO_TRIANGLES
