import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from models.graph import Graph  # noqa: E402
from services.graph_loader import GraphLoaderService  # noqa: E402
from services.marginal_loader import MarginalLoaderService  # noqa: E402


@pytest.fixture
def p3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def c3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


@pytest.fixture
def graph_loader() -> GraphLoaderService:
    return GraphLoaderService()


@pytest.fixture
def marginal_loader() -> MarginalLoaderService:
    return MarginalLoaderService()

