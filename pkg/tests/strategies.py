"""Hypothesis strategies and networkx bridges shared by the test modules."""
import networkx as nx
from hypothesis import strategies as st

from models.graph import Graph
from models.marginal import DiscreteMarginal, MarginalKind, MarginalSet


@st.composite
def connected_graphs(draw, min_nodes: int = 2, max_nodes: int = 6) -> Graph:
    """Random spanning tree (random attachment) plus a random set of extra edges."""
    n = draw(st.integers(min_nodes, max_nodes))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
    others = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    if others:
        extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others)))
        edges.update(extra)
    return Graph.from_edges(n, edges)


@st.composite
def trees(draw, min_nodes: int = 2, max_nodes: int = 5) -> Graph:
    n = draw(st.integers(min_nodes, max_nodes))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


@st.composite
def pmfs(draw, size: int):
    raw = draw(st.lists(st.integers(0, 20), min_size=size, max_size=size).filter(lambda xs: sum(xs) > 0))
    total = sum(raw)
    return tuple(x / total for x in raw)


def discrete_set(rows, labels=None) -> MarginalSet:
    size = len(rows[0])
    labels = labels or tuple(f"s{k + 1}" for k in range(size))
    return MarginalSet(MarginalKind.DISCRETE, tuple(DiscreteMarginal(tuple(r)) for r in rows), support=labels)


@st.composite
def discrete_marginal_sets(draw, node_count: int, min_support: int = 2, max_support: int = 3) -> MarginalSet:
    size = draw(st.integers(min_support, max_support))
    return discrete_set([draw(pmfs(size)) for _ in range(node_count)])


def to_nx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.node_count))
    g.add_edges_from(graph.edges)
    return g


def bridge_edges(graph: Graph) -> set:
    """Edge indices of the bridges, as networkx finds them."""
    return {graph.index_of(i, j) for i, j in nx.bridges(to_nx(graph))}
