"""Signal, joint, tree and subtree-expectation total variation, and the tree coupling."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers.generators.instance_generator import InstanceGenerator
from helpers.processors.centrality_calculator import CentralityCalculator
from helpers.processors.subtree_enumerator import SubtreeEnumerator
from helpers.processors.total_variation import TotalVariation
from helpers.processors.tree_coupling import TreeCouplingBuilder
from models.centrality import EdgeCentrality, SubtreeDistribution, SubtreeFamily
from models.graph import Graph
from models.joint_distribution import JointDistribution
from models.marginal import GaussianMarginal, MarginalKind, MarginalSet, dirac_marginals
from strategies import connected_graphs, discrete_marginal_sets, discrete_set, trees
from utils.errors import DistributionValidationError, GraphValidationError, MarginalValidationError

TV = TotalVariation


def uniform_over_subtrees(graph: Graph) -> SubtreeDistribution:
    subtrees = SubtreeEnumerator.enumerate_subtrees(graph)
    return SubtreeDistribution(atoms=tuple((s, 1 / len(subtrees)) for s in subtrees))


class TestSignalAndJoint:
    def test_signal(self, p3, c3, k4):
        assert TV.tv_signal(p3, [0, 1, 3]) == 5
        assert TV.tv_signal(c3, [0, 1, 2]) == 6
        assert TV.tv_signal(k4, [2.5] * 4) == 0

    def test_signal_length(self, p3):
        with pytest.raises(ValueError):
            TV.tv_signal(p3, [0, 1])

    def test_point_mass_joint(self, p3):
        joint = JointDistribution((0, 1, 2), (2, 2, 2), {(0, 1, 0): 1.0})
        assert TV.tv_joint_discrete(p3, joint, TV.discrete_metric_tables(p3, 2)) == 2

    def test_constant_tuples_cost_nothing(self, p3):
        joint = JointDistribution((0, 1, 2), (2, 2, 2), {(0, 0, 0): 0.5, (1, 1, 1): 0.5})
        assert TV.tv_joint_discrete(p3, joint, TV.discrete_metric_tables(p3, 2)) == 0

    def test_joint_validation(self, p3):
        with pytest.raises(DistributionValidationError):
            JointDistribution((0, 1, 2), (2, 2, 2), {(0, 0, 0): 0.5})
        with pytest.raises(DistributionValidationError):
            JointDistribution((0, 1), (2, 2), {(0, 2): 1.0})
        joint = JointDistribution((0, 1), (2, 2), {(0, 1): 1.0})
        with pytest.raises(DistributionValidationError):
            TV.tv_joint_discrete(p3, joint, TV.discrete_metric_tables(p3, 2))

    def test_joint_marginals(self):
        joint = JointDistribution((0, 1), (2, 2), {(0, 1): Fraction(1, 4), (1, 1): Fraction(3, 4)})
        assert joint.marginal(0) == [Fraction(1, 4), Fraction(3, 4)]
        assert joint.pair_marginal(0, 1) == [[0, Fraction(1, 4)], [0, Fraction(3, 4)]]


class TestTreeMarginals:
    def test_gaussian_path(self, p3):
        ns = MarginalSet(MarginalKind.GAUSSIAN,
                         (GaussianMarginal(0, 1), GaussianMarginal(1, 1), GaussianMarginal(3, 2)))
        assert TV.tv_tree_marginals(p3, ns) == 6

    def test_single_edge_discrete(self):
        edge = Graph.from_edges(2, [(0, 1)])
        ns = discrete_set([(1, 0), (0, 1)])
        assert TV.tv_tree_marginals(edge, ns) == 1
        assert TV.tv_tree_marginals(edge, ns, exact=True) == Fraction(1)

    def test_requires_tree(self, c3):
        with pytest.raises(GraphValidationError):
            TV.tv_tree_marginals(c3, dirac_marginals([0, 0, 0]))

    def test_exact_needs_discrete(self, p3):
        with pytest.raises(MarginalValidationError):
            TV.tv_tree_marginals(p3, dirac_marginals([0, 1, 2]), exact=True)


class TestSubtreeExpectation:
    def test_uniform_path_subtrees_with_dirac(self, p3):
        eta = uniform_over_subtrees(p3)
        ns = dirac_marginals([0, 1, 3])
        assert TV.tv_eta_direct(p3, eta, ns) == pytest.approx(10 / 3, abs=1e-12)
        centrality = CentralityCalculator.centrality_from_eta(p3, eta)
        assert TV.tv_eta(p3, centrality, ns) == pytest.approx(10 / 3, abs=1e-12)

    def test_constant_centrality_with_dirac(self, p3):
        ns = dirac_marginals([0, 1, 3])
        assert TV.tv_eta(p3, CentralityCalculator.constant_centrality(p3), ns) == 2.5

    def test_identical_marginals(self, k4):
        ns = dirac_marginals([1.0] * 4)
        assert TV.tv_eta(k4, CentralityCalculator.spanning_tree_centrality(k4), ns) == 0

    def test_point_mass_on_spanning_tree(self, k4):
        ns = dirac_marginals([0, 1, 3, 7])
        eta = SubtreeDistribution(atoms=(((0, 1, 2), 1.0),))
        tree = Graph.from_edges(4, [k4.edges[e] for e in (0, 1, 2)])
        assert TV.tv_eta_direct(k4, eta, ns) == TV.tv_tree_marginals(tree, ns)

    def test_triangle_spanning_trees_discrete(self, c3):
        eta = CentralityCalculator.eta_for_family(c3, SubtreeFamily.SPANNING_TREE_UNIFORM)
        ns = discrete_set([(1, 0), (0, 1), (1, 0)])
        assert TV.tv_eta_direct(c3, eta, ns) == pytest.approx(4 / 3, abs=1e-12)
        assert TV.tv_eta_direct(c3, eta, ns, use_lp_oracle=True) == pytest.approx(4 / 3, abs=1e-12)

    def test_lp_variant_needs_discrete(self, p3):
        with pytest.raises(MarginalValidationError):
            TV.tv_eta_direct(p3, uniform_over_subtrees(p3), dirac_marginals([0, 1, 2]), use_lp_oracle=True)

    def test_decomposition_sums_to_total(self, c4):
        ns = dirac_marginals([0, 2, 3, 7])
        centrality = CentralityCalculator.betweenness_centrality(c4)
        rows = TV.tv_decomposition(c4, centrality, ns)
        assert [row.edge for row in rows] == list(c4.edges)
        assert sum(row.contribution for row in rows) == pytest.approx(TV.tv_eta(c4, centrality, ns), abs=1e-12)

    def test_centrality_length_mismatch(self, c3):
        with pytest.raises(ValueError):
            TV.tv_eta(c3, EdgeCentrality((0.5, 0.5)), dirac_marginals([0, 1, 2]))

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(min_nodes=2, max_nodes=5), st.integers(0, 2**32 - 1))
    def test_inner_product_identity(self, graph, seed):
        generator = InstanceGenerator(seed)
        eta = generator.random_eta(graph)
        ns = generator.discrete_marginals(graph.node_count, 3)
        assert TV.identity_gap(graph, eta, ns) <= 1e-9

    @settings(max_examples=25, deadline=None)
    @given(connected_graphs(min_nodes=2, max_nodes=6), st.integers(0, 2**32 - 1))
    def test_identity_with_gaussians(self, graph, seed):
        generator = InstanceGenerator(seed)
        eta = generator.random_eta(graph)
        ns = generator.gaussian_marginals(graph.node_count)
        assert TV.identity_gap(graph, eta, ns) <= 1e-9

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_nodes=6), st.lists(st.floats(-10, 10), min_size=6, max_size=6))
    def test_dirac_reduction(self, graph, signal):
        x = signal[:graph.node_count]
        ns = dirac_marginals(x)
        value = TV.tv_eta(graph, CentralityCalculator.constant_centrality(graph), ns) * graph.edge_count
        assert value == pytest.approx(TV.tv_signal(graph, x), rel=1e-12, abs=1e-9)

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(min_nodes=3, max_nodes=5), st.integers(0, 2**32 - 1))
    def test_refining_to_supertree_never_decreases(self, graph, seed):
        generator = InstanceGenerator(seed)
        ns = generator.discrete_marginals(graph.node_count, 2)
        subtrees = SubtreeEnumerator.enumerate_subtrees(graph)
        small = subtrees[int(generator.rng.integers(0, len(subtrees)))]
        supertrees = [s for s in subtrees if set(small) < set(s)]
        if not supertrees:
            return
        big = supertrees[0]
        before = SubtreeDistribution(atoms=((small, 0.5), (subtrees[0], 0.5))) if small != subtrees[0] \
            else SubtreeDistribution(atoms=((small, 1.0),))
        moved = tuple((big if s == small else s, p) for s, p in before.atoms)
        after = SubtreeDistribution(atoms=moved)
        assert TV.tv_eta_direct(graph, after, ns) >= TV.tv_eta_direct(graph, before, ns) - 1e-12


class TestTreeCoupling:
    def test_forced_single_edge(self):
        edge = Graph.from_edges(2, [(0, 1)])
        joint = TreeCouplingBuilder.tree_coupling(edge, 0, discrete_set([(1, 0), (0, 1)]))
        assert joint.masses == {(0, 1): 1}

    def test_uniform_chain_is_comonotone(self, p3):
        ns = discrete_set([(0.5, 0.5)] * 3)
        joint = TreeCouplingBuilder.tree_coupling(p3, 0, ns)
        assert joint.masses == {(0, 0, 0): Fraction(1, 2), (1, 1, 1): Fraction(1, 2)}
        assert TV.tv_joint_discrete(p3, joint, TV.discrete_metric_tables(p3, 2)) == 0

    def test_attains_edge_sum(self, p3):
        ns = discrete_set([(1, 0), (0.5, 0.5), (0, 1)])
        for root in range(3):
            joint = TreeCouplingBuilder.tree_coupling(p3, root, ns)
            assert TV.tv_joint_discrete(p3, joint, TV.discrete_metric_tables(p3, 2)) == pytest.approx(1.0)

    def test_rejects_non_tree_and_non_discrete(self, c3, p3):
        with pytest.raises(GraphValidationError):
            TreeCouplingBuilder.tree_coupling(c3, 0, discrete_set([(1, 0)] * 3))
        with pytest.raises(MarginalValidationError):
            TreeCouplingBuilder.tree_coupling(p3, 0, dirac_marginals([0, 1, 2]))

    @pytest.mark.parametrize("root", [3, 5, -1])
    def test_root_outside_the_tree(self, p3, root):
        with pytest.raises(ValueError, match="not a node"):
            TreeCouplingBuilder.tree_coupling(p3, root, discrete_set([(1, 0)] * 3))

    @settings(max_examples=40, deadline=None)
    @given(trees(max_nodes=5).flatmap(lambda t: st.tuples(
        st.just(t), discrete_marginal_sets(t.node_count), st.integers(0, t.node_count - 1))))
    def test_coupling_marginals_and_value(self, case):
        tree, ns, root = case
        joint = TreeCouplingBuilder.tree_coupling(tree, root, ns)
        for node in range(tree.node_count):
            assert all(abs(float(got) - want) <= 1e-12
                       for got, want in zip(joint.marginal(node), ns[node].weights))
        attained = TV.tv_joint_discrete(tree, joint, TV.discrete_metric_tables(tree, ns.size))
        assert attained == pytest.approx(TV.tv_tree_marginals(tree, ns), abs=1e-9)
