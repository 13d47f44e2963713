import itertools

import pytest

from hkannuli.classify import AnnulusType
from hkannuli.jsjgraph import (Edge, JsjGraph, NodeKind, SlopePair, graph_k,
                               graph_m, parse_graph, realizability_warnings,
                               slope_rules, trivial_graph, validate,
                               validate_labels, validate_slopes,
                               validate_structure)


def hub_graph(*edges: Edge, extra_nodes=()) -> JsjGraph:
    nodes = [("x", NodeKind.IFIBERED)]
    nodes += [(nid, NodeKind.SEIFERT) for nid in extra_nodes]
    return JsjGraph(tuple(nodes), tuple(edges))


def rules_of(violations):
    return {v.rule for v in violations}


class TestSlopePair:
    def test_recip_is_unordered(self):
        assert SlopePair.recip(2, 3) == SlopePair.recip(3, 2)
        assert hash(SlopePair.recip(2, 3)) == hash(SlopePair.recip(3, 2))
        assert SlopePair.recip(2, 3) != SlopePair.recip(2, 5)

    def test_prod_normalization(self):
        assert SlopePair.prod(0, 5) == SlopePair.prod(0, 1)
        assert SlopePair.prod(0, 1).is_trivial
        assert not SlopePair.prod(3, 2).is_trivial

    def test_invalid(self):
        with pytest.raises(ValueError):
            SlopePair.recip(0, 3)
        with pytest.raises(ValueError):
            SlopePair.prod(1, 2)
        with pytest.raises(ValueError):
            SlopePair("prod", 3, -2)


class TestStructure:
    def test_trivial_graph_valid(self):
        assert validate_structure(trivial_graph()) == []

    def test_named_graphs_clean(self):
        for graph in (trivial_graph(), graph_k(), graph_m()):
            assert validate(graph) == []

    def test_two_central_nodes(self):
        graph = JsjGraph((("x", NodeKind.IFIBERED), ("y", NodeKind.SIMPLE)))
        assert "central-piece-law" in rules_of(validate_structure(graph))

    def test_edge_missing_hub(self):
        graph = JsjGraph(
            (("x", NodeKind.IFIBERED), ("s", NodeKind.SEIFERT), ("t", NodeKind.SEIFERT)),
            (Edge("a", "s", "t"),))
        assert "central-piece-law" in rules_of(validate_structure(graph))

    def test_seifert_degree_bound(self):
        edges = tuple(Edge(f"e{i}", "x", "s") for i in range(4))
        graph = hub_graph(*edges, extra_nodes=("s",))
        rules = rules_of(validate_structure(graph))
        assert "seifert-frontier-law" in rules
        assert "three-annulus-law" in rules

    def test_loop_counts_twice_for_degree(self):
        graph = JsjGraph(
            (("x", NodeKind.IFIBERED), ("s", NodeKind.SEIFERT)),
            (Edge("a", "s", "s"), Edge("b", "x", "s")))
        # the loop at s is not adjacent to the hub and s has degree 3
        rules = rules_of(validate_structure(graph))
        assert "central-piece-law" in rules
        assert "seifert-frontier-law" not in rules

    def test_unknown_node_reference(self):
        graph = JsjGraph((("x", NodeKind.SIMPLE),), (Edge("a", "x", "ghost"),))
        assert rules_of(validate_structure(graph)) == {"well-formed-graph"}

    def test_removing_edges_is_monotone(self):
        # dropping any edge never introduces a new structural violation
        base_edges = [Edge("a", "x", "x"), Edge("b", "x", "s"), Edge("c", "x", "s"),
                      Edge("d", "x", "t")]
        graph = hub_graph(*base_edges, extra_nodes=("s", "t"))
        before = rules_of(validate_structure(graph))
        for keep in itertools.combinations(base_edges, 3):
            after = rules_of(validate_structure(hub_graph(*keep, extra_nodes=("s", "t"))))
            assert after <= before


class TestLabels:
    def test_loop_cannot_be_twoone_or_threethree_ii(self):
        for label in (AnnulusType.T2_1, AnnulusType.T3_3ii):
            graph = hub_graph(Edge("a", "x", "x", label=label))
            assert "loop-edge-law" in rules_of(validate_labels(graph))

    def test_bigon_edges_are_threethree_i(self):
        graph = hub_graph(Edge("a", "x", "s", label=AnnulusType.T3_2i),
                          Edge("b", "x", "s", label=AnnulusType.T3_3i),
                          extra_nodes=("s",))
        violations = validate_labels(graph)
        assert rules_of(violations) == {"bigon-threethree-law"}
        assert violations[0].subject == "edge a"

    def test_fourone_never_on_an_edge(self):
        graph = hub_graph(Edge("a", "x", "s", label=AnnulusType.T4_1),
                          extra_nodes=("s",))
        assert "fourone-noncharacteristic-law" in rules_of(validate_labels(graph))

    def test_twoone_unique_shape(self):
        graph = hub_graph(Edge("a", "x", "s", label=AnnulusType.T2_1),
                          Edge("b", "x", "t"), extra_nodes=("s", "t"))
        assert "twoone-shape-law" in rules_of(validate_labels(graph))
        solo = hub_graph(Edge("a", "x", "s", label=AnnulusType.T2_1),
                         extra_nodes=("s",))
        assert validate_labels(solo) == []

    def test_twotwo_not_on_bigon(self):
        graph = hub_graph(Edge("a", "x", "s", label=AnnulusType.T2_2),
                          Edge("b", "x", "s"), extra_nodes=("s",))
        rules = rules_of(validate_labels(graph))
        assert "twotwo-shape-law" in rules

    def test_unlabeled_edges_pass(self):
        graph = hub_graph(Edge("a", "x", "x"), Edge("b", "x", "s"),
                          extra_nodes=("s",))
        assert validate_labels(graph) == []


class TestSlopeRules:
    def test_threethree_ii_requires_trivial_slope(self):
        assert slope_rules(AnnulusType.T3_3ii, SlopePair.prod(0, 1)) == []
        violations = slope_rules(AnnulusType.T3_3ii, SlopePair.prod(3, 2))
        assert rules_of(violations) == {"trivial-slope-law"}

    def test_trivial_slope_with_twotwo_forces_ii(self):
        violations = slope_rules(AnnulusType.T3_3i, SlopePair.prod(0, 1),
                                 coexisting_type22=True)
        assert rules_of(violations) == {"twotwo-coexistence-law"}
        assert slope_rules(AnnulusType.T3_3i, SlopePair.prod(0, 1)) == []

    def test_label_precondition(self):
        with pytest.raises(ValueError):
            slope_rules(AnnulusType.T2_1, SlopePair.prod(0, 1))

    def test_bigon_slopes_must_match(self):
        def bigon(s1, s2):
            return hub_graph(
                Edge("a", "x", "s", label=AnnulusType.T3_3i, slope=s1),
                Edge("b", "x", "s", label=AnnulusType.T3_3i, slope=s2),
                extra_nodes=("s",))

        good = bigon(SlopePair.prod(3, 2), SlopePair.prod(3, 2))
        assert validate_slopes(good) == []
        swapped = bigon(SlopePair.prod(3, 2), SlopePair.prod(2, 3))
        assert "bigon-slope-law" in rules_of(validate_slopes(swapped))
        small = bigon(SlopePair.prod(0, 1), SlopePair.prod(0, 1))
        assert "bigon-slope-law" in rules_of(validate_slopes(small))


class TestTextFormat:
    SAMPLE = """
    # a bigon with slopes plus a loop
    node x ifibered
    node s seifert
    edge a x s label=3-3i slope=prod:3/2
    edge b x s label=3-3i slope=prod:3/2
    edge c x x
    """

    def test_parse(self):
        graph = parse_graph(self.SAMPLE)
        assert len(graph.nodes) == 2 and len(graph.edges) == 3
        assert graph.edges[0].slope == SlopePair.prod(3, 2)
        assert validate(graph) == []
        assert realizability_warnings(graph)

    @pytest.mark.parametrize("line", [
        "node x spinning",
        "edge a x",
        "edge a x y label=9-9",
        "edge a x y slope=prod:3",
        "flurb x y",
    ])
    def test_parse_errors(self, line):
        with pytest.raises(ValueError):
            parse_graph("node x simple\nnode y seifert\n" + line)
