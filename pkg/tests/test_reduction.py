import random

import networkx as nx
from django.test import TestCase
from kplex.graph import Graph, is_kplex
from kplex.oracle import brute_max_kplex
from kplex.reduction import ReductionState, Thresholds, naive_ctcp

from tests import graphs


def alive(state):
    return frozenset(state.vertices()), frozenset(state.alive_edges())


def without(g, deleted):
    """``g`` with every edge touching ``deleted`` dropped."""
    return Graph.from_edges(
        [(u, v) for u, v in g.edges() if u not in deleted and v not in deleted], n=g.n)


class TestThresholds(TestCase):
    def test_from_lower_bound(self):
        self.assertEqual(Thresholds(3, 1), Thresholds.from_lower_bound(5, 2))

    def test_it_raises_error_if_tau_e_exceeds_tau_v(self):
        with self.assertRaises(ValueError):
            Thresholds(1, 2)


class TestReductionState(TestCase):
    def test_edge_ids_follow_canonical_edge_order(self):
        g = graphs.cycle(4)
        state = ReductionState(g)
        self.assertEqual(list(g.edges()), state.endpoints_of)
        self.assertEqual(state.edge_id(0, 3), state.edge_id(3, 0))
        self.assertIsNone(state.edge_id(0, 2))

    def test_min_degree_vertex_prefers_smallest_id(self):
        state = ReductionState(graphs.path(4))
        self.assertEqual(0, state.min_degree_vertex())

    def test_min_degree_vertex_follows_removals(self):
        state = ReductionState(graphs.path(4))
        state.remove_vertices([0], -1)
        self.assertEqual(1, state.min_degree_vertex())
        state.remove_vertices([1], -1)
        self.assertEqual(2, state.min_degree_vertex())

    def test_min_degree_vertex_matches_a_linear_scan(self):
        rng = random.Random(5)
        for g in graphs.corpus(30, n_range=(10, 30)):
            state = ReductionState(g)
            while state.vertex_count():
                alive = list(state.vertices())
                lowest = min(state.degree(v) for v in alive)
                expected = min(v for v in alive if state.degree(v) == lowest)
                self.assertEqual(expected, state.min_degree_vertex())
                state.remove_vertices([rng.choice(alive)], -1)
            self.assertIsNone(state.min_degree_vertex())

    def test_min_degree_vertex_is_none_when_everything_is_removed(self):
        state = ReductionState(graphs.path(3))
        state.remove_vertices([0, 1, 2], -1)
        self.assertIsNone(state.min_degree_vertex())
        self.assertEqual(0, state.vertex_count())
        self.assertEqual(0, state.edge_count())

    def test_remove_edge_cascades_to_the_core(self):
        state = ReductionState(graphs.path(4))
        removed = state.remove_edge(state.edge_id(1, 2), 0)
        self.assertEqual(state.edge_id(1, 2), removed[0])
        self.assertEqual({0, 1, 2, 3}, set(state.vertices()))
        state.core_prune(1)
        self.assertEqual(set(), set(state.vertices()))

    def test_remove_edge_raises_error_for_dead_edges(self):
        state = ReductionState(graphs.path(3))
        eid = state.edge_id(0, 1)
        state.remove_edge(eid, -1)
        with self.assertRaises(ValueError):
            state.remove_edge(eid, -1)

    def test_neighbors_skip_removed_edges(self):
        state = ReductionState(graphs.complete(4))
        state.remove_edge(state.edge_id(0, 1), -1)
        self.assertEqual([2, 3], state.neighbors(0))
        self.assertEqual(2, state.degree(0))

    def test_core_prune_equals_networkx_k_core(self):
        for g in graphs.corpus(50):
            state = ReductionState(g)
            state.core_prune(2)
            expected = nx.k_core(graphs.to_networkx(g), 3)
            self.assertEqual(set(expected.nodes()), set(state.vertices()))


class TestCfCtcp(TestCase):
    def test_path_is_removed_entirely(self):
        state = ReductionState(graphs.path(4)).cf_ctcp([], 1, -1, True)
        self.assertEqual((frozenset(), frozenset()), alive(state))

    def test_complete_graph_survives_its_own_thresholds(self):
        g = graphs.complete(5)
        state = ReductionState(g).cf_ctcp([], 3, 2, True)
        self.assertEqual(5, state.vertex_count())
        self.assertEqual(10, state.edge_count())

    def test_complete_graph_is_removed_when_triangles_are_short(self):
        state = ReductionState(graphs.complete(5)).cf_ctcp([], 3, 3, True)
        self.assertEqual(0, state.vertex_count())

    def test_triangle_with_pendant(self):
        g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3)])
        state = ReductionState(g).cf_ctcp([], 1, 0, True)
        self.assertEqual(({0, 1, 2}, {(0, 1), (0, 2), (1, 2)}),
                         tuple(set(x) for x in alive(state)))

    def test_bridge_between_cliques_is_removed(self):
        g = graphs.two_k4_with_bridge()
        state = ReductionState(g).cf_ctcp([], 2, 0, True)
        self.assertEqual(8, state.vertex_count())
        self.assertEqual(12, state.edge_count())
        self.assertIsNotNone(state.edge_id(3, 4))
        self.assertFalse(state.alive_edge[state.edge_id(3, 4)])

    def test_it_deletes_requested_vertices(self):
        state = ReductionState(graphs.complete(5)).cf_ctcp([0], 2, 1, False)
        self.assertEqual({1, 2, 3, 4}, set(state.vertices()))
        self.assertEqual(6, state.edge_count())

    def test_negative_thresholds_remove_nothing(self):
        g = graphs.gnp(12, 0.3, seed=4)
        state = ReductionState(g).cf_ctcp([], -1, -3, True)
        self.assertEqual(g.n, state.vertex_count())
        self.assertEqual(g.m, state.edge_count())

    def test_triangles_are_counted_once(self):
        g = graphs.gnp(15, 0.5, seed=2)
        state = ReductionState(g)
        state.cf_ctcp([], -1, -3, True)
        self.assertEqual(g.m, state.stats.triangle_counts)
        state.cf_ctcp([], 3, 1, True)
        state.cf_ctcp([0], 3, 1, False)
        self.assertEqual(g.m, state.stats.triangle_counts)
        self.assertEqual(1, state.stats.rescans)
        self.assertEqual(3, state.stats.calls)

    def test_stats_as_dict(self):
        state = ReductionState(graphs.path(4)).cf_ctcp([], 1, -1, True)
        values = state.stats.as_dict()
        self.assertEqual(4, values['ctcp_vertices_removed'])
        self.assertEqual(3, values['ctcp_edges_removed'])
        self.assertEqual(1, values['ctcp_calls'])

    def test_it_equals_the_k_core_when_triangles_are_ignored(self):
        for g in graphs.corpus(50):
            state = ReductionState(g).cf_ctcp([], 3, -1, True)
            expected = nx.k_core(graphs.to_networkx(g), 4)
            self.assertEqual(set(expected.nodes()), set(state.vertices()))
            self.assertEqual(expected.number_of_edges(), state.edge_count())

    def test_it_equals_the_naive_fixpoint(self):
        rng = random.Random(11)
        for g in graphs.corpus(200, n_range=(6, 24)):
            k = rng.choice([1, 2, 3, 4])
            lb = rng.randint(0, 10)
            t = Thresholds.from_lower_bound(lb, k)
            state = ReductionState(g).cf_ctcp([], t.tau_v, t.tau_e, True)
            self.assertEqual(naive_ctcp(g, t.tau_v, t.tau_e), alive(state),
                             'lb={} k={} on {}'.format(lb, k, g))

    def test_repeated_calls_equal_the_naive_fixpoint(self):
        rng = random.Random(13)
        for g in graphs.corpus(100, n_range=(8, 24)):
            k = rng.choice([2, 3])
            lb = rng.randint(0, 4)
            state = ReductionState(g)
            deleted = set()
            t = Thresholds.from_lower_bound(lb, k)
            state.cf_ctcp([], t.tau_v, t.tau_e, True)
            for _ in range(4):
                raised = rng.random() < 0.5
                if raised:
                    lb += rng.randint(1, 2)
                    t = Thresholds.from_lower_bound(lb, k)
                q_v = []
                if rng.random() < 0.7 and state.vertex_count():
                    q_v = [state.min_degree_vertex()]
                deleted.update(q_v)
                state.cf_ctcp(q_v, t.tau_v, t.tau_e, raised)

                vertices, edges = naive_ctcp(without(g, deleted), t.tau_v, t.tau_e)
                self.assertEqual(vertices - deleted, frozenset(state.vertices()))
                self.assertEqual(edges, frozenset(state.alive_edges()))

    def test_large_kplexes_survive(self):
        for g in graphs.corpus(40, n_range=(8, 14)):
            for k in (2, 3):
                result = brute_max_kplex(g, k)
                lb = result.size - 1
                t = Thresholds.from_lower_bound(lb, k)
                state = ReductionState(g).cf_ctcp([], t.tau_v, t.tau_e, True)
                h = sorted(result.witness)
                self.assertTrue(is_kplex(g, sum(1 << v for v in h), k))
                for v in h:
                    self.assertTrue(state.has_vertex(v))
                for u, v in g.edges():
                    if u in result.witness and v in result.witness:
                        self.assertTrue(state.alive_edge[state.edge_id(u, v)])


class TestNaiveCtcp(TestCase):
    def test_it_is_confluent(self):
        for g in graphs.corpus(50):
            for tau_v, tau_e in ((2, 0), (3, 1), (4, 2)):
                expected = naive_ctcp(g, tau_v, tau_e)
                self.assertEqual(expected, naive_ctcp(g, tau_v, tau_e, random.Random(1)))
                self.assertEqual(expected, naive_ctcp(g, tau_v, tau_e, random.Random(2)))

    def test_complete_graph(self):
        vertices, edges = naive_ctcp(graphs.complete(4), 2, 1)
        self.assertEqual(frozenset(range(4)), vertices)
        self.assertEqual(6, len(edges))
