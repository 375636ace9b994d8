"""
Test suite for Euler circuits, listing trails and cycle decompositions
"""

import pytest
import sys
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / 'src'))

from antimagic_decomposition import (
    Disconnected,
    NoOddVertices,
    OddDegreeVertex,
    Trail,
    TrailDecomposition,
    cycle_decompose_even,
    decompose_odd_regular,
    euler_circuit,
    even_circuit_decomposition,
    listing_trails,
    merge_odd_cycles,
)
from antimagic_graph import (
    circulant_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    make_graph,
    path_graph,
    petersen_graph,
    random_regular_graph,
)


def assert_is_trail(g, trail):
    """Consecutive edges share the listed vertices; no edge repeats"""
    assert len(set(trail.edge_seq)) == len(trail.edge_seq)
    assert len(trail.vertex_seq) == len(trail.edge_seq) + 1
    for i, e in enumerate(trail.edge_seq):
        assert set(g.edges[e]) == {trail.vertex_seq[i], trail.vertex_seq[i + 1]}


def assert_covers(g, edge_lists):
    flat = [e for edges in edge_lists for e in edges]
    assert sorted(flat) == list(range(g.m))


class TestEulerCircuit:
    """Hierholzer with lowest-numbered unused edge first"""

    def test_triangle(self):
        g = cycle_graph(3)
        c = euler_circuit(g)
        assert c.edge_seq == (0, 1, 2)
        assert c.vertex_seq == (0, 1, 2, 0)

    def test_k5_covers_all_edges(self):
        g = complete_graph(5)
        c = euler_circuit(g)
        assert_is_trail(g, c)
        assert c.is_closed
        assert_covers(g, [c.edge_seq])

    def test_start_vertex(self):
        c = euler_circuit(cycle_graph(5), start=2)
        assert c.vertex_seq[0] == c.vertex_seq[-1] == 2

    def test_odd_degree_rejected(self):
        with pytest.raises(OddDegreeVertex):
            euler_circuit(complete_graph(4))

    def test_disconnected_rejected(self):
        with pytest.raises(Disconnected):
            euler_circuit(disjoint_union([cycle_graph(3), cycle_graph(3)]))

    def test_isolated_vertices_ignored(self):
        g = make_graph(5, [(1, 2), (2, 3), (3, 1)])
        c = euler_circuit(g)
        assert c.vertex_seq[0] == 1
        assert len(c) == 3

    def test_empty_graph(self):
        assert len(euler_circuit(make_graph(3, []))) == 0

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=5, max_value=16), st.integers(min_value=0, max_value=500))
    def test_random_four_regular(self, n, seed):
        g = random_regular_graph(n, 4, seed=seed)
        if not g.is_connected():
            return
        c = euler_circuit(g)
        assert_is_trail(g, c)
        assert_covers(g, [c.edge_seq])


class TestListingTrails:
    """h trails for 2h odd vertices"""

    def test_k4_two_trails(self):
        g = complete_graph(4)
        td = listing_trails(g)
        assert len(td.trails) == 2
        for t in td.trails:
            assert_is_trail(g, t)
        assert_covers(g, [t.edge_seq for t in td.trails])

    def test_trail_count_and_order(self):
        for g in (complete_graph(6), petersen_graph(), circulant_graph(8, [1, 4])):
            td = listing_trails(g)
            odd = sum(1 for d in g.degree_sequence() if d % 2)
            assert len(td.trails) == odd // 2
            lengths = [len(t) for t in td.trails]
            assert lengths == sorted(lengths, reverse=True)
            assert td.concat == tuple(e for t in td.trails for e in t.edge_seq)
            assert td.boundary_positions[0] == 0
            assert td.boundary_positions[-1] == g.m

    def test_trail_endpoints_are_odd_vertices(self):
        g = petersen_graph()
        for t in listing_trails(g).trails:
            assert g.degree(t.vertex_seq[0]) % 2 == 1
            assert g.degree(t.vertex_seq[-1]) % 2 == 1

    def test_path_is_one_trail(self):
        g = path_graph(5)
        td = listing_trails(g)
        assert len(td.trails) == 1
        assert sorted(td.concat) == [0, 1, 2, 3]

    def test_even_graph_rejected(self):
        with pytest.raises(NoOddVertices):
            listing_trails(cycle_graph(5))

    def test_disconnected_rejected(self):
        with pytest.raises(Disconnected):
            listing_trails(disjoint_union([complete_graph(4), complete_graph(4)]))

    def test_decompose_odd_regular_over_components(self):
        g = disjoint_union([complete_graph(4), complete_graph(6)])
        td = decompose_odd_regular(g)
        assert len(td.trails) == 2 + 3
        for t in td.trails:
            assert_is_trail(g, t)
        assert_covers(g, [td.concat])

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=4, max_value=10), st.integers(min_value=0, max_value=500))
    def test_random_cubic(self, half_n, seed):
        g = random_regular_graph(2 * half_n, 3, seed=seed)
        td = decompose_odd_regular(g)
        assert len(td.trails) == g.n // 2
        for t in td.trails:
            assert_is_trail(g, t)
        assert_covers(g, [td.concat])


class TestCycleDecomposition:
    """Simple cycles of an even graph and odd-cycle merging"""

    def test_k5_cycles_are_simple(self):
        g = complete_graph(5)
        cycles = cycle_decompose_even(g)
        for c in cycles:
            assert_is_trail(g, c)
            assert c.is_closed
            assert len(set(c.vertex_seq[:-1])) == len(c)
        assert_covers(g, [c.edge_seq for c in cycles])

    def test_odd_degree_rejected(self):
        with pytest.raises(OddDegreeVertex):
            cycle_decompose_even(complete_graph(4))

    def test_merged_odd_cycles_are_disjoint(self):
        for g in (complete_graph(5), complete_graph(7), circulant_graph(9, [1, 2]),
                  disjoint_union([cycle_graph(3), cycle_graph(5), complete_graph(5)])):
            cd = even_circuit_decomposition(g)
            assert 2 * cd.m_star + cd.n_star == g.m
            for p in cd.even_circuits:
                assert len(p) % 2 == 0
                assert_is_trail(g, p)
            seen = set()
            for q in cd.odd_cycles:
                assert len(q) % 2 == 1
                vertices = set(q.vertex_seq)
                assert not vertices & seen
                seen |= vertices
            assert_covers(g, [c.edge_seq for c in cd.even_circuits + cd.odd_cycles])

    def test_two_triangles_sharing_a_vertex(self):
        g = make_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        cd = merge_odd_cycles(cycle_decompose_even(g))
        assert cd.odd_cycles == ()
        assert len(cd.even_circuits) == 1
        assert len(cd.even_circuits[0]) == 6
        assert_is_trail(g, cd.even_circuits[0])

    def test_disjoint_triangles_untouched(self):
        g = disjoint_union([cycle_graph(3), cycle_graph(3)])
        cd = even_circuit_decomposition(g)
        assert cd.even_circuits == ()
        assert cd.n_star == 6


class TestTrail:
    """Trail helpers"""

    def test_rotation(self):
        t = Trail(edge_seq=(0, 1, 2), vertex_seq=(0, 1, 2, 0))
        r = t.rotated_to(2)
        assert r.edge_seq == (2, 0, 1)
        assert r.vertex_seq == (2, 0, 1, 2)

    def test_from_trails_sorts_by_length_then_first_edge(self):
        a = Trail(edge_seq=(4,), vertex_seq=(0, 1))
        b = Trail(edge_seq=(2, 3), vertex_seq=(1, 2, 3))
        c = Trail(edge_seq=(0, 1), vertex_seq=(4, 5, 6))
        td = TrailDecomposition.from_trails([a, b, c])
        assert td.concat == (0, 1, 2, 3, 4)
        assert td.boundary_positions == (0, 2, 4, 5)
