"""
Test suite for the approximately magic labelers
"""

import math
import pytest
import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / 'src'))

from antimagic_approx import (
    CyclesNotDisjoint,
    EvenCycle,
    EvenDegree,
    Labeling,
    LabelingError,
    NotRegular,
    OddDegree,
    ThreeSequences,
    approx_magic_bound,
    cycle_vertex_sums,
    label_along_trails,
    label_cycle,
    label_disjoint_odd_cycles,
    label_regular,
    label_regular_even_connected,
    label_regular_even_general,
    label_regular_odd,
    label_regular_odd_general,
    odd_trail_pair_sums,
    within_bound,
)
from antimagic_decomposition import Disconnected, Trail, decompose_odd_regular
from antimagic_graph import (
    circulant_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    random_regular_graph,
)


def odd_partitions(n, smallest=3):
    """Multisets of odd parts >= smallest summing to n, parts nonincreasing"""
    if n == 0:
        yield []
        return
    for part in range(smallest, n + 1, 2):
        for rest in odd_partitions(n - part, part):
            yield [part] + rest


def disjoint_cycle_trails(sizes):
    """Union of cycles and each cycle as a closed trail on the union's ids"""
    g = disjoint_union([cycle_graph(s) for s in sizes])
    trails, offset = [], 0
    for s in sizes:
        trails.append(Trail(
            edge_seq=tuple(offset + i for i in range(s)),
            vertex_seq=tuple(offset + i for i in range(s)) + (offset,),
        ))
        offset += s
    return g, trails


class TestCycleLabeler:
    """Every vertex sum of C_m lies in {m, m+1, m+2}"""

    def test_small_cycles(self):
        assert label_cycle(3).labels == (1, 3, 2)
        assert label_cycle(4).labels == (1, 4, 2, 3)
        assert label_cycle(6).labels == (1, 6, 2, 4, 3, 5)

    def test_sums_for_every_length_up_to_200(self):
        for m in range(3, 201):
            lab = label_cycle(m)
            assert lab.is_bijection()
            assert set(cycle_vertex_sums(lab.labels)) <= {m, m + 1, m + 2}

    def test_positions_match_cycle_graph(self):
        for m in (5, 8, 11):
            g = cycle_graph(m)
            sums = label_cycle(m).vertex_sums(g)
            assert sorted(sums) == sorted(cycle_vertex_sums(label_cycle(m).labels))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=3, max_value=3000))
    def test_property_large_cycles(self, m):
        sums = cycle_vertex_sums(label_cycle(m).labels)
        assert min(sums) >= m and max(sums) <= m + 2

    def test_too_short(self):
        with pytest.raises(LabelingError):
            label_cycle(2)


class TestOddRegular:
    """Alternating labels along the listing trails"""

    corpus = [
        complete_graph(4),
        complete_graph(6),
        complete_graph(8),
        petersen_graph(),
        circulant_graph(8, [1, 4]),
        circulant_graph(12, [2, 6]),
        circulant_graph(10, [3, 5]),
    ] + [random_regular_graph(n, 3, seed=s) for n in (8, 14, 20) for s in range(5)] \
      + [random_regular_graph(n, 5, seed=s) for n in (16, 20) for s in range(5)]

    def check(self, g):
        k = g.regular_degree()
        td = decompose_odd_regular(g)
        lab = label_along_trails(td, g.m)
        assert lab.is_bijection()
        assert set(odd_trail_pair_sums(td, lab)) <= {g.m + 1, g.m + 2}
        delta = lab.profile(g).delta
        assert delta <= g.n * k // 2 - 1
        assert within_bound(delta, approx_magic_bound(g.n, k, g.is_connected()))
        return lab

    def test_corpus(self):
        for g in self.corpus:
            lab = self.check(g)
            expected = label_regular_odd(g) if g.is_connected() else label_regular_odd_general(g)
            assert expected == lab

    def test_k4_delta(self):
        g = complete_graph(4)
        assert label_regular_odd(g).profile(g).delta <= 5

    def test_general_components(self):
        for g in (disjoint_union([complete_graph(4), complete_graph(4)]),
                  disjoint_union([complete_graph(2)] * 3),
                  disjoint_union([complete_graph(4), petersen_graph()])):
            self.check(g)
            assert label_regular_odd_general(g).is_bijection()

    def test_three_k2(self):
        g = disjoint_union([complete_graph(2)] * 3)
        lab = label_regular_odd_general(g)
        assert lab.labels == (1, 3, 2)
        assert lab.profile(g).delta == 2

    def test_even_degree_rejected(self):
        with pytest.raises(EvenDegree):
            label_regular_odd(cycle_graph(5))

    def test_disconnected_rejected(self):
        with pytest.raises(Disconnected):
            label_regular_odd(disjoint_union([complete_graph(4)] * 2))

    def test_not_regular(self):
        with pytest.raises(NotRegular):
            label_regular_odd(path_graph(4))


class TestEvenConnected:
    """Cycle pattern along an Euler circuit gives delta <= k"""

    def test_cycles(self):
        for m in range(3, 13):
            g = cycle_graph(m)
            assert label_regular_even_connected(g).profile(g).delta <= 2

    def test_corpus(self):
        corpus = [complete_graph(5), complete_graph(7)]
        corpus += [circulant_graph(n, [1, 2]) for n in range(5, 17)]
        corpus += [circulant_graph(n, [1, 3]) for n in range(7, 17)]
        tested = 0
        for g in corpus + [random_regular_graph(n, 4, seed=s) for n in (9, 20) for s in range(5)]:
            if not g.is_connected():
                continue
            k = g.regular_degree()
            lab = label_regular_even_connected(g)
            assert lab.is_bijection()
            assert lab.profile(g).delta <= k
            tested += 1
        assert tested >= len(corpus)

    def test_odd_degree_rejected(self):
        with pytest.raises(OddDegree):
            label_regular_even_connected(complete_graph(4))


class TestThreeSequences:
    """Label pools for disjoint odd cycles"""

    def test_six(self):
        pools = ThreeSequences(6)
        assert (pools.t, pools.eps) == (2, 0)
        assert pools.A == [1, 2]
        assert pools.B == [4, 3]
        assert pools.C == [5, 6]
        assert pools.sum_range == (5, 9)

    def test_eight(self):
        pools = ThreeSequences(8)
        assert pools.B == [6, 5, 4, 3]
        assert pools.C == [7, 8]

    def test_b_taken_once(self):
        pools = ThreeSequences(9)
        pools.take_b(2)
        with pytest.raises(LabelingError):
            pools.take_b(2)


class TestDisjointOddCycles:
    """Three-sequence labeling with sums in [2t+eps+1, 4t+2eps+1]"""

    def test_two_triangles_trace(self):
        g, trails = disjoint_cycle_trails([3, 3])
        lab = Labeling.from_mapping(g.m, label_disjoint_odd_cycles(trails))
        assert lab.labels == (4, 5, 1, 3, 6, 2)
        assert lab.profile(g).delta == 4

    def test_five_and_three_trace(self):
        g, trails = disjoint_cycle_trails([5, 3])
        lab = Labeling.from_mapping(g.m, label_disjoint_odd_cycles(trails))
        assert lab.labels == (5, 7, 1, 8, 2, 6, 4, 3)

    def test_every_odd_partition_up_to_21(self):
        checked = 0
        for n in range(3, 22):
            t, eps = divmod(n, 3)
            for sizes in odd_partitions(n):
                g, trails = disjoint_cycle_trails(sizes)
                lab = Labeling.from_mapping(g.m, label_disjoint_odd_cycles(trails))
                assert lab.is_bijection()
                sums = lab.vertex_sums(g)
                assert min(sums) >= 2 * t + eps + 1
                assert max(sums) <= 4 * t + 2 * eps + 1
                assert max(sums) - min(sums) <= math.ceil(2 * n / 3)
                checked += 1
        assert checked > 50

    def test_offset(self):
        g, trails = disjoint_cycle_trails([3, 3])
        labels = label_disjoint_odd_cycles(trails, label_offset=10)
        assert sorted(labels.values()) == list(range(11, 17))

    def test_even_cycle_rejected(self):
        _, trails = disjoint_cycle_trails([4])
        with pytest.raises(EvenCycle):
            label_disjoint_odd_cycles(trails)

    def test_shared_vertex_rejected(self):
        a = Trail(edge_seq=(0, 1, 2), vertex_seq=(0, 1, 2, 0))
        b = Trail(edge_seq=(3, 4, 5), vertex_seq=(0, 3, 4, 0))
        with pytest.raises(CyclesNotDisjoint):
            label_disjoint_odd_cycles([a, b])


class TestEvenGeneral:
    """3 delta <= 2n + 3(k - 1) for even-regular graphs of any connectivity"""

    corpus = [
        disjoint_union([cycle_graph(3), cycle_graph(5)]),
        disjoint_union([cycle_graph(3)] * 3),
        disjoint_union([cycle_graph(4), cycle_graph(4)]),
        disjoint_union([cycle_graph(7), cycle_graph(3), cycle_graph(3)]),
        disjoint_union([complete_graph(5), complete_graph(5)]),
        disjoint_union([complete_graph(5), circulant_graph(9, [1, 2])]),
        complete_graph(7),
        circulant_graph(11, [1, 2, 3]),
    ]

    def test_corpus(self):
        for g in self.corpus:
            k = g.regular_degree()
            lab = label_regular_even_general(g)
            assert lab.is_bijection()
            delta = lab.profile(g).delta
            assert 3 * delta <= 2 * g.n + 3 * (k - 1)
            assert within_bound(delta, approx_magic_bound(g.n, k, False))

    def test_two_triangles_regression(self):
        g = disjoint_union([cycle_graph(3)] * 2)
        assert label_regular_even_general(g).labels == (4, 5, 1, 3, 6, 2)

    def test_two_squares(self):
        g = disjoint_union([cycle_graph(4)] * 2)
        lab = label_regular_even_general(g)
        assert lab.labels == (1, 8, 2, 7, 3, 6, 4, 5)
        assert lab.profile(g).delta == 2


class TestBoundsAndRouting:
    """Exact bounds and the degree router"""

    def test_bounds(self):
        assert approx_magic_bound(10, 3, True) == 14
        assert approx_magic_bound(10, 4, True) == 4
        assert approx_magic_bound(6, 2, False) == Fraction(5)
        assert approx_magic_bound(5, 2, False) == Fraction(10, 3) + 1

    def test_within_bound_is_exact(self):
        assert within_bound(4, Fraction(13, 3))
        assert not within_bound(5, Fraction(13, 3))

    def test_router(self):
        for g in (complete_graph(4), cycle_graph(6), disjoint_union([cycle_graph(3)] * 2),
                  disjoint_union([complete_graph(4)] * 2)):
            lab = label_regular(g)
            assert lab.is_bijection()
            k = g.regular_degree()
            assert within_bound(lab.profile(g).delta, approx_magic_bound(g.n, k, g.is_connected()))
