"""
Antimagic Approximately Magic Labelers

Edge labelings whose vertex sums differ by at most a known delta:
- cycles (sums among m, m+1, m+2)
- connected regular graphs of odd degree (alternating labels along trails)
- connected regular graphs of even degree (cycle pattern along an Euler circuit)
- vertex-disjoint odd cycles (three-sequence labeling)
- regular graphs that may be disconnected, odd and even degree
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from antimagic_decomposition import (
    Disconnected,
    Trail,
    TrailDecomposition,
    decompose_odd_regular,
    euler_circuit,
    even_circuit_decomposition,
    listing_trails,
)
from antimagic_graph import Graph

logger = logging.getLogger(__name__)


class LabelingError(Exception):
    """Raised when a labeler is given an unsuitable graph"""
    pass


class NotRegular(LabelingError):
    pass


class EvenDegree(LabelingError):
    """Odd-degree labeler given an even-degree graph"""
    pass


class OddDegree(LabelingError):
    """Even-degree labeler given an odd-degree graph"""
    pass


class EvenCycle(LabelingError):
    pass


class CyclesNotDisjoint(LabelingError):
    pass


# ── Data model ──────────────────────────────────────────────────────


@dataclass(frozen=True)
class SumProfile:
    """Vertex sums w(v) and their spread"""
    sums: Tuple[int, ...]

    @property
    def min(self) -> int:
        return min(self.sums)

    @property
    def max(self) -> int:
        return max(self.sums)

    @property
    def delta(self) -> int:
        return self.max - self.min if self.sums else 0


@dataclass(frozen=True)
class Labeling:
    """labels[e] is the label of edge e"""
    labels: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.labels)

    def label_of(self, edge: int) -> int:
        return self.labels[edge]

    def is_bijection(self) -> bool:
        return sorted(self.labels) == list(range(1, self.m + 1))

    def vertex_sums(self, g: Graph) -> List[int]:
        sums = [0] * g.n
        for e, (u, v) in enumerate(g.edges):
            sums[u] += self.labels[e]
            sums[v] += self.labels[e]
        return sums

    def profile(self, g: Graph) -> SumProfile:
        return SumProfile(sums=tuple(self.vertex_sums(g)))

    def shifted(self, delta: int) -> 'Labeling':
        return Labeling(labels=tuple(x + delta for x in self.labels))

    @classmethod
    def from_mapping(cls, m: int, label_of: Dict[int, int]) -> 'Labeling':
        if sorted(label_of) != list(range(m)):
            raise LabelingError(f"Labeling covers {len(label_of)} of {m} edges")
        return cls(labels=tuple(label_of[e] for e in range(m)))


class ThreeSequences:
    """
    Label pools for disjoint odd cycles on n = 3t + eps labels.

    A = 1..t ascending, B = 2t+eps..t+1 descending, C = 2t+eps+1..3t+eps
    ascending. A and C are consumed together from the front; B elements are
    taken by their 1-based position.
    """

    def __init__(self, n: int):
        if n < 3:
            raise LabelingError(f"Three-sequence labeling needs n >= 3, got {n}")
        self.t, self.eps = divmod(n, 3)
        t, eps = self.t, self.eps
        self.A = list(range(1, t + 1))
        self.B = list(range(2 * t + eps, t, -1))
        self.C = list(range(2 * t + eps + 1, 3 * t + eps + 1))
        self.ac_cursor = 0
        self.b_used = [False] * len(self.B)
        self._check()

    def _check(self):
        t, eps = self.t, self.eps
        for i in range(t):
            assert self.A[i] + self.B[i] == 2 * t + eps + 1
            assert self.B[i] + self.C[i] == 4 * t + 2 * eps + 1
        if t:
            assert self.A[0] + self.C[0] == 2 * t + eps + 2
            assert self.A[-1] + self.C[-1] == 4 * t + eps

    @property
    def sum_range(self) -> Tuple[int, int]:
        """Vertex sums land in this range (offset 0)"""
        return 2 * self.t + self.eps + 1, 4 * self.t + 2 * self.eps + 1

    def remaining_ac(self) -> int:
        return self.t - self.ac_cursor

    def take_ac(self, count: int) -> List[Tuple[int, int]]:
        """Next count (c, a) pairs"""
        start = self.ac_cursor
        self.ac_cursor += count
        return list(zip(self.C[start:self.ac_cursor], self.A[start:self.ac_cursor]))

    def take_b(self, position: int) -> int:
        index = position - 1
        if self.b_used[index]:
            raise LabelingError(f"b_{position} already used")
        self.b_used[index] = True
        return self.B[index]

    def take_b_descending(self, count: int) -> List[int]:
        values = []
        for index, value in enumerate(self.B):
            if len(values) == count:
                break
            if not self.b_used[index]:
                self.b_used[index] = True
                values.append(value)
        if len(values) < count:
            raise LabelingError(f"B-sequence ran out ({len(values)} of {count})")
        return values


# ── Bounds ──────────────────────────────────────────────────────────


def approx_magic_bound(n: int, k: int, connected: bool) -> Fraction:
    """Delta guaranteed for an n-vertex k-regular graph"""
    if k % 2:
        return Fraction(n * k, 2) - 1
    if connected:
        return Fraction(k)
    return Fraction(2 * n, 3) + k - 1


def within_bound(delta: int, bound: Fraction) -> bool:
    return Fraction(delta) <= bound


def _regular_degree(g: Graph) -> int:
    k = g.regular_degree()
    if k is None:
        raise NotRegular(f"Graph is not regular (degrees {sorted(set(g.degree_sequence()))})")
    if k < 1:
        raise NotRegular("Regular graph must have degree >= 1")
    return k


# ── Cycles ──────────────────────────────────────────────────────────


def _cycle_groups(m: int) -> Tuple[int, int, Optional[int]]:
    """(low pairs, high pairs, single label) for C_m"""
    r = m % 4
    if r == 1:
        t = (m - 1) // 4
        return t, t, None
    if r == 3:
        t = (m - 3) // 4
        return t, t + 1, None
    if r == 0:
        t = (m - 4) // 4
        return t, t + 1, 2 * t + 2
    t = (m - 2) // 4
    return t, t, 2 * t + 2


def label_cycle(m: int) -> Labeling:
    """
    2-approximately magic labeling of C_m, indexed by cyclic position.

    Position p is the edge between cycle vertices p and p+1, which is edge p
    of cycle_graph(m). Label 1 sits at position 0; high pairs (m, m-1),
    (m-2, m-3), ... and low pairs (2, 3), (4, 5), ... alternate, each pair
    extending the labeled arc by one edge at each end (first label clockwise).
    A leftover single label fills the last edge.
    """
    if m < 3:
        raise LabelingError(f"Cycle length must be >= 3, got {m}")

    lows, highs, single = _cycle_groups(m)
    pairs = []
    for h in range(highs):
        pairs.append((m - 2 * h, m - 2 * h - 1))
        if h < lows:
            pairs.append((2 * h + 2, 2 * h + 3))

    labels = [0] * m
    labels[0] = 1
    cw, ccw = 1, m - 1
    for x, y in pairs:
        labels[cw] = x
        labels[ccw] = y
        cw += 1
        ccw -= 1
    if single is not None:
        labels[cw] = single

    return Labeling(labels=tuple(labels))


def cycle_vertex_sums(labels: Sequence[int]) -> List[int]:
    """Sum at cycle vertex p = labels[p-1] + labels[p]"""
    return [labels[p - 1] + labels[p] for p in range(len(labels))]


# ── Odd degree ──────────────────────────────────────────────────────


def _alternating_label(position: int, m: int) -> int:
    # 1-based position in T
    if position % 2:
        return (position + 1) // 2
    return m + 1 - position // 2


def label_along_trails(td: TrailDecomposition, m: int) -> Labeling:
    """Low labels on odd positions of T, high labels on even positions"""
    if len(td.concat) != m or sorted(td.concat) != list(range(m)):
        raise LabelingError("Trail decomposition does not cover every edge exactly once")
    label_of = {e: _alternating_label(p, m) for p, e in enumerate(td.concat, start=1)}
    return Labeling.from_mapping(m, label_of)


def odd_trail_pair_sums(td: TrailDecomposition, lab: Labeling) -> List[int]:
    """Sums of consecutive edges of T"""
    T = td.concat
    return [lab.label_of(T[p]) + lab.label_of(T[p + 1]) for p in range(len(T) - 1)]


def label_regular_odd(g: Graph, td: Optional[TrailDecomposition] = None) -> Labeling:
    """(nk/2 - 1)-approximately magic labeling of a connected odd-regular graph"""
    k = _regular_degree(g)
    if k % 2 == 0:
        raise EvenDegree(f"Degree {k} is even; use label_regular_even_connected")
    if not g.is_connected():
        raise Disconnected("Graph is disconnected; use label_regular_odd_general")
    if td is None:
        td = listing_trails(g)
    logger.debug("odd labeler: %d trails, longest %d", len(td.trails), len(td.trails[0]))
    return label_along_trails(td, g.m)


def label_regular_odd_general(g: Graph) -> Labeling:
    """Odd-regular labeler over the trails of every component"""
    k = _regular_degree(g)
    if k % 2 == 0:
        raise EvenDegree(f"Degree {k} is even; use label_regular_even_general")
    td = decompose_odd_regular(g)
    logger.debug("odd general labeler: %d trails over %d vertices", len(td.trails), g.n)
    return label_along_trails(td, g.m)


# ── Even degree ─────────────────────────────────────────────────────


def label_regular_even_connected(g: Graph) -> Labeling:
    """k-approximately magic: the cycle pattern laid along an Euler circuit"""
    k = _regular_degree(g)
    if k % 2:
        raise OddDegree(f"Degree {k} is odd; use label_regular_odd")
    if not g.is_connected():
        raise Disconnected("Graph is disconnected; use label_regular_even_general")

    circuit = euler_circuit(g)
    pattern = label_cycle(g.m)
    label_of = {e: pattern.labels[p] for p, e in enumerate(circuit.edge_seq)}
    return Labeling.from_mapping(g.m, label_of)


def _arc_order(cycle: Trail) -> List[int]:
    """Edges of a cycle from its lowest edge id, toward the smaller neighbor"""
    edges = list(cycle.edge_seq)
    p = edges.index(min(edges))
    forward = edges[p:] + edges[:p]
    backward = [forward[0]] + forward[:0:-1]
    if len(edges) > 1 and backward[1] < forward[1]:
        return backward
    return forward


def label_disjoint_odd_cycles(cycles: Sequence[Trail], label_offset: int = 0,
                              total_n: Optional[int] = None) -> Dict[int, int]:
    """
    ceil(2n/3)-approximately magic labeling of vertex-disjoint odd cycles.

    Uses labels label_offset+1 .. label_offset+n and returns them keyed by
    edge id. With offset 0 every vertex sum lies in
    [2t+eps+1, 4t+2eps+1] where n = 3t+eps.
    """
    cycles = sorted(cycles, key=len, reverse=True)
    n = sum(len(c) for c in cycles)
    if total_n is not None and total_n != n:
        raise LabelingError(f"Cycles hold {n} edges, expected {total_n}")

    seen_vertices = set()
    for cycle in cycles:
        if len(cycle) % 2 == 0:
            raise EvenCycle(f"Cycle of even length {len(cycle)}")
        vertices = set(cycle.vertex_seq)
        if vertices & seen_vertices:
            raise CyclesNotDisjoint(f"Cycles share vertices {sorted(vertices & seen_vertices)}")
        seen_vertices |= vertices

    label_of: Dict[int, int] = {}

    if len(cycles) == 1:
        pattern = label_cycle(n)
        for p, e in enumerate(_arc_order(cycles[0])):
            label_of[e] = pattern.labels[p] + label_offset
        return label_of

    pools = ThreeSequences(n)
    for cycle in cycles:
        size = len(cycle)
        half = (size - 1) // 2
        remaining = pools.remaining_ac()

        if remaining >= half:
            values = [pools.take_b(pools.ac_cursor + half)]
            for c, a in pools.take_ac(half):
                values += [c, a]
        elif remaining > 0:
            b_last = pools.take_b(pools.t)
            pairs = pools.take_ac(remaining)
            values = [b_last]
            for c, a in pairs:
                values += [c, a]
            values.append(pools.take_b(1))
            values += pools.take_b_descending(size - len(values))
        else:
            values = pools.take_b_descending(size)

        for e, value in zip(_arc_order(cycle), values):
            label_of[e] = value + label_offset

    return label_of


def label_regular_even_general(g: Graph) -> Labeling:
    """
    (2n/3 + k - 1)-approximately magic labeling of an even-regular graph.

    Even circuits take low labels 1..m* and high labels m-m*+1..m slab by
    slab; the residual odd cycles take the middle labels m*+1..m*+n*.
    """
    k = _regular_degree(g)
    if k % 2:
        raise OddDegree(f"Degree {k} is odd; use label_regular_odd_general")

    m = g.m
    decomposition = even_circuit_decomposition(g)
    m_star, n_star = decomposition.m_star, decomposition.n_star
    assert 2 * m_star + n_star == m

    label_of: Dict[int, int] = {}
    used = 0
    for circuit in decomposition.even_circuits:
        half = len(circuit) // 2
        assert len(circuit) >= 4
        pattern = label_cycle(len(circuit))
        for p, e in enumerate(circuit.edge_seq):
            x = pattern.labels[p]
            label_of[e] = used + x if x <= half else m - used - (len(circuit) - x)
        used += half

    if decomposition.odd_cycles:
        label_of.update(label_disjoint_odd_cycles(decomposition.odd_cycles, m_star, n_star))

    logger.debug("even general labeler: s=%d circuits (m*=%d), t=%d odd cycles (n*=%d)",
                 len(decomposition.even_circuits), m_star, len(decomposition.odd_cycles), n_star)
    return Labeling.from_mapping(m, label_of)


def label_regular(g: Graph) -> Labeling:
    """Pick the labeler matching the degree parity and connectivity"""
    k = _regular_degree(g)
    connected = g.is_connected()
    if k % 2:
        return label_regular_odd(g) if connected else label_regular_odd_general(g)
    return label_regular_even_connected(g) if connected else label_regular_even_general(g)
