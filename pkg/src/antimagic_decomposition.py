"""
Antimagic Edge Decompositions

Trails and circuits that the labelers walk along:
- Euler circuits (Hierholzer, lowest-numbered unused edge first)
- Listing trails for graphs with odd-degree vertices
- cycle decompositions of even graphs
- merging odd cycles that share a vertex into even circuits
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from antimagic_graph import Graph, connected_components

logger = logging.getLogger(__name__)


class DecompositionError(Exception):
    """Raised when a graph does not admit the requested decomposition"""
    pass


class OddDegreeVertex(DecompositionError):
    pass


class Disconnected(DecompositionError):
    pass


class NoOddVertices(DecompositionError):
    """Listing trails need odd vertices; use euler_circuit instead"""
    pass


@dataclass(frozen=True)
class Trail:
    """
    Walk without repeated edges.

    vertex_seq is one longer than edge_seq; edge_seq[i] joins
    vertex_seq[i] and vertex_seq[i + 1].
    """
    edge_seq: Tuple[int, ...]
    vertex_seq: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edge_seq)

    @property
    def is_closed(self) -> bool:
        return self.vertex_seq[0] == self.vertex_seq[-1]

    def rotated_to(self, vertex: int) -> 'Trail':
        """Same closed trail, started and ended at vertex"""
        if not self.is_closed:
            raise DecompositionError("Only closed trails can be rotated")
        p = self.vertex_seq.index(vertex, 0, len(self.edge_seq))
        edges = self.edge_seq[p:] + self.edge_seq[:p]
        vertices = self.vertex_seq[p:-1] + self.vertex_seq[:p] + (vertex,)
        return Trail(edge_seq=edges, vertex_seq=vertices)


@dataclass(frozen=True)
class TrailDecomposition:
    """Trails sorted by nonincreasing length and their concatenation T"""
    trails: Tuple[Trail, ...]
    concat: Tuple[int, ...]
    boundary_positions: Tuple[int, ...]

    @classmethod
    def from_trails(cls, trails: Sequence[Trail]) -> 'TrailDecomposition':
        ordered = sorted(trails, key=lambda t: (-len(t), t.edge_seq[0]))
        concat: List[int] = []
        boundaries = [0]
        for trail in ordered:
            concat.extend(trail.edge_seq)
            boundaries.append(len(concat))
        return cls(trails=tuple(ordered), concat=tuple(concat), boundary_positions=tuple(boundaries))


@dataclass(frozen=True)
class CircuitDecomposition:
    """Even circuits P_i plus pairwise vertex-disjoint odd cycles Q_i"""
    even_circuits: Tuple[Trail, ...]
    odd_cycles: Tuple[Trail, ...]

    @property
    def m_star(self) -> int:
        return sum(len(p) for p in self.even_circuits) // 2

    @property
    def n_star(self) -> int:
        return sum(len(q) for q in self.odd_cycles)


class _Multigraph:
    """
    Edge-id keyed view allowing parallel edges.

    Used for Euler tours over a graph plus virtual edges; the public Graph
    stays simple.
    """

    def __init__(self, n: int, endpoints: Sequence[Tuple[int, int]]):
        self.n = n
        self.endpoints = list(endpoints)
        self.adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.endpoints):
            self.adjacency[u].append((v, e))
            self.adjacency[v].append((u, e))

    @classmethod
    def from_graph(cls, g: Graph, extra: Sequence[Tuple[int, int]] = ()) -> '_Multigraph':
        return cls(g.n, list(g.edges) + list(extra))

    @property
    def m(self) -> int:
        return len(self.endpoints)


def _as_multigraph(g: Union[Graph, _Multigraph]) -> _Multigraph:
    if isinstance(g, _Multigraph):
        return g
    return _Multigraph.from_graph(g)


def _check_even_degrees(adjacency: Sequence[Sequence[Tuple[int, int]]]):
    for v, adj in enumerate(adjacency):
        if len(adj) % 2:
            raise OddDegreeVertex(f"Vertex {v} has odd degree {len(adj)}")


def _check_edges_connected(mg: _Multigraph, start: int):
    seen = [False] * mg.n
    seen[start] = True
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w, _ in mg.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    for v in range(mg.n):
        if mg.adjacency[v] and not seen[v]:
            raise Disconnected(f"Vertex {v} carries edges but is not reachable from {start}")


def euler_circuit(g: Union[Graph, _Multigraph], start: Optional[int] = None) -> Trail:
    """
    Closed trail through every edge exactly once.

    start defaults to the lowest vertex with nonzero degree.
    """
    mg = _as_multigraph(g)
    _check_even_degrees(mg.adjacency)

    if start is None:
        start = next((v for v in range(mg.n) if mg.adjacency[v]), 0)
    if mg.m == 0:
        return Trail(edge_seq=(), vertex_seq=(start,))
    if not mg.adjacency[start]:
        raise Disconnected(f"Start vertex {start} has no edges")
    _check_edges_connected(mg, start)

    used = [False] * mg.m
    pointer = [0] * mg.n
    stack: List[Tuple[int, Optional[int]]] = [(start, None)]
    vertices: List[int] = []
    edges: List[int] = []

    while stack:
        v, arrived_by = stack[-1]
        adj = mg.adjacency[v]
        while pointer[v] < len(adj) and used[adj[pointer[v]][1]]:
            pointer[v] += 1
        if pointer[v] < len(adj):
            w, e = adj[pointer[v]]
            used[e] = True
            stack.append((w, e))
        else:
            stack.pop()
            vertices.append(v)
            if arrived_by is not None:
                edges.append(arrived_by)

    vertices.reverse()
    edges.reverse()
    return Trail(edge_seq=tuple(edges), vertex_seq=tuple(vertices))


def listing_trails(g: Graph) -> TrailDecomposition:
    """
    Split a connected graph with 2h odd vertices into h trails.

    Odd vertices are paired in ascending order by virtual edges; the Euler
    circuit of the augmented multigraph is cut at the virtual edges. The
    virtual edges form a matching, so no two are consecutive and every piece
    is a nonempty trail.
    """
    odd = [v for v in range(g.n) if g.degree(v) % 2]
    if not odd:
        raise NoOddVertices("Graph has no odd-degree vertices; use euler_circuit")
    _check_edges_connected(_Multigraph.from_graph(g), odd[0])

    virtual = [(odd[i], odd[i + 1]) for i in range(0, len(odd), 2)]
    mg = _Multigraph.from_graph(g, virtual)
    circuit = euler_circuit(mg)

    is_virtual = [e >= g.m for e in circuit.edge_seq]
    length = len(circuit.edge_seq)
    first_cut = is_virtual.index(True)
    order = [(first_cut + 1 + i) % length for i in range(length)]

    trails = []
    piece_edges: List[int] = []
    piece_vertices: List[int] = []
    for idx in order:
        if is_virtual[idx]:
            trails.append(Trail(edge_seq=tuple(piece_edges), vertex_seq=tuple(piece_vertices)))
            piece_edges, piece_vertices = [], []
            continue
        if not piece_edges:
            piece_vertices.append(circuit.vertex_seq[idx])
        piece_edges.append(circuit.edge_seq[idx])
        piece_vertices.append(circuit.vertex_seq[idx + 1])

    logger.debug("listing: %d odd vertices -> %d trails", len(odd), len(trails))
    return TrailDecomposition.from_trails(trails)


def decompose_odd_regular(g: Graph) -> TrailDecomposition:
    """Listing trails of every component, merged into one sorted T"""
    trails = []
    for comp in connected_components(g):
        if comp.graph.m == 0:
            continue
        local = listing_trails(comp.graph)
        for trail in local.trails:
            trails.append(Trail(
                edge_seq=tuple(comp.edge_map[e] for e in trail.edge_seq),
                vertex_seq=tuple(comp.vertices[v] for v in trail.vertex_seq),
            ))
    if not trails:
        raise NoOddVertices("Graph has no edges to decompose")
    return TrailDecomposition.from_trails(trails)


def cycle_decompose_even(g: Graph) -> List[Trail]:
    """
    Edge-disjoint simple cycles covering an even graph.

    Each round walks from the lowest-numbered remaining edge, always taking
    the lowest-numbered remaining edge not yet on the walk, until a vertex
    repeats; the closed part of the walk is removed as a cycle.
    """
    _check_even_degrees(g.adjacency)

    removed = [False] * g.m
    cycles = []
    next_edge = 0

    while True:
        while next_edge < g.m and removed[next_edge]:
            next_edge += 1
        if next_edge == g.m:
            break

        u, v = g.edges[next_edge]
        path_vertices = [u, v]
        path_edges = [next_edge]
        position = {u: 0, v: 1}
        on_path = {next_edge}
        x = v

        while True:
            w, e = next((w, e) for w, e in g.adjacency[x] if not removed[e] and e not in on_path)
            path_edges.append(e)
            on_path.add(e)
            if w in position:
                i = position[w]
                cycle = Trail(edge_seq=tuple(path_edges[i:]), vertex_seq=tuple(path_vertices[i:]) + (w,))
                break
            position[w] = len(path_vertices)
            path_vertices.append(w)
            x = w

        for e in cycle.edge_seq:
            removed[e] = True
        cycles.append(cycle)

    logger.debug("cycle decomposition: %d cycles, lengths %s", len(cycles), [len(c) for c in cycles])
    return cycles


def _splice(a: Trail, b: Trail, vertex: int) -> Trail:
    ra = a.rotated_to(vertex)
    rb = b.rotated_to(vertex)
    return Trail(edge_seq=ra.edge_seq + rb.edge_seq, vertex_seq=ra.vertex_seq[:-1] + rb.vertex_seq)


def _first_odd_pair(items: Sequence[Trail]) -> Optional[Tuple[int, int, int]]:
    for i, a in enumerate(items):
        if len(a) % 2 == 0:
            continue
        a_vertices = set(a.vertex_seq)
        for j in range(i + 1, len(items)):
            b = items[j]
            if len(b) % 2 == 0:
                continue
            shared = a_vertices.intersection(b.vertex_seq)
            if shared:
                return i, j, min(shared)
    return None


def merge_odd_cycles(cycles: Sequence[Trail]) -> CircuitDecomposition:
    """
    Splice odd closed trails sharing a vertex until the odd ones left are
    pairwise vertex-disjoint.
    """
    items = list(cycles)
    merges = 0
    while True:
        pair = _first_odd_pair(items)
        if pair is None:
            break
        i, j, vertex = pair
        items[i] = _splice(items[i], items[j], vertex)
        del items[j]
        merges += 1

    even = tuple(t for t in items if len(t) % 2 == 0)
    odd = tuple(sorted((t for t in items if len(t) % 2), key=len, reverse=True))
    logger.debug("merged %d odd pairs: s=%d even circuits, t=%d odd cycles", merges, len(even), len(odd))
    return CircuitDecomposition(even_circuits=even, odd_cycles=odd)


def even_circuit_decomposition(g: Graph) -> CircuitDecomposition:
    return merge_odd_cycles(cycle_decompose_even(g))
