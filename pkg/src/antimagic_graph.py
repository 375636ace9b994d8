"""
Antimagic Graph Core

Simple undirected graphs with dense vertex and edge ids, the generator
families used as a test corpus, connected components and the Cartesian
product with full edge provenance.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from antimagic_config import (
    FAMILIES,
    RANDOM_REGULAR_RETRIES,
    G1_COPY,
    G2_COPY,
)

logger = logging.getLogger(__name__)


class GraphError(Exception):
    """Raised when a graph cannot be built"""
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class InfeasibleParameters(GraphError):
    """Generator parameters that cannot produce a graph"""
    pass


class RetryBudgetExhausted(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple graph.

    Vertex ids are 0..n-1, edge ids are 0..m-1 in insertion order.
    adjacency[v] lists (neighbor, edge id) pairs in ascending edge id.
    """
    n: int
    edges: Tuple[Tuple[int, int], ...]
    adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> List[int]:
        return [len(adj) for adj in self.adjacency]

    def regular_degree(self) -> Optional[int]:
        """Common degree if the graph is regular, else None"""
        degrees = set(self.degree_sequence())
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"Vertex {v} is not an endpoint of edge {edge}")

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1


def make_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph, assigning edge ids in input order"""
    if n < 0:
        raise GraphError(f"Vertex count must be non-negative, got {n}")

    edges: List[Tuple[int, int]] = []
    seen = set()
    adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(n)]

    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"Edge ({u}, {v}) is a self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"Edge ({u}, {v}) appears more than once")
        seen.add(key)

        edge_id = len(edges)
        edges.append((u, v))
        adjacency[u].append((v, edge_id))
        adjacency[v].append((u, edge_id))

    return Graph(
        n=n,
        edges=tuple(edges),
        adjacency=tuple(tuple(adj) for adj in adjacency),
    )


# ── Generators ──────────────────────────────────────────────────────


def cycle_graph(n: int) -> Graph:
    """C_n; edge i joins i and i+1 (mod n)"""
    if n < 3:
        raise InfeasibleParameters(f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """P_n on n vertices"""
    if n < 1:
        raise InfeasibleParameters(f"path needs n >= 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise InfeasibleParameters(f"complete needs n >= 2, got {n}")
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def circulant_graph(n: int, offsets: Sequence[int]) -> Graph:
    """Circulant graph C_n(offsets); offsets must give distinct edges"""
    if n < 3:
        raise InfeasibleParameters(f"circulant needs n >= 3, got {n}")
    if not offsets:
        raise InfeasibleParameters("circulant needs at least one offset")

    normalized = set()
    for s in offsets:
        if not 1 <= s < n:
            raise InfeasibleParameters(f"circulant offset {s} outside 1..{n - 1}")
        key = min(s, n - s)
        if key in normalized:
            raise InfeasibleParameters(f"circulant offsets {list(offsets)} produce duplicate edges")
        normalized.add(key)

    pairs = []
    for s in sorted(normalized):
        # s == n/2 joins each antipodal pair once
        count = n // 2 if 2 * s == n else n
        pairs.extend((i, (i + s) % n) for i in range(count))
    return make_graph(n, pairs)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Union with each part's vertices shifted past the previous parts"""
    pairs = []
    offset = 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return make_graph(offset, pairs)


def random_regular_graph(n: int, k: int, seed: int = 0,
                         retries: int = RANDOM_REGULAR_RETRIES) -> Graph:
    """
    Random simple k-regular graph from the pairing model.

    Whole samples with a loop or a multi-edge are rejected; the sequence of
    samples is fixed by the seed.
    """
    if n < 1 or k < 0:
        raise InfeasibleParameters(f"random regular needs n >= 1 and k >= 0, got n={n}, k={k}")
    if (n * k) % 2 != 0:
        raise InfeasibleParameters(f"n * k must be even, got n={n}, k={k}")
    if k >= n:
        raise InfeasibleParameters(f"random regular needs k < n, got n={n}, k={k}")

    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), k)

    for attempt in range(1, retries + 1):
        points = rng.permutation(stubs).reshape(-1, 2)
        pairs = [(int(a), int(b)) for a, b in points]
        keys = {(min(a, b), max(a, b)) for a, b in pairs}
        if len(keys) == len(pairs) and all(a != b for a, b in pairs):
            logger.debug("random regular n=%d k=%d seed=%d accepted after %d samples",
                         n, k, seed, attempt)
            return make_graph(n, sorted(keys))

    raise RetryBudgetExhausted(
        f"No simple {k}-regular graph on {n} vertices after {retries} samples (seed {seed})"
    )


def gen_family(family: str, *params, **options) -> Graph:
    """
    Generate a member of one of the corpus families.

    cycle n | complete n | path n | petersen | circulant n offsets |
    random_regular n k [seed] | disjoint_union [graphs]
    """
    family = family.replace('-', '_')
    if family not in FAMILIES:
        raise InfeasibleParameters(f"Unknown family '{family}'; expected one of {', '.join(FAMILIES)}")

    try:
        if family == 'cycle':
            (n,) = params
            return cycle_graph(int(n))
        if family == 'complete':
            (n,) = params
            return complete_graph(int(n))
        if family == 'path':
            (n,) = params
            return path_graph(int(n))
        if family == 'petersen':
            if params:
                raise ValueError("petersen takes no parameters")
            return petersen_graph()
        if family == 'circulant':
            n, offsets = params[0], params[1:]
            if len(offsets) == 1 and isinstance(offsets[0], (list, tuple)):
                offsets = tuple(offsets[0])
            return circulant_graph(int(n), [int(s) for s in offsets])
        if family == 'random_regular':
            n, k = params[:2]
            seed = params[2] if len(params) > 2 else options.get('seed', 0)
            return random_regular_graph(int(n), int(k), int(seed))
        if family == 'disjoint_union':
            parts = params[0] if len(params) == 1 and not isinstance(params[0], Graph) else params
            return disjoint_union(list(parts))
    except (TypeError, ValueError) as e:
        raise InfeasibleParameters(f"Bad parameters for {family}: {params} ({e})")

    raise InfeasibleParameters(f"Unhandled family '{family}'")


# ── Components ──────────────────────────────────────────────────────


@dataclass(frozen=True)
class Component:
    """
    A connected component with its induced subgraph.

    Local vertex i is vertices[i] in the host; local edge e is edge_map[e].
    """
    vertices: Tuple[int, ...]
    graph: Graph
    edge_map: Tuple[int, ...]

    @property
    def lowest_vertex(self) -> int:
        return self.vertices[0]


def connected_components(g: Graph) -> List[Component]:
    """Components ordered by their lowest vertex id"""
    seen = [False] * g.n
    components = []

    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        members = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, _ in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)

        vertices = tuple(sorted(members))
        local = {v: i for i, v in enumerate(vertices)}
        edge_ids = sorted({e for v in vertices for _, e in g.adjacency[v]})
        subgraph = make_graph(
            len(vertices),
            [(local[g.edges[e][0]], local[g.edges[e][1]]) for e in edge_ids],
        )
        components.append(Component(vertices=vertices, graph=subgraph, edge_map=tuple(edge_ids)))

    return components


# ── Cartesian product ───────────────────────────────────────────────


@dataclass(frozen=True)
class EdgeOrigin:
    """Which factor copy a product edge lies in"""
    kind: str          # G1_COPY or G2_COPY
    copy: int          # G2 vertex for a G1-copy, G1 vertex for a G2-copy
    source_edge: int   # edge id in the copied factor


@dataclass(frozen=True)
class ProductStructure:
    """
    G1 x G2 with provenance.

    Product vertex (u_j, v_i) has id j * n2 + i.
    """
    g1: Graph
    g2: Graph
    product: Graph
    origins: Tuple[EdgeOrigin, ...]
    _lookup: Dict[Tuple[str, int, int], int] = field(repr=False, compare=False)

    @property
    def n1(self) -> int:
        return self.g1.n

    @property
    def n2(self) -> int:
        return self.g2.n

    def vertex_index(self, j: int, i: int) -> int:
        return j * self.n2 + i

    def coords(self, vertex: int) -> Tuple[int, int]:
        return divmod(vertex, self.n2)

    def edge_of(self, kind: str, copy: int, source_edge: int) -> int:
        return self._lookup[(kind, copy, source_edge)]


def build_product_structure(g1: Graph, g2: Graph, origins: Sequence[EdgeOrigin]) -> ProductStructure:
    """Rebuild a product from its factors and an edge provenance list"""
    n2 = g2.n
    pairs = []
    for origin in origins:
        if origin.kind == G1_COPY:
            u, v = g1.edges[origin.source_edge]
            i = origin.copy
            pairs.append((u * n2 + i, v * n2 + i))
        elif origin.kind == G2_COPY:
            u, v = g2.edges[origin.source_edge]
            j = origin.copy
            pairs.append((j * n2 + u, j * n2 + v))
        else:
            raise GraphError(f"Unknown copy kind '{origin.kind}'")

    product = make_graph(g1.n * g2.n, pairs)
    lookup = {(o.kind, o.copy, o.source_edge): e for e, o in enumerate(origins)}
    return ProductStructure(g1=g1, g2=g2, product=product, origins=tuple(origins), _lookup=lookup)


def cartesian_product(g1: Graph, g2: Graph) -> ProductStructure:
    """G1-copies first (copy by copy), then G2-copies"""
    if g1.n == 0 or g2.n == 0:
        raise GraphError("Cartesian product needs two nonempty graphs")

    origins = [EdgeOrigin(G1_COPY, i, e) for i in range(g2.n) for e in range(g1.m)]
    origins += [EdgeOrigin(G2_COPY, j, e) for j in range(g1.n) for e in range(g2.m)]
    ps = build_product_structure(g1, g2, origins)
    logger.debug("product %dx%d: %d vertices, %d edges", g1.n, g2.n, ps.product.n, ps.product.m)
    return ps
