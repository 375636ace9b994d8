"""
Antimagic Builder

Transforms Lark parse trees into graphs, labelings and product structures.
Header counts and edge endpoints are checked against the records.
"""

from typing import Dict, List, Tuple

from lark import Transformer
from lark.exceptions import VisitError

from antimagic_approx import Labeling
from antimagic_config import G1_COPY
from antimagic_graph import (
    EdgeOrigin,
    Graph,
    GraphError,
    ProductStructure,
    build_product_structure,
    make_graph,
)
from antimagic_parser import FormatError


class GraphBuilder(Transformer):
    """
    Lark Transformer for graph files.

    Each method corresponds to a grammar rule.
    """

    def header(self, items):
        """header: "p" INT INT"""
        return int(items[0]), int(items[1])

    def edge_record(self, items):
        """edge_record: "e" INT INT"""
        return int(items[0]), int(items[1])

    def graph_file(self, items):
        (n, m), edges = items[0], items[1:]
        if len(edges) != m:
            raise FormatError(f"Header declares {m} edges, file lists {len(edges)}")
        return make_graph(n, edges)


class LabelingBuilder(Transformer):
    """Lark Transformer for labeling files; endpoints must follow the graph's edge order"""

    def __init__(self, graph: Graph):
        super().__init__()
        self.graph = graph

    def label_record(self, items):
        return int(items[0]), int(items[1]), int(items[2])

    def labeling_file(self, items):
        g = self.graph
        if len(items) != g.m:
            raise FormatError(f"Labeling lists {len(items)} edges, graph has {g.m}")
        labels = []
        for e, (u, v, label) in enumerate(items):
            if {u, v} != set(g.edges[e]):
                raise FormatError(f"Record {e + 1} names edge ({u}, {v}), graph edge {e} is {g.edges[e]}")
            labels.append(label)
        return Labeling(labels=tuple(labels))


class ProvenanceBuilder(Transformer):
    """Lark Transformer for provenance sidecars: ((n1, n2), [EdgeOrigin, ...])"""

    def factors(self, items):
        return int(items[0]), int(items[1])

    def origin_record(self, items):
        return EdgeOrigin(kind=str(items[0]), copy=int(items[1]), source_edge=int(items[2]))

    def provenance_file(self, items):
        return items[0], list(items[1:])


def _unwrap(e: VisitError) -> Exception:
    if isinstance(e.orig_exc, (FormatError, GraphError)):
        return e.orig_exc
    return FormatError(f"Failed to build from parse tree: {e.orig_exc}")


def build_graph(tree) -> Graph:
    try:
        return GraphBuilder().transform(tree)
    except VisitError as e:
        raise _unwrap(e) from e


def build_labeling(tree, graph: Graph) -> Labeling:
    try:
        return LabelingBuilder(graph).transform(tree)
    except VisitError as e:
        raise _unwrap(e) from e


def _factor_edges(records: List[Tuple[int, int, int]], copies: int, name: str) -> List[Tuple[int, int]]:
    """Factor edge list from (source edge, u, v) records seen in every copy"""
    found: Dict[int, Tuple[int, int]] = {}
    for source, u, v in records:
        key = (min(u, v), max(u, v))
        if found.setdefault(source, key) != key:
            raise FormatError(f"{name} edge {source} maps to different vertex pairs in different copies")
    if sorted(found) != list(range(len(found))):
        raise FormatError(f"{name} source edge ids are not 0..{len(found) - 1}")
    if len(records) != copies * len(found):
        raise FormatError(f"{name} copies do not all hold the {len(found)} {name} edges")
    return [found[e] for e in range(len(found))]


def build_provenance(tree, product: Graph) -> ProductStructure:
    """
    Rebuild the product structure of a product graph from its sidecar.

    The factors are recovered from the copies; rebuilding the product from
    them must reproduce every edge of the graph file.
    """
    try:
        (n1, n2), origins = ProvenanceBuilder().transform(tree)
    except VisitError as e:
        raise _unwrap(e) from e

    if n1 < 1 or n2 < 1 or n1 * n2 != product.n:
        raise FormatError(f"Factor sizes {n1} x {n2} do not match a product on {product.n} vertices")
    if len(origins) != product.m:
        raise FormatError(f"Provenance lists {len(origins)} edges, product has {product.m}")

    if len({(o.kind, o.copy, o.source_edge) for o in origins}) != len(origins):
        raise FormatError("Provenance lists the same copy edge twice")

    g1_records, g2_records = [], []
    for pe, origin in enumerate(origins):
        a, b = product.edges[pe]
        (ja, ia), (jb, ib) = divmod(a, n2), divmod(b, n2)
        if origin.kind == G1_COPY:
            if not (ia == ib == origin.copy):
                raise FormatError(f"Product edge {pe} does not lie in G1-copy {origin.copy}")
            g1_records.append((origin.source_edge, ja, jb))
        else:
            if not (ja == jb == origin.copy):
                raise FormatError(f"Product edge {pe} does not lie in G2-copy {origin.copy}")
            g2_records.append((origin.source_edge, ia, ib))

    g1 = make_graph(n1, _factor_edges(g1_records, n2, 'G1'))
    g2 = make_graph(n2, _factor_edges(g2_records, n1, 'G2'))
    ps = build_product_structure(g1, g2, origins)

    for pe, (rebuilt, given) in enumerate(zip(ps.product.edges, product.edges)):
        if set(rebuilt) != set(given):
            raise FormatError(f"Product edge {pe} is {given}, provenance rebuilds {rebuilt}")
    return ps
