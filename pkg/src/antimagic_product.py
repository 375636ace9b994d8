"""
Antimagic Product Labelings

Antimagic labelings of Cartesian products:
- the two-step construction for a regular G1 and a bounded-degree G2
- consecutive label blocks for products with several components
- a dispatcher covering every product of two regular graphs that has a
  constructive or small enough case, and iterated products
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from antimagic_approx import (
    Labeling,
    label_regular_even_connected,
    label_regular_even_general,
    label_regular_odd_general,
)
from antimagic_config import DISPATCH_BRUTE_FORCE_MAX_EDGES, G1_COPY, G2_COPY
from antimagic_graph import (
    Graph,
    ProductStructure,
    cartesian_product,
    connected_components,
)
from antimagic_verify import BudgetExceeded, brute_force_antimagic, compute_vertex_sums

logger = logging.getLogger(__name__)


class ProductError(Exception):
    """Raised when a product cannot be labeled"""
    pass


class ConditionViolated(ProductError):
    """The degree inequality for the two-step construction fails"""
    pass


class G2HasIsolatedVertex(ProductError):
    pass


class FactorNotRegular(ProductError):
    pass


class G1NotRegular(FactorNotRegular):
    pass


class UnsupportedConstructiveCase(ProductError):
    """Toroidal grids and 1-regular pairs beyond the brute-force limit"""
    pass


@dataclass(frozen=True)
class ProductLabelingContext:
    """
    Step 1 data of the two-step construction.

    sigma1[r] is the G1 vertex of rank r (sums nondecreasing under L1),
    sigma2 likewise for G2 under L2. w1 and w2 are indexed by product vertex.
    """
    L1: Labeling
    L2: Labeling
    sigma1: Tuple[int, ...]
    sigma2: Tuple[int, ...]
    w1: Tuple[int, ...]
    w2: Tuple[int, ...]
    k1: int
    k2: int
    delta1: int

    @property
    def transposed(self) -> bool:
        return False

    @property
    def gap_lower_bound(self) -> int:
        return chain_gap_lower_bound(len(self.sigma1), self.k1, self.k2, self.delta1)


def degree_condition(k1: int, k2: int, g1_connected: bool = True) -> bool:
    """Degree inequality under which the two-step labeling is antimagic"""
    if k1 % 2:
        return (k1 * k1 - k1) // 2 >= k2
    if g1_connected:
        return k1 * k1 // 2 >= k2 and not (k1 == 2 and k2 == 2)
    return k1 * k1 // 2 > k2


def chain_gap_lower_bound(n1: int, k1: int, k2: int, delta1: int) -> int:
    """Guaranteed w(u_1, v_{i+1}) - w(u_n1, v_i) given L1's delta"""
    return n1 * k1 * k1 // 2 - delta1 - k2 * (n1 - 1)


def _renaming(sums: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(range(len(sums)), key=lambda v: (sums[v], v)))


def _inverse(order: Sequence[int]) -> List[int]:
    rank = [0] * len(order)
    for r, v in enumerate(order):
        rank[v] = r
    return rank


def label_product_with_context(ps: ProductStructure, k1: int,
                               k2: int) -> Tuple[Labeling, ProductLabelingContext]:
    """
    Two-step antimagic labeling of G1 x G2 and the data behind it.

    Step 1 labels G1 approximately magic (L1) and G2 with 1, n1+1, 2n1+1, ...
    in edge id order (L2), then ranks the vertices of both by sum. Step 2
    gives the G1-copy over the G2 vertex of rank i an [m2 n1 + i m1]-shift
    of L1 and the G2-copy over the G1 vertex of rank j a j-shift of L2.
    """
    g1, g2 = ps.g1, ps.g2
    n1, m1, m2 = g1.n, g1.m, g2.m

    if k1 < 1 or g1.regular_degree() != k1:
        raise G1NotRegular(f"G1 is not {k1}-regular")
    degrees2 = g2.degree_sequence()
    if min(degrees2) == 0:
        raise G2HasIsolatedVertex(f"G2 vertex {degrees2.index(0)} has degree 0")
    if max(degrees2) > k2:
        raise ConditionViolated(f"G2 has maximum degree {max(degrees2)} > k2 = {k2}")

    connected1 = g1.is_connected()
    if not degree_condition(k1, k2, connected1):
        kind = "connected" if connected1 else "disconnected"
        message = f"Degree condition fails for k1={k1}, k2={k2} ({kind} G1)"
        if k1 == 2 and k2 == 2:
            message += "; both degrees equal to 2 is the toroidal grid case"
        raise ConditionViolated(message)

    if k1 % 2:
        L1 = label_regular_odd_general(g1)
    elif connected1:
        L1 = label_regular_even_connected(g1)
    else:
        L1 = label_regular_even_general(g1)
    L2 = Labeling(labels=tuple(e * n1 + 1 for e in range(m2)))

    s1 = L1.vertex_sums(g1)
    s2 = L2.vertex_sums(g2)
    sigma1, sigma2 = _renaming(s1), _renaming(s2)
    rank1, rank2 = _inverse(sigma1), _inverse(sigma2)

    labels = [0] * ps.product.m
    for pe, origin in enumerate(ps.origins):
        if origin.kind == G1_COPY:
            labels[pe] = L1.label_of(origin.source_edge) + m2 * n1 + rank2[origin.copy] * m1
        else:
            labels[pe] = L2.label_of(origin.source_edge) + rank1[origin.copy]

    w1 = [0] * ps.product.n
    w2 = [0] * ps.product.n
    for j in range(n1):
        for i in range(g2.n):
            v = ps.vertex_index(j, i)
            w1[v] = s1[j] + k1 * (m2 * n1 + rank2[i] * m1)
            w2[v] = s2[i] + degrees2[i] * rank1[j]

    ctx = ProductLabelingContext(
        L1=L1, L2=L2, sigma1=sigma1, sigma2=sigma2,
        w1=tuple(w1), w2=tuple(w2), k1=k1, k2=k2,
        delta1=max(s1) - min(s1),
    )
    logger.debug("two-step labeling: n1=%d k1=%d n2=%d k2=%d, L1 delta %d, gap bound %d",
                 n1, k1, g2.n, k2, ctx.delta1, ctx.gap_lower_bound)
    return Labeling(labels=tuple(labels)), ctx


def label_product(ps: ProductStructure, k1: int, k2: int) -> Labeling:
    labeling, _ = label_product_with_context(ps, k1, k2)
    return labeling


# ── Regular x regular ───────────────────────────────────────────────


def _swap_labels(ps: ProductStructure, swapped: ProductStructure, labeling: Labeling) -> Labeling:
    """Express a labeling of G2 x G1 on the edge ids of G1 x G2"""
    flip = {G1_COPY: G2_COPY, G2_COPY: G1_COPY}
    labels = [
        labeling.label_of(swapped.edge_of(flip[o.kind], o.copy, o.source_edge))
        for o in ps.origins
    ]
    return Labeling(labels=tuple(labels))


def _label_oriented(ps: ProductStructure, k1: int, k2: int, budget: int) -> Labeling:
    # connected factors, k1 >= k2
    if k1 >= 3 or (k1 == 2 and k2 == 1):
        logger.debug("dispatch k1=%d k2=%d: two-step construction", k1, k2)
        return label_product(ps, k1, k2)

    m = ps.product.m
    case = "toroidal grid (both factors 2-regular)" if k1 == 2 else "both factors 1-regular"
    if m > budget:
        raise UnsupportedConstructiveCase(
            f"{case}: no constructive labeling is implemented for this case and the "
            f"{m}-edge product exceeds the brute-force limit of {budget} edges"
        )
    logger.debug("dispatch k1=%d k2=%d: brute force on %d edges", k1, k2, m)
    try:
        result = brute_force_antimagic(ps.product, max_edges=budget)
    except BudgetExceeded as e:
        raise UnsupportedConstructiveCase(f"{case}: {e}")
    if not result.antimagic:
        raise UnsupportedConstructiveCase(f"{case}: exhaustive search found no antimagic labeling")
    return result.labeling


def _label_connected_regular_product(ps: ProductStructure, k1: int, k2: int,
                                     budget: int) -> Labeling:
    if k1 >= k2:
        return _label_oriented(ps, k1, k2, budget)
    swapped = cartesian_product(ps.g2, ps.g1)
    return _swap_labels(ps, swapped, _label_oriented(swapped, k2, k1, budget))


def label_disconnected_regular_product(ps: ProductStructure, k1: int, k2: int,
                                       brute_force_budget: int = DISPATCH_BRUTE_FORCE_MAX_EDGES
                                       ) -> Labeling:
    """
    Label each component of the product with its own consecutive block.

    Components are products of a component of G1 and one of G2, ordered by
    their lowest product vertex; every block is antimagic and, all vertices
    having degree k1 + k2, each block's sums exceed those of the block before.
    """
    blocks = []
    for a in connected_components(ps.g1):
        for b in connected_components(ps.g2):
            blocks.append((ps.vertex_index(a.lowest_vertex, b.lowest_vertex), a, b))
    blocks.sort(key=lambda block: block[0])

    labels = [0] * ps.product.m
    block_vertices = []
    shift = 0
    for _, a, b in blocks:
        sub = cartesian_product(a.graph, b.graph)
        sub_labeling = _label_connected_regular_product(sub, k1, k2, brute_force_budget)
        for se, origin in enumerate(sub.origins):
            if origin.kind == G1_COPY:
                pe = ps.edge_of(G1_COPY, b.vertices[origin.copy], a.edge_map[origin.source_edge])
            else:
                pe = ps.edge_of(G2_COPY, a.vertices[origin.copy], b.edge_map[origin.source_edge])
            labels[pe] = sub_labeling.label_of(se) + shift
        block_vertices.append([ps.vertex_index(j, i) for j in a.vertices for i in b.vertices])
        shift += sub.product.m

    labeling = Labeling(labels=tuple(labels))
    sums = compute_vertex_sums(ps.product, labeling)
    for prev, nxt in zip(block_vertices, block_vertices[1:]):
        if sums[nxt].min() <= sums[prev].max():
            raise ProductError("Block sums overlap; components are not equally regular")

    logger.debug("block labeling over %d components", len(blocks))
    return labeling


def _factor_degree(g: Graph, k: Optional[int], name: str) -> int:
    actual = g.regular_degree()
    if actual is None or (k is not None and actual != k):
        error = G1NotRegular if name == 'G1' else FactorNotRegular
        raise error(f"{name} is not {'' if k is None else k}-regular")
    if actual < 1:
        raise FactorNotRegular(f"{name} has degree 0")
    return actual


def dispatch_regular_product(g1: Graph, k1: Optional[int], g2: Graph, k2: Optional[int],
                             brute_force_budget: int = DISPATCH_BRUTE_FORCE_MAX_EDGES) -> Labeling:
    """
    Antimagic labeling of G1 x G2 for regular factors, on the edge ids of
    cartesian_product(g1, g2).

    Connected factors are oriented so k1 >= k2; k1 >= 3 and (2, 1) use the
    two-step construction, (2, 2) and (1, 1) fall back to exhaustive search
    within the budget. Products with several components are labeled block by
    block.
    """
    k1 = _factor_degree(g1, k1, 'G1')
    k2 = _factor_degree(g2, k2, 'G2')
    ps = cartesian_product(g1, g2)

    if g1.is_connected() and g2.is_connected():
        return _label_connected_regular_product(ps, k1, k2, brute_force_budget)
    return label_disconnected_regular_product(ps, k1, k2, brute_force_budget)


def iterated_product(gs: Sequence[Graph],
                     brute_force_budget: int = DISPATCH_BRUTE_FORCE_MAX_EDGES
                     ) -> Tuple[ProductStructure, Labeling]:
    """Fold G_1 x ... x G_r left to right and label the final product"""
    if len(gs) < 2:
        raise ProductError(f"Iterated product needs at least 2 factors, got {len(gs)}")
    for index, g in enumerate(gs):
        if g.regular_degree() is None:
            raise FactorNotRegular(f"Factor {index} is not regular")

    prefix = gs[0]
    for g in gs[1:-1]:
        prefix = cartesian_product(prefix, g).product
        assert prefix.regular_degree() is not None

    last = gs[-1]
    ps = cartesian_product(prefix, last)
    labeling = dispatch_regular_product(
        prefix, prefix.regular_degree(), last, last.regular_degree(), brute_force_budget
    )
    return ps, labeling
