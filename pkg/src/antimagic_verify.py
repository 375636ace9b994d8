"""
Antimagic Verification

Independent checks of labelings. Vertex sums are recomputed from the edge
list with numpy, never taken from a labeler. Also holds the exhaustive
search oracles used on tiny graphs.
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from antimagic_approx import Labeling, SumProfile, label_regular_even_general
from antimagic_config import (
    ANTIMAGIC_SEARCH_MAX_EDGES,
    MIN_DELTA_SEARCH_MAX_EDGES,
    SEARCH_NODE_CAP,
)
from antimagic_graph import Graph, ProductStructure, complete_graph, disjoint_union

logger = logging.getLogger(__name__)


class VerificationError(Exception):
    pass


class LabelingSizeMismatch(VerificationError):
    pass


class BudgetExceeded(VerificationError):
    """Exhaustive search refused or stopped at its limit"""
    pass


@dataclass
class VerificationReport:
    is_bijection: bool
    sums: SumProfile
    is_antimagic: bool
    duplicate_sum_pairs: List[Tuple[int, int]] = field(default_factory=list)
    chain_ok: Optional[bool] = None
    gaps_ok: Optional[bool] = None
    violations: List[str] = field(default_factory=list)

    @property
    def delta(self) -> int:
        return self.sums.delta

    @property
    def passed(self) -> bool:
        """Bijection holds and every optional check that ran succeeded"""
        return self.is_bijection and self.chain_ok is not False and self.gaps_ok is not False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'bijection': self.is_bijection,
            'antimagic': self.is_antimagic,
            'delta': self.delta,
            'min_sum': self.sums.min if self.sums.sums else 0,
            'max_sum': self.sums.max if self.sums.sums else 0,
            'duplicate_sum_pairs': [list(p) for p in self.duplicate_sum_pairs],
            'chain_ok': self.chain_ok,
            'gaps_ok': self.gaps_ok,
            'violations': list(self.violations),
        }


@dataclass(frozen=True)
class ChainOrder:
    """
    Renamings under which the product sums are checked in chain order.

    The chain runs through G1 ranks fastest. A transposed chain runs through
    G2 ranks fastest, which is how a labeling built on G2 x G1 reads on the
    edge ids of G1 x G2. Inferred orders carry no gap bound.
    """
    sigma1: Tuple[int, ...]
    sigma2: Tuple[int, ...]
    transposed: bool = False
    gap_lower_bound: Optional[int] = None


def compute_vertex_sums(g: Graph, lab: Labeling) -> np.ndarray:
    if lab.m != g.m:
        raise LabelingSizeMismatch(f"Labeling has {lab.m} labels, graph has {g.m} edges")
    ends = np.array(g.edges, dtype=np.int64).reshape(-1, 2)
    labels = np.array(lab.labels, dtype=np.int64)
    sums = np.zeros(g.n, dtype=np.int64)
    np.add.at(sums, ends[:, 0], labels)
    np.add.at(sums, ends[:, 1], labels)
    return sums


def verify(g: Graph, lab: Labeling, ps: Optional[ProductStructure] = None,
           ctx=None) -> VerificationReport:
    """
    Check bijection, vertex sums, delta and antimagicness.

    With a product structure, chain (1) is also checked: under ctx's
    renamings when given, otherwise under renamings inferred from the sums.
    When the order carries a gap bound, every gap between consecutive
    blocks of the chain must reach it.
    """
    sums = compute_vertex_sums(g, lab)
    labels = np.array(lab.labels, dtype=np.int64)
    violations = []

    is_bijection = bool(np.array_equal(np.sort(labels), np.arange(1, lab.m + 1)))
    if not is_bijection:
        values, counts = np.unique(labels, return_counts=True)
        repeated = values[counts > 1].tolist()
        missing = sorted(set(range(1, lab.m + 1)) - set(values.tolist()))
        violations.append(f"labels are not a bijection onto 1..{lab.m}: "
                          f"repeated {repeated}, missing {missing}")

    by_sum = defaultdict(list)
    for v, s in enumerate(sums.tolist()):
        by_sum[s].append(v)
    duplicates = []
    for s in sorted(by_sum):
        group = by_sum[s]
        duplicates.extend((group[a], group[b]) for a in range(len(group)) for b in range(a + 1, len(group)))
    if duplicates:
        violations.append(f"{len(duplicates)} vertex pairs share a sum")

    report = VerificationReport(
        is_bijection=is_bijection,
        sums=SumProfile(sums=tuple(sums.tolist())),
        is_antimagic=len(by_sum) == g.n,
        duplicate_sum_pairs=duplicates,
        violations=violations,
    )

    if ps is not None:
        order = ctx if ctx is not None else infer_chain_context(ps, lab)
        report.chain_ok = order is not None and verify_chain(order, ps, lab)
        if not report.chain_ok:
            violations.append("vertex sums do not increase strictly along the product chain")
        elif order.gap_lower_bound is not None:
            bound = order.gap_lower_bound
            short = [gap for gap in chain_gaps(order, ps, lab) if gap < bound or gap <= 0]
            report.gaps_ok = not short
            if short:
                violations.append(f"{len(short)} chain gaps fall below the guaranteed {bound}")

    return report


def chain_sequence(ctx, ps: ProductStructure) -> List[int]:
    """Product vertices in chain order: G1 rank fastest, then G2 rank, or transposed"""
    if ctx.transposed:
        return [ps.vertex_index(j, i) for j in ctx.sigma1 for i in ctx.sigma2]
    return [ps.vertex_index(j, i) for i in ctx.sigma2 for j in ctx.sigma1]


def verify_chain(ctx, ps: ProductStructure, lab: Labeling) -> bool:
    """True iff sums strictly increase along (u_1,v_1), ..., (u_n1,v_n2)"""
    sums = compute_vertex_sums(ps.product, lab)
    chain = sums[chain_sequence(ctx, ps)]
    return bool(np.all(np.diff(chain) > 0))


def chain_gaps(ctx, ps: ProductStructure, lab: Labeling) -> List[int]:
    """
    First sum of each chain block minus the last sum of the block before.

    Untransposed this is w(u_1, v_{i+1}) - w(u_n1, v_i) over consecutive G2 ranks.
    """
    sums = compute_vertex_sums(ps.product, lab)
    chain = sums[chain_sequence(ctx, ps)]
    size = len(ctx.sigma2) if ctx.transposed else len(ctx.sigma1)
    return [int(chain[start] - chain[start - 1]) for start in range(size, len(chain), size)]


def _grid_blocks(order: List[int], coords: List[Tuple[int, int]],
                 size: int) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(inner order, block order) when order splits into blocks of size vertices
    sharing their second coordinate, with the same inner order in every block"""
    inner = tuple(coords[v][0] for v in order[:size])
    outer = []
    for start in range(0, len(order), size):
        block = [coords[v] for v in order[start:start + size]]
        if tuple(a for a, _ in block) != inner or len({b for _, b in block}) != 1:
            return None
        outer.append(block[0][1])
    return inner, tuple(outer)


def infer_chain_context(ps: ProductStructure, lab: Labeling) -> Optional[ChainOrder]:
    """
    Renamings under which the chain holds, or None.

    The sorted sums must be strictly increasing and come in blocks of n1
    vertices sharing one G2 coordinate, with the same G1 order in every block.
    Failing that, blocks of n2 vertices sharing one G1 coordinate give the
    transposed chain.
    """
    sums = compute_vertex_sums(ps.product, lab)
    order = np.argsort(sums, kind='stable').tolist()
    if len(set(sums.tolist())) != len(order):
        return None

    coords = [ps.coords(v) for v in range(ps.product.n)]
    found = _grid_blocks(order, coords, ps.n1)
    if found is not None:
        return ChainOrder(sigma1=found[0], sigma2=found[1])

    found = _grid_blocks(order, [(i, j) for j, i in coords], ps.n2)
    if found is not None:
        return ChainOrder(sigma1=found[1], sigma2=found[0], transposed=True)
    return None


# ── Exhaustive oracles ──────────────────────────────────────────────


@dataclass(frozen=True)
class BruteForceResult:
    labeling: Optional[Labeling]
    nodes: int

    @property
    def antimagic(self) -> bool:
        return self.labeling is not None


def _completion_schedule(g: Graph) -> List[List[int]]:
    """completes[e] = vertices whose last incident edge is e"""
    completes: List[List[int]] = [[] for _ in range(g.m)]
    for v in range(g.n):
        if g.adjacency[v]:
            completes[max(e for _, e in g.adjacency[v])].append(v)
    return completes


def brute_force_antimagic(g: Graph, max_edges: int = ANTIMAGIC_SEARCH_MAX_EDGES,
                          node_cap: int = SEARCH_NODE_CAP) -> BruteForceResult:
    """
    Lexicographically smallest antimagic labeling, or a result without one.

    Labels are tried in ascending order edge by edge; a branch dies as soon
    as two fully labeled vertices share a sum.
    """
    m = g.m
    if m > max_edges:
        raise BudgetExceeded(f"Graph has {m} edges, exhaustive search limit is {max_edges}")

    completes = _completion_schedule(g)
    partial = [0] * g.n
    used = [False] * (m + 1)
    assign = [0] * m
    isolated = [v for v in range(g.n) if not g.adjacency[v]]
    if len(isolated) > 1:
        return BruteForceResult(labeling=None, nodes=0)
    determined = {0} if isolated else set()
    nodes = 0

    def search(e: int) -> bool:
        nonlocal nodes
        if e == m:
            return True
        u, v = g.edges[e]
        for label in range(1, m + 1):
            if used[label]:
                continue
            nodes += 1
            if nodes > node_cap:
                raise BudgetExceeded(f"Search stopped after {node_cap} nodes")
            used[label] = True
            assign[e] = label
            partial[u] += label
            partial[v] += label
            added = []
            for w in completes[e]:
                if partial[w] in determined:
                    break
                determined.add(partial[w])
                added.append(partial[w])
            else:
                if search(e + 1):
                    return True
            for s in added:
                determined.discard(s)
            partial[u] -= label
            partial[v] -= label
            used[label] = False
        return False

    found = search(0)
    logger.debug("antimagic search on m=%d: %s after %d nodes", m, found, nodes)
    labeling = Labeling(labels=tuple(assign)) if found else None
    return BruteForceResult(labeling=labeling, nodes=nodes)


def brute_force_min_delta(g: Graph, max_edges: int = MIN_DELTA_SEARCH_MAX_EDGES,
                          node_cap: int = SEARCH_NODE_CAP) -> int:
    """Minimum of max sum - min sum over all bijective labelings"""
    m = g.m
    if m > max_edges:
        raise BudgetExceeded(f"Graph has {m} edges, exhaustive search limit is {max_edges}")

    completes = _completion_schedule(g)
    partial = [0] * g.n
    used = [False] * (m + 1)
    # isolated vertices keep sum 0
    fixed = [0 for v in range(g.n) if not g.adjacency[v]]
    best = math.inf
    nodes = 0

    def search(e: int, low: float, high: float):
        nonlocal best, nodes
        if e == m:
            best = min(best, high - low if high >= low else 0)
            return
        u, v = g.edges[e]
        for label in range(1, m + 1):
            if used[label]:
                continue
            nodes += 1
            if nodes > node_cap:
                raise BudgetExceeded(f"Search stopped after {node_cap} nodes")
            used[label] = True
            partial[u] += label
            partial[v] += label
            new_low, new_high = low, high
            for w in completes[e]:
                new_low = min(new_low, partial[w])
                new_high = max(new_high, partial[w])
            if new_high < new_low or new_high - new_low < best:
                search(e + 1, new_low, new_high)
            partial[u] -= label
            partial[v] -= label
            used[label] = False

    search(0, min(fixed, default=math.inf), max(fixed, default=-math.inf))
    logger.debug("min delta search on m=%d: %s after %d nodes", m, best, nodes)
    return int(best) if best != math.inf else 0


def triangle_experiment(max_triangles: int = 2,
                        max_edges: int = MIN_DELTA_SEARCH_MAX_EDGES + 1) -> List[Dict[str, Any]]:
    """
    Disjoint triangles: exhaustive minimum delta next to the constructive
    delta and ceil(2n/3). Rows beyond the search limit report None.
    """
    rows = []
    for count in range(1, max_triangles + 1):
        g = disjoint_union([complete_graph(3)] * count)
        constructive = label_regular_even_general(g).profile(g).delta
        try:
            exhaustive: Optional[int] = brute_force_min_delta(g, max_edges=max_edges)
        except BudgetExceeded:
            exhaustive = None
        rows.append({
            'triangles': count,
            'n': g.n,
            'min_delta': exhaustive,
            'constructive_delta': constructive,
            'ceil_2n_3': -(-2 * g.n // 3),
        })
    return rows
