"""
Antimagic File Formats

Readers and writers for graph files, labeling files and provenance
sidecars, plus DOT export and verification reports. Writers produce the
same bytes for the same input.
"""

import json
import logging
from pathlib import Path
from typing import Optional, Union

from antimagic_approx import Labeling
from antimagic_builder import build_graph, build_labeling, build_provenance
from antimagic_graph import Graph, ProductStructure
from antimagic_parser import GraphFileParser
from antimagic_verify import VerificationReport, compute_vertex_sums

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

_parser: Optional[GraphFileParser] = None


def _shared_parser() -> GraphFileParser:
    global _parser
    if _parser is None:
        _parser = GraphFileParser()
    return _parser


# ── Writers ─────────────────────────────────────────────────────────


def graph_to_text(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def labeling_to_text(g: Graph, lab: Labeling) -> str:
    return "".join(f"{u} {v} {lab.label_of(e)}\n" for e, (u, v) in enumerate(g.edges))


def provenance_to_text(ps: ProductStructure) -> str:
    lines = [f"f {ps.n1} {ps.n2}"]
    lines += [f"{o.kind} {o.copy} {o.source_edge}" for o in ps.origins]
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph, lab: Optional[Labeling] = None, name: str = "G") -> str:
    """Undirected DOT; with a labeling, edges carry labels and nodes their sums"""
    lines = [f"graph {name} {{"]
    if lab is None:
        lines += [f"  {v};" for v in range(g.n)]
        lines += [f"  {u} -- {v};" for u, v in g.edges]
    else:
        sums = compute_vertex_sums(g, lab).tolist()
        lines += [f'  {v} [label="{v}\\nw={sums[v]}"];' for v in range(g.n)]
        lines += [f'  {u} -- {v} [label="{lab.label_of(e)}"];' for e, (u, v) in enumerate(g.edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_to_text(report: VerificationReport) -> str:
    data = report.to_dict()
    lines = [
        f"bijection: {'yes' if data['bijection'] else 'no'}",
        f"antimagic: {'yes' if data['antimagic'] else 'no'}",
        f"delta: {data['delta']}",
        f"min_sum: {data['min_sum']}",
        f"max_sum: {data['max_sum']}",
        f"duplicate_sum_pairs: {len(data['duplicate_sum_pairs'])}",
    ]
    if data['chain_ok'] is not None:
        lines.append(f"chain: {'yes' if data['chain_ok'] else 'no'}")
    if data['gaps_ok'] is not None:
        lines.append(f"gaps: {'yes' if data['gaps_ok'] else 'no'}")
    lines += [f"violation: {v}" for v in data['violations']]
    return "\n".join(lines) + "\n"


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def format_report(report: VerificationReport, output_format: str = 'text') -> str:
    if output_format == 'json':
        return report_to_json(report)
    return report_to_text(report)


def write_text(path: PathLike, text: str):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    logger.debug("wrote %s (%d bytes)", path, len(text))


# ── Readers ─────────────────────────────────────────────────────────


def parse_graph(text: str) -> Graph:
    return build_graph(_shared_parser().parse(text, start='graph_file'))


def parse_labeling(text: str, g: Graph) -> Labeling:
    return build_labeling(_shared_parser().parse(text, start='labeling_file'), g)


def read_graph(path: PathLike) -> Graph:
    return build_graph(_shared_parser().parse_file(path, start='graph_file'))


def read_labeling(path: PathLike, g: Graph) -> Labeling:
    return build_labeling(_shared_parser().parse_file(path, start='labeling_file'), g)


def read_provenance(path: PathLike, product: Graph) -> ProductStructure:
    return build_provenance(_shared_parser().parse_file(path, start='provenance_file'), product)
