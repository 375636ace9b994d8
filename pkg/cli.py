#!/usr/bin/env python3
"""
Antimagic Toolkit CLI

Command-line interface for generating graphs and products, labeling them,
and verifying labelings.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / 'src'))

from antimagic_approx import LabelingError, approx_magic_bound, label_regular, within_bound
from antimagic_config import (
    DISPATCH_BRUTE_FORCE_MAX_EDGES,
    EXIT_BAD_INPUT,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    EXIT_VERIFICATION_FAILED,
    FAMILIES,
    LABEL_MODES,
    OUTPUT_FORMATS,
    RunConfig,
)
from antimagic_decomposition import (
    DecompositionError,
    decompose_odd_regular,
    even_circuit_decomposition,
)
from antimagic_formats import (
    format_report,
    graph_to_dot,
    graph_to_text,
    labeling_to_text,
    provenance_to_text,
    read_graph,
    read_labeling,
    read_provenance,
    write_text,
)
from antimagic_graph import GraphError, cartesian_product, gen_family
from antimagic_parser import FormatError
from antimagic_product import ProductError, iterated_product
from antimagic_verify import (
    BudgetExceeded,
    VerificationError,
    brute_force_antimagic,
    infer_chain_context,
    triangle_experiment,
    verify,
)

logger = logging.getLogger('antimagic.cli')


class ToolkitArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the bad-input exit code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD_INPUT, f"{self.prog}: error: {message}\n")


def sidecar_path(path: Path, suffix: str) -> Path:
    return path.with_name(path.name + suffix)


class Console:
    """Status lines go to stderr whenever stdout carries the command's data"""

    def __init__(self, config: RunConfig):
        self.stream = sys.stdout if config.output else sys.stderr

    def ok(self, message: str):
        print(f"✓ {message}", file=self.stream)

    def fail(self, message: str):
        print(f"✗ {message}", file=sys.stderr)


def emit(config: RunConfig, text: str):
    if config.output:
        write_text(config.output, text)
    else:
        sys.stdout.write(text)


# ── Commands ────────────────────────────────────────────────────────


def cmd_gen(config: RunConfig, console: Console) -> int:
    family = config.family.replace('-', '_')
    if family == 'disjoint_union':
        g = gen_family(family, [read_graph(p) for p in config.params])
    else:
        g = gen_family(family, *config.params, seed=config.seed)
    emit(config, graph_to_text(g))
    console.ok(f"{config.family}: {g.n} vertices, {g.m} edges")
    return EXIT_OK


def cmd_product(config: RunConfig, console: Console) -> int:
    g1, g2 = (read_graph(p) for p in config.inputs)
    ps = cartesian_product(g1, g2)
    write_text(config.output, graph_to_text(ps.product))
    write_text(sidecar_path(config.output, '.prov'), provenance_to_text(ps))
    console.ok(f"Product written to {config.output} ({ps.product.n} vertices, {ps.product.m} edges)")
    console.ok(f"Provenance written to {sidecar_path(config.output, '.prov')}")
    return EXIT_OK


def cmd_label(config: RunConfig, console: Console) -> int:
    graphs = [read_graph(p) for p in config.inputs]

    if config.mode == 'antimagic-product':
        if len(graphs) < 2:
            raise ProductError("antimagic-product needs at least two factor files")
        ps, labeling = iterated_product(graphs, config.budget)
        g = ps.product
        report = verify(g, labeling)
        emit(config, labeling_to_text(g, labeling))
        if config.output:
            write_text(sidecar_path(config.output, '.graph'), graph_to_text(g))
            # block and exhaustive labelings need not follow any product chain
            if infer_chain_context(ps, labeling) is not None:
                write_text(sidecar_path(config.output, '.prov'), provenance_to_text(ps))
            else:
                console.ok(f"No product chain in this labeling; "
                           f"{sidecar_path(config.output, '.prov')} not written")
        if not (report.is_bijection and report.is_antimagic):
            console.fail(f"Product labeling failed verification: {'; '.join(report.violations)}")
            return EXIT_VERIFICATION_FAILED
        console.ok(f"Antimagic labeling of a {g.n}-vertex, {g.m}-edge product (delta {report.delta})")
        return EXIT_OK

    if len(graphs) != 1:
        raise GraphError(f"--mode {config.mode} takes exactly one graph file")
    g = graphs[0]

    if config.mode == 'brute':
        result = brute_force_antimagic(g, max_edges=config.budget)
        if not result.antimagic:
            console.fail(f"No antimagic labeling exists ({result.nodes} search nodes)")
            return EXIT_VERIFICATION_FAILED
        emit(config, labeling_to_text(g, result.labeling))
        console.ok(f"Antimagic labeling found after {result.nodes} search nodes")
        return EXIT_OK

    labeling = label_regular(g)
    delta = labeling.profile(g).delta
    bound = approx_magic_bound(g.n, g.regular_degree(), g.is_connected())
    emit(config, labeling_to_text(g, labeling))
    if not within_bound(delta, bound):
        console.fail(f"delta {delta} exceeds the bound {bound}")
        return EXIT_VERIFICATION_FAILED
    console.ok(f"{delta}-approximately magic labeling (bound {bound})")
    return EXIT_OK


def cmd_verify(config: RunConfig, console: Console) -> int:
    g = read_graph(config.inputs[0])
    labeling = read_labeling(config.labeling, g)
    ps = read_provenance(config.provenance, g) if config.provenance else None

    report = verify(g, labeling, ps)
    emit(config, format_report(report, config.output_format))
    if not report.passed:
        console.fail("Verification failed")
        return EXIT_VERIFICATION_FAILED
    console.ok("Verification passed")
    return EXIT_OK


def cmd_export_dot(config: RunConfig, console: Console) -> int:
    g = read_graph(config.inputs[0])
    labeling = read_labeling(config.labeling, g) if config.labeling else None
    emit(config, graph_to_dot(g, labeling))
    console.ok(f"DOT export of {g.n} vertices, {g.m} edges")
    return EXIT_OK


def cmd_decompose(config: RunConfig, console: Console) -> int:
    g = read_graph(config.inputs[0])
    if any(d % 2 for d in g.degree_sequence()):
        td = decompose_odd_regular(g)
        lines = [" ".join(map(str, t.edge_seq)) for t in td.trails]
        summary = f"{len(td.trails)} trails"
    else:
        cd = even_circuit_decomposition(g)
        lines = [" ".join(map(str, c.edge_seq)) for c in cd.even_circuits]
        lines.append("# odd cycles")
        lines += [" ".join(map(str, q.edge_seq)) for q in cd.odd_cycles]
        summary = f"{len(cd.even_circuits)} even circuits, {len(cd.odd_cycles)} odd cycles"
    emit(config, "\n".join(lines) + "\n")
    console.ok(summary)
    return EXIT_OK


def cmd_experiment(config: RunConfig, console: Console) -> int:
    max_triangles = int(config.params[0]) if config.params else 2
    rows = triangle_experiment(max_triangles)
    if config.output_format == 'json':
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["triangles n min_delta constructive_delta ceil_2n_3"]
        for row in rows:
            exhaustive = '-' if row['min_delta'] is None else row['min_delta']
            lines.append(f"{row['triangles']} {row['n']} {exhaustive} "
                         f"{row['constructive_delta']} {row['ceil_2n_3']}")
        text = "\n".join(lines) + "\n"
    emit(config, text)
    console.ok(f"Triangle experiment over {len(rows)} sizes")
    return EXIT_OK


COMMANDS = {
    'gen': cmd_gen,
    'product': cmd_product,
    'label': cmd_label,
    'verify': cmd_verify,
    'export-dot': cmd_export_dot,
    'decompose': cmd_decompose,
    'experiment': cmd_experiment,
}


def build_parser() -> argparse.ArgumentParser:
    parser = ToolkitArgumentParser(
        description='Antimagic and approximately magic graph labeling toolkit',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='''
Examples:
  %(prog)s gen complete 4 -o k4.graph
  %(prog)s gen random-regular 10 3 --seed 7 -o r.graph
  %(prog)s product k4.graph k2.graph -o k4k2.graph
  %(prog)s label --mode approx-magic k4.graph -o k4.lab
  %(prog)s label --mode antimagic-product k4.graph k2.graph -o k4k2.lab
  %(prog)s verify k4k2.lab.graph k4k2.lab --provenance k4k2.lab.prov --format json
  %(prog)s export-dot c5.graph c5.lab

Exit codes: 0 success, 1 verification failed, 2 unsupported case, 3 bad input
'''
    )
    parser.add_argument('-v', '--verbose', action='store_true', help='Debug logging')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=ToolkitArgumentParser)

    gen = sub.add_parser('gen', help='Generate a graph family member')
    gen.add_argument('family', help=f"One of {', '.join(f.replace('_', '-') for f in FAMILIES)}")
    gen.add_argument('params', nargs='*', help='Family parameters (graph files for disjoint-union)')
    gen.add_argument('--seed', type=int, default=0, help='Seed for random-regular')
    gen.add_argument('-o', '--output', help='Output graph file (default stdout)')

    product = sub.add_parser('product', help='Cartesian product of two graph files')
    product.add_argument('inputs', nargs=2, metavar='GRAPH')
    product.add_argument('-o', '--output', required=True,
                         help='Product graph file; provenance goes to OUTPUT.prov')

    label = sub.add_parser('label', help='Label a graph or a product of graphs')
    label.add_argument('inputs', nargs='+', metavar='GRAPH')
    label.add_argument('--mode', choices=LABEL_MODES, default='approx-magic')
    label.add_argument('--budget', type=int, default=DISPATCH_BRUTE_FORCE_MAX_EDGES,
                       help='Largest edge count for exhaustive search')
    label.add_argument('-o', '--output',
                       help='Labeling file; product mode adds OUTPUT.graph and OUTPUT.prov')

    ver = sub.add_parser('verify', help='Check a labeling')
    ver.add_argument('graph')
    ver.add_argument('labeling')
    ver.add_argument('--provenance', help='Product provenance sidecar; enables the chain check')
    ver.add_argument('--format', choices=OUTPUT_FORMATS, default='text')
    ver.add_argument('-o', '--output', help='Report file (default stdout)')

    dot = sub.add_parser('export-dot', help='Graphviz DOT export')
    dot.add_argument('graph')
    dot.add_argument('labeling', nargs='?')
    dot.add_argument('-o', '--output')

    dec = sub.add_parser('decompose', help='Print the trail or circuit decomposition')
    dec.add_argument('inputs', nargs=1, metavar='GRAPH')
    dec.add_argument('-o', '--output')

    exp = sub.add_parser('experiment', help='Minimum delta of disjoint triangles')
    exp.add_argument('params', nargs='?', type=str, default=None, metavar='MAX_TRIANGLES')
    exp.add_argument('--format', choices=OUTPUT_FORMATS, default='text')
    exp.add_argument('-o', '--output')

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == 'experiment':
        args.params = [args.params] if args.params else []

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
    )

    try:
        config = RunConfig.from_args(args)
    except ValueError as e:
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_BAD_INPUT

    console = Console(config)
    logger.debug("running %s", config)
    try:
        return COMMANDS[config.command](config, console)
    except (ProductError, LabelingError, DecompositionError, BudgetExceeded) as e:
        console.fail(f"Unsupported: {e}")
        return EXIT_UNSUPPORTED
    except (GraphError, FormatError, VerificationError, OSError, ValueError) as e:
        console.fail(f"Bad input: {e}")
        return EXIT_BAD_INPUT


if __name__ == '__main__':
    sys.exit(main())
