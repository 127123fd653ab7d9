"""
Command-line interface.

Every subcommand reads a graph from ``--in graph.json`` or generates
it inline from ``--family``/``--label``, and writes JSON (or DOT) to
``--out`` or standard output. Exit codes: 0 success, 1 verification
failed, 2 invalid parameters, 3 solver budget exceeded. Errors are
reported as one JSON line on standard error.
"""

import argparse
import json
import logging
import sys

from .config import load_config
from .graphs import multigraph as mg
from .graphs.identifiers import parse
from .graphs.io import (read_graph, read_coloring, write_json, write_coloring, write_decomposition,
                        write_report, write_chi)
from .graphs.utils import CaseInsensitiveDict
from .coloring.constructions import construct, theoretical_chi_tilde, THEOREMS
from .coloring.decompositions import walecki_decompose, check_decomposition
from .coloring.homogeneity import verify, count_monochromatic_vertices
from .coloring.solver import chi_tilde, all_colorings_property, BudgetExceeded
from .viz.dot import to_dot

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

def _lam(args):
    return args.lam if args.lam is not None else 1

FAMILIES = CaseInsensitiveDict({
    'complete': lambda args: mg.complete(args.n, _lam(args)),
    'bipartite': lambda args: mg.complete_bipartite(_need(args, 'm'), args.n, _lam(args)),
    'path': lambda args: mg.path(args.n),
    'cycle': lambda args: mg.cycle(args.n),
    'star': lambda args: mg.star(args.n),
    'wheel': lambda args: mg.wheel(args.n),
    'tree': lambda args: mg.random_tree(args.n, args.seed),
    'eulerian': lambda args: mg.random_eulerian(args.n, args.seed),
})

def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise mg.InvalidParameter('--%s is required here' % name)
    return value

def generate(args):
    """
    Generate the graph named by ``--family`` (with ``--n``, ``--m``,
    ``--lam``, ``--seed``) or ``--label``.
    """
    if args.label is not None:
        return mg.from_family(parse(args.label))
    if args.family not in FAMILIES:
        raise mg.InvalidParameter('unknown family: %s' % args.family)
    _need(args, 'n')
    return FAMILIES[args.family](args)

def load_graph(args):
    if args.input is not None:
        return read_graph(args.input)
    if args.family is None and args.label is None:
        raise mg.InvalidParameter('a graph is required: use --in, --family or --label')
    return generate(args)

def emit(text, args):
    if args.out is None:
        sys.stdout.write(text if text.endswith('\n') else text + '\n')
    else:
        with open(args.out, 'w') as fout:
            fout.write(text if text.endswith('\n') else text + '\n')

def cmd_generate(args, config):
    emit(write_json(load_graph(args).to_dict()), args)
    return EXIT_OK

def cmd_color(args, config):
    g = load_graph(args)
    result = construct(g, args.theorem, args.variant, budget=args.budget or config['solver']['budget'])
    emit(write_coloring(result.coloring, theorem=result.theorem, variant=result.variant), args)
    return EXIT_OK

def cmd_verify(args, config):
    g = load_graph(args)
    report = verify(g, read_coloring(_need(args, 'coloring')))
    if args.table:
        emit(report.to_dataframe().to_string(), args)
    else:
        emit(write_report(report), args)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED

def cmd_chi(args, config):
    g = load_graph(args)
    result = chi_tilde(g, budget=args.budget or config['solver']['budget'])
    expected = None
    if args.expected and g.family is not None:
        expected = theoretical_chi_tilde(g.family)
    emit(write_chi(result, expected=expected), args)
    return EXIT_OK

def cmd_decompose(args, config):
    d = walecki_decompose(_need(args, 'n'))
    ok, message = check_decomposition(d)
    if not ok:
        logging.error(f'decomposition of K_{d.n} failed: {message}')
        return EXIT_VERIFY_FAILED
    emit(write_decomposition(d), args)
    return EXIT_OK

def cmd_check_prop(args, config):
    """
    Check exhaustively that every 2-coloring of the odd cycle ``C_n``
    has an odd number of monochromatic vertices.
    """
    n = _need(args, 'n')
    if n % 2 == 0:
        raise mg.InvalidParameter('the monochromatic vertex check needs an odd cycle, got n=%d' % n)
    g = mg.cycle(n)
    holds = all_colorings_property(g, lambda g, c: count_monochromatic_vertices(g, c) % 2 == 1,
                                   m=2, max_edges=config['exhaustive']['max_edges'])
    emit(write_json({'n': n, 'colorings': 2 ** n, 'holds': holds}), args)
    return EXIT_OK if holds else EXIT_VERIFY_FAILED

def cmd_export_dot(args, config):
    g = load_graph(args)
    coloring = read_coloring(args.coloring) if args.coloring is not None else None
    emit(to_dot(g, coloring, palette=config['dot']['palette']), args)
    return EXIT_OK

COMMANDS = {
    'generate': (cmd_generate, 'generate a graph family instance as graph JSON'),
    'color': (cmd_color, 'construct a homogeneous coloring by a named result'),
    'verify': (cmd_verify, 'verify a coloring and report vertex spectra'),
    'chi': (cmd_chi, 'compute the homogeneous chromatic index exactly'),
    'decompose': (cmd_decompose, 'Hamiltonian decomposition of K_n for odd n'),
    'check-prop': (cmd_check_prop, 'exhaustive monochromatic vertex parity check on C_n'),
    'export-dot': (cmd_export_dot, 'render a graph and optional coloring as DOT'),
}

def build_parser():
    parser = argparse.ArgumentParser(prog='homcolor', description='Homogeneous edge-colorings of multigraphs')
    sub = parser.add_subparsers(dest='command')
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--in', dest='input', default=None, help='graph JSON file')
        p.add_argument('--family', default=None, help='family to generate: %s' % ', '.join(FAMILIES))
        p.add_argument('--label', default=None, help='family label, e.g. 3K7, K2,3, W5, T9s7')
        p.add_argument('--n', type=int, default=None, help='vertex count')
        p.add_argument('--m', type=int, default=None, help='size of the first part of a bipartite graph')
        p.add_argument('--lam', type=int, default=None, help='edge multiplicity')
        p.add_argument('--seed', type=int, default=0, help='random seed for trees and eulerian graphs')
        p.add_argument('--out', default=None, help='output file (default: standard output)')
        p.add_argument('--config', default=None, help='YAML configuration file')
        p.add_argument('--verbose', '-v', action='store_true', help='log debugging output')
        if name == 'color':
            p.add_argument('--theorem', default='auto', help='one of auto, %s' % ', '.join(THEOREMS))
            p.add_argument('--variant', default=None, help='construction variant, e.g. cycles, circulant, direct')
        if name in ('color', 'chi'):
            p.add_argument('--budget', type=int, default=None, help='solver node budget')
        if name in ('verify', 'export-dot'):
            p.add_argument('--coloring', default=None, help='coloring JSON file')
        if name == 'verify':
            p.add_argument('--table', action='store_true', help='print spectra as a table instead of JSON')
        if name == 'chi':
            p.add_argument('--expected', action='store_true', help='include the closed-form value')
    return parser

def report_error(e):
    sys.stderr.write(json.dumps({'error': type(e).__name__, 'message': str(e)}) + '\n')

def run(argv=None):
    """
    Run one subcommand.

    :param argv: arguments, without the program name
    :returns int: the exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(asctime)s %(levelname)s %(message)s')
    command, _ = COMMANDS[args.command]
    try:
        config = load_config(args.config)
        return command(args, config)
    except BudgetExceeded as e:
        report_error(e)
        return EXIT_BUDGET
    except (ValueError, KeyError, OSError) as e:
        report_error(e)
        return EXIT_INVALID

def main():
    sys.exit(run())

if __name__ == '__main__':
    main()
