"""
Utilities for reading and writing graphs, colorings, decompositions
and reports as JSON.

All formats use 1-based vertex labels and list edges (and colors)
by edge id.
"""
import json

from .multigraph import Multigraph

def read_json(path):
    with open(path) as fin:
        return json.load(fin)

def write_json(obj, path=None):
    """
    Serialize to a file, or return the JSON text if no
    path is given.
    """
    text = json.dumps(obj, sort_keys=True)
    if path is None:
        return text
    with open(path, 'w') as fout:
        fout.write(text + '\n')
    return text

def read_graph(path):
    """
    Read a multigraph from a graph JSON file.
    """
    return Multigraph.from_dict(read_json(path))

def write_graph(g, path=None):
    return write_json(g.to_dict(), path)

def read_coloring(path):
    """
    Read an edge coloring. Theorem/variant metadata, if present,
    is ignored here.
    """
    from ..coloring.homogeneity import EdgeColoring
    return EdgeColoring.from_dict(read_json(path))

def write_coloring(coloring, path=None, theorem=None, variant=None):
    d = coloring.to_dict()
    if theorem is not None:
        d['theorem'] = theorem
        d['variant'] = variant
    return write_json(d, path)

def read_decomposition(path):
    from ..coloring.decompositions import HamiltonianDecomposition
    return HamiltonianDecomposition.from_dict(read_json(path))

def write_decomposition(decomposition, path=None):
    return write_json(decomposition.to_dict(), path)

def write_report(report, path=None):
    """
    Write a ``HomogeneityReport`` with its vertex spectra.
    """
    return write_json(report.to_dict(), path)

def write_chi(result, path=None, expected=None):
    d = result.to_dict()
    if expected is not None:
        d['expected'] = expected
    return write_json(d, path)
