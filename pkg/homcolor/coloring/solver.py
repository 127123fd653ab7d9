"""
Exact search for homogeneous edge-colorings and the homogeneous
chromatic index.

``feasible`` is a complete backtracking search, so a negative answer
is a proof that no ``m``-homogeneous coloring exists. ``chi_tilde``
tries every ``m`` from 2 upward. Feasibility is not monotone in
``m`` (the wheel ``W_5`` is 2-feasible but not 3-feasible), so the
index cannot be found by bisection.
"""

import itertools
import logging
from collections import namedtuple

from ..graphs.multigraph import InvalidParameter
from .homogeneity import EdgeColoring, greedy_proper_coloring, is_homogeneous

DEFAULT_BUDGET = 5000000
DEFAULT_EXHAUSTIVE_EDGES = 16

class BudgetExceeded(RuntimeError):
    pass

class ExhaustiveBoundExceeded(BudgetExceeded):
    pass

FeasibilityResult = namedtuple('FeasibilityResult', ['feasible', 'witness', 'nodes_explored', 'm'])

class ChiTildeResult(namedtuple('ChiTildeResult', ['value', 'witness', 'infeasible_below', 'nodes'])):
    """
    The homogeneous chromatic index with a witness coloring and the
    smaller ``m`` values refuted by exhaustive search.
    """
    __slots__ = ()
    def to_dict(self):
        return {
            'chi_tilde': self.value,
            'witness': self.witness.to_dict(),
            'refuted': list(self.infeasible_below),
            'nodes': self.nodes,
        }

def parity_refutes(g, m):
    """
    A quick certificate of infeasibility. When every degree is a
    multiple of ``m``, each color must appear exactly ``d/m`` times at
    every vertex, so each color class has degree sum ``sum(d/m)``.
    That sum is twice the class size; if it is odd, no coloring exists.
    """
    degrees = g.degrees[1:]
    if any(d % m for d in degrees):
        return False
    return int(sum(d // m for d in degrees)) % 2 == 1

def feasible(g, m, budget=DEFAULT_BUDGET):
    """
    Decide whether ``g`` has an ``m``-homogeneous edge-coloring.

    Edges are assigned in id order. A partial assignment is pruned
    when a color count at some vertex exceeds ``ceil(d/m)``, or when
    the vertex's remaining edges cannot lift every color to
    ``floor(d/m)``. Symmetry breaking: a color ``k+1`` is tried only
    after color ``k`` has been used, and parallel edges with
    consecutive ids get non-decreasing colors. Both keep the
    lexicographically least coloring of every symmetry class.
    Colors are tried least used first at the edge's endpoints.

    :param g: the multigraph
    :param m: the number of colors, at least 2
    :param budget: the maximum number of search nodes
    :returns FeasibilityResult: with a witness when feasible
    :raises BudgetExceeded: if the search needs more than ``budget`` nodes
    """
    if m < 2:
        raise InvalidParameter('m must be >= 2, got %d' % m)
    if parity_refutes(g, m):
        logging.debug(f'm={m} refuted by color class parity')
        return FeasibilityResult(False, None, 0, m)
    edges = g.edges
    n_edges = len(edges)
    degrees = g.degrees
    lo, hi = [0] * (g.n + 1), [0] * (g.n + 1)
    for x in g.vertices():
        q, r = divmod(int(degrees[x]), m)
        lo[x], hi[x] = q, (q + 1 if r else q)
    counts = [[0] * (m + 1) for _ in range(g.n + 1)]
    remaining = [int(d) for d in degrees]
    # sum over colors of max(0, lo - count)
    deficit = [m * lo[x] for x in range(g.n + 1)]
    colors = [0] * n_edges
    same_as_previous = [i > 0 and edges[i].pair == edges[i - 1].pair for i in range(n_edges)]
    nodes = 0

    def assign(x, k):
        if counts[x][k] < lo[x]:
            deficit[x] -= 1
        counts[x][k] += 1
        remaining[x] -= 1

    def unassign(x, k):
        counts[x][k] -= 1
        remaining[x] += 1
        if counts[x][k] < lo[x]:
            deficit[x] += 1

    def search(i, max_used):
        nonlocal nodes
        if i == n_edges:
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded('search for m=%d exceeded %d nodes' % (m, budget))
        e = edges[i]
        u, v = e.u, e.v
        first = colors[i - 1] if same_as_previous[i] else 1
        candidates = [k for k in range(first, min(m, max_used + 1) + 1)
                      if counts[u][k] < hi[u] and counts[v][k] < hi[v]]
        # least used at both endpoints first
        candidates.sort(key=lambda k: counts[u][k] + counts[v][k])
        for k in candidates:
            assign(u, k)
            assign(v, k)
            if deficit[u] <= remaining[u] and deficit[v] <= remaining[v]:
                colors[i] = k
                if search(i + 1, max(max_used, k)):
                    return True
            unassign(u, k)
            unassign(v, k)
        colors[i] = 0
        return False

    found = search(0, 0)
    logging.debug(f'm={m}: {"feasible" if found else "infeasible"} after {nodes} nodes')
    witness = EdgeColoring(m, colors) if found else None
    return FeasibilityResult(found, witness, nodes, m)

def chi_tilde(g, budget=DEFAULT_BUDGET):
    """
    Compute the homogeneous chromatic index of ``g``.

    A greedy proper coloring with ``M`` colors is homogeneous for
    ``m = M``, so every ``m`` in ``2..M-1`` is searched and ``M`` is the
    fallback answer with the greedy coloring as witness.

    :param g: a multigraph with at least one edge
    :param budget: node budget for each single-``m`` search
    :returns ChiTildeResult: the index, a witness and the refuted ``m``
    """
    if g.n_edges == 0:
        raise InvalidParameter('homogeneous chromatic index is undefined for an edgeless graph')
    upper = greedy_proper_coloring(g)
    logging.info(f'{g!r}: greedy proper coloring gives upper bound {upper.m}')
    refuted, nodes = [], 0
    for m in range(2, upper.m):
        result = feasible(g, m, budget=budget)
        nodes += result.nodes_explored
        if result.feasible:
            return ChiTildeResult(m, result.witness, refuted, nodes)
        logging.info(f'{g!r}: no {m}-homogeneous coloring')
        refuted.append(m)
    return ChiTildeResult(upper.m, upper, refuted, nodes)

def _all_colorings(g, m, max_edges):
    if g.n_edges > max_edges:
        raise ExhaustiveBoundExceeded('exhaustive enumeration limited to %d edges, graph has %d' % (max_edges, g.n_edges))
    return itertools.product(range(1, m + 1), repeat=g.n_edges)

def all_colorings_property(g, predicate, m=2, max_edges=DEFAULT_EXHAUSTIVE_EDGES):
    """
    Evaluate ``predicate(g, coloring)`` on every ``m``-coloring of
    the edges of ``g``.

    :returns bool: whether the predicate holds for all of them
    :raises ExhaustiveBoundExceeded: if ``g`` has more than ``max_edges`` edges
    """
    for colors in _all_colorings(g, m, max_edges):
        if not predicate(g, EdgeColoring(m, colors)):
            logging.debug(f'predicate fails for coloring {colors}')
            return False
    return True

def naive_feasible(g, m, max_edges=DEFAULT_EXHAUSTIVE_EDGES):
    """
    Decide ``m``-feasibility by plain enumeration of all ``m**|E|``
    colorings. Only for checking ``feasible`` on small graphs.
    """
    return any(is_homogeneous(g, colors, m) for colors in _all_colorings(g, m, max_edges))
