"""
Closed-form homogeneous edge-colorings of the classical families.

Every constructor returns a ``ConstructionResult`` whose coloring
passes ``homogeneity.verify`` on the graph it was built for. Colorings
are given by rules on 1-based vertex labels ``x_i``.
"""

import heapq
import logging
from collections import namedtuple

from ..graphs import multigraph as mg
from ..graphs.multigraph import InvalidParameter, NotATree, NotEulerian
from ..graphs.utils import CaseInsensitiveDict
from .decompositions import walecki_decompose, cycle_edges
from .homogeneity import EdgeColoring, cycle_permutation, permute_colors

# theorem tags
COMPLETE_EVEN = 'complete-even'
COMPLETE_1MOD4 = 'complete-1mod4'
COMPLETE_3MOD4 = 'complete-3mod4'
LAMBDA_COMPLETE = 'lambda-complete'
TREE = 'tree'
BIPARTITE = 'bipartite'
WHEEL = 'wheel'
PATH = 'path'
CYCLE = 'cycle'
STAR = 'star'
EULERIAN = 'eulerian'

# variant tags
PARITY = 'parity'
CYCLES = 'cycles'
CIRCULANT = 'circulant'
DIRECT = 'direct'
ALTERNATING = 'alternating'
SEARCH = 'search'

class ConstructionResult(namedtuple('ConstructionResult', ['coloring', 'theorem', 'variant', 'graph'])):
    """
    A coloring together with the result that produced it and the
    graph it colors.
    """
    __slots__ = ()
    @property
    def m(self):
        return self.coloring.m
    def to_dict(self):
        d = self.coloring.to_dict()
        d['theorem'] = self.theorem
        d['variant'] = self.variant
        return d

class NoColoringFound(InvalidParameter):
    """
    Raised when an exhaustive search proves no coloring exists.
    """

def color_by_rule(g, m, rule):
    """
    Color every edge of ``g`` by ``rule(edge)``.
    """
    return EdgeColoring(m, [rule(e) for e in g.edges])

def cyclic_distance(i, j, n):
    d = (j - i) % n
    return min(d, n - d)

# complete graphs

def _parity_rule(e):
    return 1 if (e.u + e.v) % 2 == 1 else 2

def color_complete_even(n):
    """
    ``K_n`` for even ``n >= 4``: ``{x_i, x_j}`` gets 1 when ``i+j`` is
    odd and 2 otherwise. Each vertex sees ``n/2`` edges of color 1
    and ``n/2 - 1`` of color 2.
    """
    if n < 4 or n % 2:
        raise InvalidParameter('parity coloring needs even n >= 4, got %d' % n)
    g = mg.complete(n)
    return ConstructionResult(color_by_rule(g, 2, _parity_rule), COMPLETE_EVEN, PARITY, g)

def _circulant_rule(n, bands):
    """
    Color by cyclic distance: ``bands`` lists the largest distance of
    each color class, in color order.
    """
    def rule(e):
        d = cyclic_distance(e.u, e.v, n)
        for k, top in enumerate(bands):
            if d <= top:
                return k + 1
        return len(bands)
    return rule

def _color_cycles(g, decomposition, colors_of_cycle):
    """
    Color whole Hamiltonian cycles; ``colors_of_cycle(t, edge_ids)``
    returns the colors of the edges of cycle ``t`` in edge order.
    """
    colors = [0] * g.n_edges
    for t, cy in enumerate(decomposition.cycles):
        ids = cycle_edges(g, cy)
        for edge_id, k in zip(ids, colors_of_cycle(t, ids)):
            colors[edge_id] = k
    return colors

def color_complete_1mod4(n, variant=CIRCULANT):
    """
    ``K_n`` for ``n = 4h+1``, with two colors.

    * ``cycles``: the first ``(n-1)/4`` Walecki cycles get color 1,
      the rest color 2.
    * ``circulant``: ``{x_i, x_j}`` gets 1 when the cyclic distance of
      ``i`` and ``j`` is at most ``h``, else 2.
    """
    if n < 5 or n % 4 != 1:
        raise InvalidParameter('n must be >= 5 and 1 mod 4, got %d' % n)
    g = mg.complete(n)
    h = (n - 1) // 4
    if variant == CYCLES:
        d = walecki_decompose(n)
        colors = _color_cycles(g, d, lambda t, ids: [1 if t < h else 2] * len(ids))
        coloring = EdgeColoring(2, colors)
    elif variant == CIRCULANT:
        coloring = color_by_rule(g, 2, _circulant_rule(n, [h, 2 * h]))
    else:
        raise InvalidParameter('unknown variant for n = 1 mod 4: %s' % variant)
    return ConstructionResult(coloring, COMPLETE_1MOD4, variant, g)

def _mod3_rule(n):
    """
    ``{x_i, x_j}`` colored by ``i+j mod 3`` (2 -> 1, 1 -> 2, 0 -> 3).
    """
    by_residue = {2: 1, 1: 2, 0: 3}
    def rule(e):
        return by_residue[(e.u + e.v) % 3]
    return rule

def _mod3_with_apex_rule(n):
    """
    The ``n = 12h+11`` coloring: ``i+j mod 3`` on ``x_1..x_{n-1}``;
    edges at ``x_n`` colored by the other endpoint's residue
    (1 -> 1, 2 -> 2, 0 -> 3).
    """
    base = _mod3_rule(n)
    by_residue = {1: 1, 2: 2, 0: 3}
    def rule(e):
        if e.v == n:
            return by_residue[e.u % 3]
        return base(e)
    return rule

def default_variant_3mod4(n):
    return CIRCULANT if n % 12 == 7 else DIRECT

def color_complete_3mod4(n, variant=None):
    """
    ``K_n`` for ``n = 4k+3``, with three colors. Dispatches on
    ``n mod 12``:

    * ``12h+7``: ``cycles`` (``(n-1)/6`` Walecki cycles per color) or
      ``circulant`` (distances ``1..2h+1``, ``2h+2..4h+2``,
      ``4h+3..6h+3`` get colors 1, 2, 3). Every count is ``(n-1)/3``.
    * ``12h+11``: ``direct`` only. Counts ``4h+4, 4h+3, 4h+3``.
    * ``12h+3``: ``direct`` (``i+j mod 3``) or ``cycles`` (``2h``
      cycles per color, the last cycle ``1, 2, ..., 1, 2, 3``, needs
      ``n >= 15``). Counts ``4h, 4h+1, 4h+1``.

    :param variant: None for the default (``circulant`` for ``12h+7``,
      else ``direct``)
    """
    if n < 3 or n % 4 != 3:
        raise InvalidParameter('n must be >= 3 and 3 mod 4, got %d' % n)
    if variant is None:
        variant = default_variant_3mod4(n)
    g = mg.complete(n)
    residue = n % 12
    if residue == 7 and variant == CIRCULANT:
        h = (n - 7) // 12
        coloring = color_by_rule(g, 3, _circulant_rule(n, [2 * h + 1, 4 * h + 2, 6 * h + 3]))
    elif residue == 7 and variant == CYCLES:
        per_color = (n - 1) // 6
        colors = _color_cycles(g, walecki_decompose(n), lambda t, ids: [t // per_color + 1] * len(ids))
        coloring = EdgeColoring(3, colors)
    elif residue == 11 and variant == DIRECT:
        coloring = color_by_rule(g, 3, _mod3_with_apex_rule(n))
    elif residue == 3 and variant == DIRECT:
        coloring = color_by_rule(g, 3, _mod3_rule(n))
    elif residue == 3 and variant == CYCLES:
        if n < 15:
            raise InvalidParameter('cycle coloring needs n >= 15 for n = 12h+3, got %d' % n)
        d = walecki_decompose(n)
        last = len(d.cycles) - 1
        per_color = last // 3
        def colors_of_cycle(t, ids):
            if t < last:
                return [t // per_color + 1] * len(ids)
            # 1, 2, 1, 2, ..., 1, 2, 3 along the last cycle
            return [1 + s % 2 for s in range(len(ids) - 1)] + [3]
        coloring = EdgeColoring(3, _color_cycles(g, d, colors_of_cycle))
    else:
        raise InvalidParameter('variant %s is not available for n = %d (n mod 12 = %d)' % (variant, n, residue))
    return ConstructionResult(coloring, COMPLETE_3MOD4, variant, g)

def color_complete(n):
    """
    A coloring of ``K_n`` with ``m`` equal to its homogeneous chromatic
    index, choosing the result that covers ``n``.
    """
    if n == 2:
        g = mg.complete(2)
        return ConstructionResult(color_by_rule(g, 2, _parity_rule), COMPLETE_EVEN, PARITY, g)
    if n % 2 == 0:
        return color_complete_even(n)
    if n % 4 == 1:
        return color_complete_1mod4(n)
    return color_complete_3mod4(n)

def color_lambda_complete(n, lam):
    """
    ``lam K_n``. Two colors unless ``lam`` is odd and ``n = 3 mod 4``.

    * ``n`` even: the parity coloring on ``floor(lam/2)`` copies and its
      1/2 swap on the other ``ceil(lam/2)``.
    * ``n = 1 mod 4``: the circulant coloring on every copy.
    * ``lam`` even, ``n = 3 mod 4``: half the copies all 1, half all 2.
    * ``lam`` odd, ``n = 3 mod 4``: the three-color coloring ``c`` of
      ``K_n`` and its relabelings by ``(1 3 2)`` and ``(1 2 3)``, on
      ``ceil``-first shares of ``lam`` copies.

    A single copy delegates to ``color_complete``.
    """
    if n < 2 or lam < 1:
        raise InvalidParameter('need n >= 2 and lambda >= 1, got n=%d, lambda=%d' % (n, lam))
    if lam == 1:
        base = color_complete(n)
        return ConstructionResult(base.coloring, LAMBDA_COMPLETE, base.variant, base.graph)
    g = mg.complete(n, lam)
    if n % 2 == 0:
        # copy k uses the parity coloring if k is odd, the swap if even
        def rule(e):
            k = _parity_rule(e)
            return k if e.copy % 2 == 1 else 3 - k
        coloring = color_by_rule(g, 2, rule)
        variant = PARITY
    elif n % 4 == 1:
        base = color_complete_1mod4(n)
        coloring = _replicate(g, base, [base.coloring] * lam)
        variant = base.variant
    elif lam % 2 == 0:
        coloring = color_by_rule(g, 2, lambda e: 1 if e.copy < lam // 2 else 2)
        variant = 'halves'
    else:
        base = color_complete_3mod4(n)
        c = base.coloring
        c132 = permute_colors(c, cycle_permutation(1, 3, 2))
        c123 = permute_colors(c, cycle_permutation(1, 2, 3))
        third, extra = divmod(lam, 3)
        shares = [third + (1 if extra >= 1 else 0), third + (1 if extra >= 2 else 0), third]
        copies = [c] * shares[0] + [c132] * shares[1] + [c123] * shares[2]
        coloring = _replicate(g, base, copies)
        variant = 'permuted-' + base.variant
    logging.debug(f'{lam}K_{n}: {coloring.m} colors, variant {variant}')
    return ConstructionResult(coloring, LAMBDA_COMPLETE, variant, g)

def _replicate(g, base, copies):
    """
    Color copy ``k`` of each edge of ``g`` like the matching edge of
    ``base.graph`` under ``copies[k]``.
    """
    m = max(c.m for c in copies)
    def rule(e):
        single = base.graph.edge_between(e.u, e.v)
        return copies[e.copy][single.id]
    return color_by_rule(g, m, rule)

# trees

def color_tree(g):
    """
    Two-color a tree by peeling leaves. Leaves are removed (largest
    label first) until one edge remains; that edge gets color 1. The
    leaves are then restored in reverse order, each edge taking the
    color less used so far at its inner endpoint (1 on ties).
    """
    if g.n < 2 or not mg.is_tree(g):
        raise NotATree('%r is not a tree with at least 2 vertices' % g)
    degree = [len(g.incident_edges(x)) if x else 0 for x in range(g.n + 1)]
    removed_edge = [False] * g.n_edges
    leaves = [-x for x in g.vertices() if degree[x] == 1]
    heapq.heapify(leaves)
    alive = g.n
    stack = []
    while alive > 2:
        x = -heapq.heappop(leaves)
        e = next(f for f in g.incident_edges(x) if not removed_edge[f.id])
        p = e.other(x)
        removed_edge[e.id] = True
        degree[x] -= 1
        degree[p] -= 1
        alive -= 1
        stack.append((e, p))
        if degree[p] == 1:
            heapq.heappush(leaves, -p)
    colors = [0] * g.n_edges
    counts = [[0, 0, 0] for _ in range(g.n + 1)]
    base = next(e for e in g.edges if not removed_edge[e.id])
    colors[base.id] = 1
    counts[base.u][1] += 1
    counts[base.v][1] += 1
    for e, p in reversed(stack):
        k = 1 if counts[p][1] <= counts[p][2] else 2
        colors[e.id] = k
        counts[p][k] += 1
        counts[e.other(p)][k] += 1
    return ConstructionResult(EdgeColoring(2, colors), TREE, 'leaf-peeling', g)

# bipartite

def color_complete_bipartite(m_part, n_part, lam=1):
    """
    ``lam K_{m,n}``: the edge between the ``i``-th vertex of the first
    part and the ``j``-th of the second gets 1 when ``i+j`` is even and
    2 otherwise. Copy ``k`` keeps this coloring for even ``k`` and
    swaps 1 and 2 for odd ``k``.
    """
    g = mg.complete_bipartite(m_part, n_part, lam)
    def rule(e):
        i, j = e.u, e.v - m_part
        k = 1 if (i + j) % 2 == 0 else 2
        return k if e.copy % 2 == 0 else 3 - k
    return ConstructionResult(color_by_rule(g, 2, rule), BIPARTITE, PARITY, g)

# paths, cycles, stars, wheels

def color_path(n):
    g = mg.path(n)
    return ConstructionResult(color_by_rule(g, 2, lambda e: 1 + e.id % 2), PATH, ALTERNATING, g)

def color_cycle(n):
    """
    Even cycles alternate 1, 2. Odd cycles need three colors:
    ``1, 2, ..., 1, 2, 3`` in edge order.
    """
    g = mg.cycle(n)
    if n % 2 == 0:
        coloring = color_by_rule(g, 2, lambda e: 1 + e.id % 2)
    else:
        coloring = color_by_rule(g, 3, lambda e: 3 if e.id == n - 1 else 1 + e.id % 2)
    return ConstructionResult(coloring, CYCLE, ALTERNATING, g)

def color_star(n):
    g = mg.star(n)
    return ConstructionResult(color_by_rule(g, 2, lambda e: 1 + e.id % 2), STAR, ALTERNATING, g)

def color_wheel(n):
    """
    ``W_n`` with hub ``x_1``:

    * spoke ``{x_1, x_i}``: 1 if ``i`` is even, else 2
    * rim edge ``{x_i, x_{i+1}}``: 1 if ``i`` is odd, else 2
    * closing edge ``{x_n, x_2}``: 1 if ``n`` is odd, else 2

    At ``x_n`` the spoke and the rim edge ``{x_{n-1}, x_n}`` share a
    color, so the closing edge takes the other one.
    """
    g = mg.wheel(n)
    def rule(e):
        if e.u == 1:
            return 1 if e.v % 2 == 0 else 2
        if (e.u, e.v) == (2, n):
            return 1 if n % 2 == 1 else 2
        return 1 if e.u % 2 == 1 else 2
    return ConstructionResult(color_by_rule(g, 2, rule), WHEEL, PARITY, g)

# eulerian graphs

def color_eulerian(g, budget=None):
    """
    A ``Delta/2``-homogeneous coloring of an eulerian multigraph, found
    by exhaustive search. Regular eulerian multigraphs always have one.
    Irregular ones may not: a triangle and a 4-cycle sharing a vertex
    has none, and neither has a triangle with its edge ``{1,2}``
    tripled. Those raise ``NoColoringFound``.
    """
    from .solver import feasible, DEFAULT_BUDGET
    if not mg.is_eulerian(g):
        raise NotEulerian('%r is not eulerian' % g)
    delta = g.max_degree()
    if delta < 4:
        raise InvalidParameter('eulerian coloring needs max degree >= 4 (m >= 2), got %d' % delta)
    result = feasible(g, delta // 2, budget=budget or DEFAULT_BUDGET)
    if not result.feasible:
        raise NoColoringFound('no %d-homogeneous coloring found for eulerian %r' % (delta // 2, g))
    return ConstructionResult(result.witness, EULERIAN, SEARCH, g)

# dispatch

def _complete_from_spec(spec, variant):
    n, lam = spec.params
    if lam != 1:
        return color_lambda_complete(n, lam)
    if variant is None:
        return color_complete(n)
    if n % 4 == 1:
        return color_complete_1mod4(n, variant)
    if n % 4 == 3:
        return color_complete_3mod4(n, variant)
    return color_complete_even(n)

def _expect(kinds):
    def check(spec):
        if spec is None or spec.kind not in kinds:
            raise InvalidParameter('theorem needs a %s family, got %s' % (' or '.join(kinds), spec.kind if spec else None))
        return spec.params
    return check

def _by_spec(kinds, build):
    check = _expect(kinds)
    def construct_from(g, spec, variant, budget):
        return build(*check(spec)) if variant is None else build(*check(spec), variant)
    return construct_from

THEOREMS = CaseInsensitiveDict({
    COMPLETE_EVEN: _by_spec([mg.COMPLETE], lambda n, lam, *v: color_complete_even(n)),
    COMPLETE_1MOD4: _by_spec([mg.COMPLETE], lambda n, lam, *v: color_complete_1mod4(n, *v)),
    COMPLETE_3MOD4: _by_spec([mg.COMPLETE], lambda n, lam, *v: color_complete_3mod4(n, *v)),
    LAMBDA_COMPLETE: _by_spec([mg.COMPLETE], lambda n, lam, *v: color_lambda_complete(n, lam)),
    BIPARTITE: _by_spec([mg.COMPLETE_BIPARTITE], lambda m, n, lam, *v: color_complete_bipartite(m, n, lam)),
    WHEEL: _by_spec([mg.WHEEL], lambda n, *v: color_wheel(n)),
    PATH: _by_spec([mg.PATH], lambda n, *v: color_path(n)),
    CYCLE: _by_spec([mg.CYCLE], lambda n, *v: color_cycle(n)),
    STAR: _by_spec([mg.STAR], lambda n, *v: color_star(n)),
    TREE: lambda g, spec, variant, budget: color_tree(g),
    EULERIAN: lambda g, spec, variant, budget: color_eulerian(g, budget),
})

AUTO_THEOREM = {
    mg.COMPLETE_BIPARTITE: BIPARTITE,
    mg.WHEEL: WHEEL,
    mg.PATH: PATH,
    mg.CYCLE: CYCLE,
    mg.STAR: STAR,
    mg.TREE: TREE,
}

def construct(g, theorem='auto', variant=None, budget=None):
    """
    Build the coloring of ``g`` given by a named result.

    :param g: the multigraph; its ``family`` selects the parameters
    :param theorem: a key of ``THEOREMS``, or ``'auto'`` to pick the
      result covering the graph's family (eulerian search for custom
      graphs)
    :param variant: optional variant tag; a tag the chosen result
      does not build raises ``InvalidParameter``
    :returns ConstructionResult: the coloring, checked to match ``g``
    """
    spec = g.family
    if theorem == 'auto':
        if spec is not None and spec.kind == mg.COMPLETE:
            result = _complete_from_spec(spec, variant)
        elif spec is not None and spec.kind in AUTO_THEOREM:
            result = THEOREMS[AUTO_THEOREM[spec.kind]](g, spec, variant, budget)
        else:
            result = color_eulerian(g, budget)
    elif theorem not in THEOREMS:
        raise InvalidParameter('unknown theorem: %s' % theorem)
    else:
        result = THEOREMS[theorem](g, spec, variant, budget)
    if result.graph != g:
        raise InvalidParameter('%s coloring was built for %r, not %r' % (result.theorem, result.graph, g))
    if variant is not None and result.variant != variant:
        raise InvalidParameter('%s has no variant %s (it builds %s)' % (result.theorem, variant, result.variant))
    logging.info(f'{g!r}: {result.theorem} ({result.variant}) coloring with m={result.m}')
    return result

def theoretical_chi_tilde(spec):
    """
    The homogeneous chromatic index of a family instance, by the
    closed-form results, or None for custom graphs.
    """
    p = spec.params
    if spec.kind == mg.COMPLETE:
        n, lam = p
        return 3 if lam % 2 == 1 and n % 4 == 3 else 2
    if spec.kind == mg.CYCLE:
        return 2 if p[0] % 2 == 0 else 3
    if spec.kind in (mg.COMPLETE_BIPARTITE, mg.PATH, mg.STAR, mg.WHEEL, mg.TREE):
        return 2
    return None
