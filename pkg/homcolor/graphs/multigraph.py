"""
Loopless multigraphs and deterministic generators for the graph
families whose homogeneous chromatic index is known in closed form.

Vertices are 1-based (``x_1, ..., x_n``). Parallel edges are distinct
``Edge`` objects distinguished by a ``copy`` counter, so that colorings
address every copy individually.
"""

import heapq
import logging
from collections import namedtuple

import numpy as np
import pandas as pd
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .utils import CaseInsensitiveDict

class InvalidParameter(ValueError):
    pass

class UnknownVertex(KeyError):
    pass

class NotATree(InvalidParameter):
    pass

class NotACycle(InvalidParameter):
    pass

class NotEulerian(InvalidParameter):
    pass

# family kinds
COMPLETE = 'Complete'
COMPLETE_BIPARTITE = 'CompleteBipartite'
PATH = 'Path'
CYCLE = 'Cycle'
STAR = 'Star'
WHEEL = 'Wheel'
TREE = 'Tree'
CUSTOM = 'Custom'

FAMILY_KINDS = CaseInsensitiveDict({k: k for k in [
    COMPLETE, COMPLETE_BIPARTITE, PATH, CYCLE, STAR, WHEEL, TREE, CUSTOM
]})

class FamilySpec(namedtuple('FamilySpec', ['kind', 'params'])):
    """
    Symbolic description of a generated graph family instance.

    Parameter conventions by kind:

    * ``Complete`` - ``(n, lam)``
    * ``CompleteBipartite`` - ``(m, n, lam)``
    * ``Path``, ``Cycle``, ``Star``, ``Wheel`` - ``(n,)``
    * ``Tree`` - ``(n, seed)``
    * ``Custom`` - anything (not regenerable)
    """
    __slots__ = ()
    def __new__(cls, kind, params=()):
        if kind not in FAMILY_KINDS:
            raise InvalidParameter('unknown family kind: %s' % kind)
        return super(FamilySpec, cls).__new__(cls, FAMILY_KINDS[kind], tuple(int(p) for p in params))
    def to_dict(self):
        return { 'kind': self.kind, 'params': list(self.params) }
    @classmethod
    def from_dict(cls, d):
        return cls(d['kind'], d.get('params', []))

class Edge(namedtuple('Edge', ['id', 'u', 'v', 'copy'])):
    """
    An edge ``{x_u, x_v}`` with ``u < v``. ``copy`` distinguishes
    parallel edges between the same pair.
    """
    __slots__ = ()
    @property
    def pair(self):
        return (self.u, self.v)
    def other(self, x):
        """
        :param x: one endpoint
        :returns int: the other endpoint
        """
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise UnknownVertex('vertex %d is not an endpoint of edge %d' % (x, self.id))

class Multigraph(object):
    """
    A loopless multigraph on vertices ``1..n``. Immutable after
    construction; incidence lists are built once.

    Edge ids are dense (``0..|E|-1``) and each edge is identified by
    ``(u, v, copy)`` with ``u < v``.
    """
    def __init__(self, n, edges, family=None):
        """
        :param n: the vertex count
        :param edges: a sequence of ``Edge``
        :param family: an optional ``FamilySpec``
        """
        if n < 0:
            raise InvalidParameter('vertex count must be nonnegative')
        self.n = int(n)
        self.edges = tuple(edges)
        self.family = family
        self._incidence = [[] for _ in range(self.n + 1)]
        self._index = {}
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise InvalidParameter('edge ids must be dense, found %d at position %d' % (e.id, i))
            if e.u == e.v:
                raise InvalidParameter('loop at vertex %d' % e.u)
            if not (1 <= e.u < e.v <= self.n):
                raise InvalidParameter('edge %d has invalid endpoints (%d, %d)' % (e.id, e.u, e.v))
            key = (e.u, e.v, e.copy)
            if key in self._index:
                raise InvalidParameter('duplicate edge (%d, %d) copy %d' % key)
            self._index[key] = e.id
            self._incidence[e.u].append(e)
            self._incidence[e.v].append(e)
    @classmethod
    def from_pairs(cls, n, pairs, family=None):
        """
        Build a multigraph from endpoint pairs, in order. Ids are
        assigned by position and copy counters by repetition of the
        same unordered pair.

        :param n: the vertex count
        :param pairs: iterable of ``(u, v)``
        """
        copies, edges = {}, []
        for u, v in pairs:
            u, v = min(u, v), max(u, v)
            k = copies.get((u, v), 0)
            copies[(u, v)] = k + 1
            edges.append(Edge(len(edges), u, v, k))
        return cls(n, edges, family=family)
    # vertices
    def vertices(self):
        return range(1, self.n + 1)
    def _check_vertex(self, x):
        if not (isinstance(x, (int, np.integer)) and 1 <= x <= self.n):
            raise UnknownVertex('unknown vertex %s' % (x,))
    def degree(self, x):
        self._check_vertex(x)
        return len(self._incidence[x])
    def incident_edges(self, x):
        """
        :returns list: the edges incident to ``x``, ordered by id
        """
        self._check_vertex(x)
        return list(self._incidence[x])
    def neighbors(self, x):
        """
        Distinct neighbors of ``x``, in increasing order
        """
        return sorted(set(e.other(x) for e in self.incident_edges(x)))
    @property
    def degrees(self):
        """
        Degrees as a numpy array indexed by vertex (index 0 unused)
        """
        return np.array([len(inc) for inc in self._incidence], dtype=int)
    def max_degree(self):
        return int(self.degrees.max()) if self.n > 0 else 0
    # edges
    @property
    def n_edges(self):
        return len(self.edges)
    def edge_between(self, u, v, copy=0):
        """
        :returns Edge: the ``copy``-th edge joining ``u`` and ``v``
        """
        key = (min(u, v), max(u, v), copy)
        try:
            return self.edges[self._index[key]]
        except KeyError:
            raise KeyError('no edge (%d, %d) copy %d' % key)
    def multiplicity(self, u, v):
        u, v = min(u, v), max(u, v)
        k = 0
        while (u, v, k) in self._index:
            k += 1
        return k
    # connectivity
    def components(self):
        """
        Label each vertex with its connected component.

        :returns numpy.ndarray: component labels for vertices ``1..n``
          (position ``i`` holds the label of vertex ``i+1``)
        """
        if self.n == 0:
            return np.zeros(0, dtype=int)
        rows = np.array([e.u - 1 for e in self.edges], dtype=int)
        cols = np.array([e.v - 1 for e in self.edges], dtype=int)
        adj = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(self.n, self.n))
        _, labels = connected_components(adj, directed=False)
        return labels
    def is_connected(self, ignore_isolated=False):
        labels = self.components()
        if ignore_isolated:
            labels = labels[self.degrees[1:] > 0]
        return len(set(labels)) <= 1
    # conversions
    def to_dict(self):
        d = {
            'n': self.n,
            'edges': [{'id': e.id, 'u': e.u, 'v': e.v, 'copy': e.copy} for e in self.edges],
        }
        if self.family is not None:
            d['family'] = self.family.to_dict()
        return d
    @classmethod
    def from_dict(cls, d):
        edges = sorted((Edge(int(e['id']), int(e['u']), int(e['v']), int(e.get('copy', 0)))
                        for e in d['edges']), key=lambda e: e.id)
        # accept either endpoint order on input
        edges = [Edge(e.id, min(e.u, e.v), max(e.u, e.v), e.copy) for e in edges]
        family = d.get('family')
        if family is not None:
            family = FamilySpec.from_dict(family)
        return cls(int(d['n']), edges, family=family)
    def to_dataframe(self):
        """
        The edge list as a ``pandas.DataFrame`` indexed by edge id
        """
        df = pd.DataFrame(list(self.edges), columns=Edge._fields)
        return df.set_index('id')
    def __eq__(self, other):
        try:
            return self.n == other.n and self.edges == other.edges
        except AttributeError:
            return False
    def __hash__(self):
        return hash((self.n, self.edges))
    def __len__(self):
        return self.n_edges
    def __repr__(self):
        label = self.family.kind if self.family is not None else 'multigraph'
        return '<%s n=%d |E|=%d>' % (label, self.n, self.n_edges)

# module-level operations

def degree(g, x):
    return g.degree(x)

def incident_edges(g, x):
    return g.incident_edges(x)

def max_degree(g):
    return g.max_degree()

def multiplicity(g, u, v):
    return g.multiplicity(u, v)

def is_eulerian(g):
    """
    A multigraph is eulerian if it is connected, ignoring isolated
    vertices, and every degree is even.
    """
    if np.any(g.degrees % 2 == 1):
        return False
    return g.is_connected(ignore_isolated=True)

def is_tree(g):
    return g.n >= 1 and g.n_edges == g.n - 1 and g.is_connected()

def is_cycle(g):
    if g.n < 3 or g.n_edges != g.n:
        return False
    if np.any(g.degrees[1:] != 2):
        return False
    return g.is_connected()

# generators

def _require(condition, message):
    if not condition:
        raise InvalidParameter(message)

def complete(n, lam=1):
    """
    The complete multigraph ``lam K_n``: ``lam`` parallel edges
    between every pair of the ``n`` vertices. Copies of the same
    pair have consecutive ids.
    """
    _require(n >= 2, 'complete graph needs n >= 2, got %d' % n)
    _require(lam >= 1, 'lambda must be >= 1, got %d' % lam)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) for _ in range(lam)]
    return Multigraph.from_pairs(n, pairs, FamilySpec(COMPLETE, (n, lam)))

def complete_bipartite(m, n, lam=1):
    """
    The complete bipartite multigraph ``lam K_{m,n}``. The first part
    is vertices ``1..m``, the second ``m+1..m+n``.
    """
    _require(m >= 1 and n >= 1, 'bipartite parts must be nonempty, got %d, %d' % (m, n))
    _require(lam >= 1, 'lambda must be >= 1, got %d' % lam)
    pairs = [(a, m + b) for a in range(1, m + 1) for b in range(1, n + 1) for _ in range(lam)]
    return Multigraph.from_pairs(m + n, pairs, FamilySpec(COMPLETE_BIPARTITE, (m, n, lam)))

def complete_multipartite(parts, lam=1):
    """
    The complete multipartite multigraph with the given part sizes,
    e.g. ``complete_multipartite([2, 2, 2])`` is the octahedron.
    """
    _require(len(parts) >= 2 and all(p >= 1 for p in parts), 'need at least two nonempty parts')
    _require(lam >= 1, 'lambda must be >= 1, got %d' % lam)
    part_of, x = {}, 1
    for k, p in enumerate(parts):
        for _ in range(p):
            part_of[x] = k
            x += 1
    n = x - 1
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
             if part_of[i] != part_of[j] for _ in range(lam)]
    return Multigraph.from_pairs(n, pairs, FamilySpec(CUSTOM, parts))

def path(n):
    _require(n >= 2, 'path needs n >= 2, got %d' % n)
    pairs = [(i, i + 1) for i in range(1, n)]
    return Multigraph.from_pairs(n, pairs, FamilySpec(PATH, (n,)))

def cycle(n):
    """
    ``C_n``: edges ``{x_i, x_{i+1}}`` in order, then ``{x_n, x_1}``.
    """
    _require(n >= 3, 'cycle needs n >= 3, got %d' % n)
    pairs = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Multigraph.from_pairs(n, pairs, FamilySpec(CYCLE, (n,)))

def star(n):
    """
    ``S_n``: hub ``x_1`` joined to ``n`` leaves ``x_2..x_{n+1}``.
    """
    _require(n >= 1, 'star needs n >= 1, got %d' % n)
    pairs = [(1, i) for i in range(2, n + 2)]
    return Multigraph.from_pairs(n + 1, pairs, FamilySpec(STAR, (n,)))

def wheel(n):
    """
    ``W_n``: hub ``x_1``, rim cycle ``x_2..x_n``. Edge order is the
    spokes ``{x_1, x_i}``, then rim edges ``{x_i, x_{i+1}}`` for
    ``i = 2..n-1``, then the closing edge ``{x_n, x_2}``.
    """
    _require(n >= 4, 'wheel needs n >= 4, got %d' % n)
    spokes = [(1, i) for i in range(2, n + 1)]
    rim = [(i, i + 1) for i in range(2, n)] + [(n, 2)]
    return Multigraph.from_pairs(n, spokes + rim, FamilySpec(WHEEL, (n,)))

def prufer_decode(sequence, n):
    """
    Decode a Prüfer sequence into tree edges, always removing the
    smallest available leaf.

    :param sequence: ``n-2`` labels in ``1..n``
    :param n: the vertex count
    :returns list: ``n-1`` edges as pairs
    """
    degree = [1] * (n + 1)
    for a in sequence:
        degree[a] += 1
    leaves = [x for x in range(1, n + 1) if degree[x] == 1]
    heapq.heapify(leaves)
    pairs = []
    for a in sequence:
        leaf = heapq.heappop(leaves)
        pairs.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    pairs.append((u, v))
    return pairs

def random_tree(n, seed=0):
    """
    A random labeled tree on ``n`` vertices, decoded from a
    seed-derived Prüfer sequence. Equal seeds give equal trees.
    """
    _require(n >= 2, 'tree needs n >= 2, got %d' % n)
    rng = np.random.default_rng(seed)
    sequence = [int(a) for a in rng.integers(1, n + 1, size=n - 2)]
    return Multigraph.from_pairs(n, prufer_decode(sequence, n), FamilySpec(TREE, (n, seed)))

def random_eulerian(n, seed=0, cycles=2):
    """
    A random connected ``2 * cycles``-regular multigraph on ``n``
    vertices, the union of ``cycles`` random Hamiltonian cycles.
    Every such graph is eulerian and has a ``Delta/2``-homogeneous
    coloring: one color per Hamiltonian cycle. Cycles may share
    edges, which become parallel copies.

    Eulerian multigraphs in general need not have that coloring. Three
    copies of ``{1,2}`` plus ``{2,3}`` and ``{1,3}`` have none, so
    irregular eulerian graphs are not generated here.
    """
    _require(n >= 3, 'eulerian multigraph needs n >= 3, got %d' % n)
    _require(cycles >= 2, 'eulerian multigraph needs at least 2 cycles (max degree >= 4), got %d' % cycles)
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(cycles):
        order = [int(x) + 1 for x in rng.permutation(n)]
        pairs.extend(zip(order, order[1:] + order[:1]))
    logging.debug(f'random eulerian multigraph seed={seed}: {cycles} Hamiltonian cycles on {n} vertices')
    return Multigraph.from_pairs(n, pairs, FamilySpec(CUSTOM, (n, seed, cycles)))

def from_family(spec):
    """
    Regenerate the graph described by a ``FamilySpec``.
    """
    p = spec.params
    try:
        if spec.kind == COMPLETE:
            return complete(*p)
        elif spec.kind == COMPLETE_BIPARTITE:
            return complete_bipartite(*p)
        elif spec.kind == PATH:
            return path(*p)
        elif spec.kind == CYCLE:
            return cycle(*p)
        elif spec.kind == STAR:
            return star(*p)
        elif spec.kind == WHEEL:
            return wheel(*p)
        elif spec.kind == TREE:
            return random_tree(*p)
    except TypeError:
        raise InvalidParameter('wrong parameters for %s: %s' % (spec.kind, list(p)))
    raise InvalidParameter('family %s cannot be regenerated' % spec.kind)
