"""
Verification of homogeneous edge-colorings.

A coloring ``c: E -> {1..m}`` is ``m``-homogeneous when, at every
vertex ``x`` of degree ``d = m*q + r`` (``0 <= r < m``), the edges of
``E(x)`` split into ``r`` color classes of size ``q+1`` and ``m-r``
classes of size ``q``. Since the class sizes sum to ``d``, this holds
exactly when every color count at ``x`` lies in ``{q, q+1}``; the
verifier checks that form. When ``d < m`` it reduces to all edges at
``x`` having distinct colors.
"""

import logging
from collections import namedtuple

import numpy as np
import pandas as pd

from ..graphs.multigraph import InvalidParameter, NotACycle, is_cycle
from ..graphs.utils import BaseDictlike

class ColoringMismatch(ValueError):
    pass

class EdgeColoring(BaseDictlike):
    """
    A total map from edge ids to colors ``1..m``. Dict-like; keys are
    edge ids, values are colors. A color may go unused.

    :Example:

    >>> c = EdgeColoring(2, [1, 2, 1])
    >>> c[1]
    2
    """
    def __init__(self, m, colors):
        """
        :param m: the number of colors, at least 2
        :param colors: the color of each edge, indexed by edge id
        """
        m = int(m)
        if m < 2:
            raise ColoringMismatch('a homogeneous coloring needs m >= 2, got %d' % m)
        self.m = m
        self.colors = tuple(int(k) for k in colors)
        for i, k in enumerate(self.colors):
            if not 1 <= k <= m:
                raise ColoringMismatch('edge %d has color %d outside 1..%d' % (i, k, m))
    def keys(self):
        return iter(range(len(self.colors)))
    def has_key(self, k):
        return 0 <= k < len(self.colors)
    def __len__(self):
        return len(self.colors)
    def __getitem__(self, edge_id):
        return self.colors[edge_id]
    def as_array(self):
        return np.array(self.colors, dtype=int)
    def permuted(self, permutation):
        """
        Relabel colors. ``permutation`` maps each old color to its new
        color; colors it does not mention are left alone.
        """
        return permute_colors(self, permutation)
    def swapped(self):
        """
        Exchange colors 1 and 2.
        """
        return permute_colors(self, {1: 2, 2: 1})
    def to_dict(self):
        return { 'm': self.m, 'colors': list(self.colors) }
    @classmethod
    def from_dict(cls, d):
        return cls(d['m'], d['colors'])
    def __eq__(self, other):
        try:
            return self.m == other.m and self.colors == other.colors
        except AttributeError:
            return False
    def __hash__(self):
        return hash((self.m, self.colors))
    def __repr__(self):
        return '<EdgeColoring m=%d |E|=%d>' % (self.m, len(self.colors))

def cycle_permutation(*cycle):
    """
    The color permutation given in cycle notation, e.g.
    ``cycle_permutation(1, 3, 2)`` maps 1 to 3, 3 to 2 and 2 to 1.

    :returns dict: old color to new color
    """
    return { a: b for a, b in zip(cycle, cycle[1:] + cycle[:1]) }

def permute_colors(coloring, permutation):
    """
    :param coloring: an ``EdgeColoring``
    :param permutation: dict from old to new colors, bijective on ``1..m``
    :returns EdgeColoring: the relabeled coloring
    """
    mapping = { k: permutation.get(k, k) for k in range(1, coloring.m + 1) }
    if sorted(mapping.values()) != list(range(1, coloring.m + 1)):
        raise InvalidParameter('not a permutation of 1..%d: %s' % (coloring.m, permutation))
    return EdgeColoring(coloring.m, [mapping[k] for k in coloring.colors])

class VertexSpectrum(namedtuple('VertexSpectrum', ['vertex', 'd', 'q', 'r', 'counts'])):
    """
    The color counts over ``E(x)`` for one vertex, with
    ``d = m*q + r``. ``counts`` lists only colors that occur.
    """
    __slots__ = ()
    def count(self, color):
        return self.counts.get(color, 0)
    def allowed(self):
        """
        The counts a color may have at this vertex
        """
        return (self.q, self.q + 1) if self.r > 0 else (self.q,)
    def violation(self, m):
        """
        :returns Violation: the first color whose count is not allowed,
          or None
        """
        allowed = self.allowed()
        for k in range(1, m + 1):
            if self.count(k) not in allowed:
                return Violation(self.vertex, k, self.count(k), allowed)
        return None
    def sorted_counts(self, m):
        """
        The counts of all ``m`` colors, unused ones included, ascending
        """
        return sorted(self.count(k) for k in range(1, m + 1))
    def to_dict(self):
        return {
            'vertex': self.vertex,
            'd': self.d,
            'q': self.q,
            'r': self.r,
            'counts': { str(k): v for k, v in sorted(self.counts.items()) },
        }

Violation = namedtuple('Violation', ['vertex', 'color', 'count', 'allowed'])

class HomogeneityReport(BaseDictlike):
    """
    Result of verifying a coloring: per-vertex spectra plus the
    first violation, if any. Dict-like; keys are vertices, values
    are ``VertexSpectrum``.
    """
    def __init__(self, m, spectra, first_violation=None):
        self.m = m
        self.spectra = list(spectra)
        self.first_violation = first_violation
    @property
    def ok(self):
        return self.first_violation is None
    def keys(self):
        for s in self.spectra:
            yield s.vertex
    def has_key(self, x):
        return 1 <= x <= len(self.spectra)
    def __len__(self):
        return len(self.spectra)
    def __getitem__(self, x):
        if not self.has_key(x):
            raise KeyError('no vertex %s' % (x,))
        return self.spectra[x - 1]
    def __bool__(self):
        return self.ok
    def to_dict(self):
        fv = self.first_violation
        if fv is not None:
            fv = {
                'vertex': fv.vertex,
                'color': fv.color,
                'count': fv.count,
                'allowed': list(fv.allowed),
            }
        return {
            'ok': self.ok,
            'm': self.m,
            'first_violation': fv,
            'spectra': [s.to_dict() for s in self.spectra],
        }
    def to_dataframe(self):
        """
        The spectra as a ``pandas.DataFrame`` with one row per vertex
        and one column per color.
        """
        rows = [[s.count(k) for k in range(1, self.m + 1)] for s in self.spectra]
        df = pd.DataFrame(rows, columns=list(range(1, self.m + 1)),
                          index=pd.Index([s.vertex for s in self.spectra], name='vertex'))
        df.insert(0, 'd', [s.d for s in self.spectra])
        return df
    def __repr__(self):
        return '<HomogeneityReport m=%d ok=%s>' % (self.m, self.ok)

def check_coloring(g, c):
    """
    Ensure ``c`` covers exactly the edges of ``g``.
    """
    if len(c) != g.n_edges:
        raise ColoringMismatch('coloring has %d colors for %d edges' % (len(c), g.n_edges))

def _spectrum(g, colors, m, x):
    ids = [e.id for e in g.incident_edges(x)]
    d = len(ids)
    tally = np.bincount(colors[ids], minlength=m + 1) if d else np.zeros(m + 1, dtype=int)
    counts = { k: int(tally[k]) for k in range(1, m + 1) if tally[k] > 0 }
    q, r = divmod(d, m)
    return VertexSpectrum(x, d, q, r, counts)

def spectrum(g, c, x):
    """
    The color counts over the edges incident to ``x``.

    :param g: the multigraph
    :param c: an ``EdgeColoring`` of ``g``
    :param x: the vertex
    :returns VertexSpectrum: the spectrum
    """
    check_coloring(g, c)
    g.degree(x) # validates x
    return _spectrum(g, c.as_array(), c.m, x)

def verify(g, c):
    """
    Check that ``c`` is an ``m``-homogeneous edge-coloring of ``g``.

    :param g: the multigraph
    :param c: an ``EdgeColoring`` covering exactly the edges of ``g``
    :returns HomogeneityReport: spectra of every vertex, with the first
      violation found (in vertex then color order)
    """
    check_coloring(g, c)
    colors = c.as_array()
    spectra, first = [], None
    for x in g.vertices():
        s = _spectrum(g, colors, c.m, x)
        spectra.append(s)
        if first is None:
            first = s.violation(c.m)
    if first is not None:
        logging.debug(f'coloring not homogeneous at vertex {first.vertex}: color {first.color} has count {first.count}')
    return HomogeneityReport(c.m, spectra, first)

def satisfies_partition(g, c):
    """
    Check homogeneity directly as a partition statement: at each
    vertex, exactly ``r`` colors have ``q+1`` edges and the other
    ``m-r`` colors have ``q``. Equivalent to ``verify(g, c).ok``.
    """
    check_coloring(g, c)
    colors = c.as_array()
    for x in g.vertices():
        s = _spectrum(g, colors, c.m, x)
        expected = [s.q] * (c.m - s.r) + [s.q + 1] * s.r
        if s.sorted_counts(c.m) != expected:
            return False
    return True

def is_homogeneous(g, colors, m):
    """
    Fast check on a raw color sequence, with no report.
    """
    counts = [[0] * (m + 1) for _ in range(g.n + 1)]
    for e, k in zip(g.edges, colors):
        counts[e.u][k] += 1
        counts[e.v][k] += 1
    degrees = g.degrees
    for x in g.vertices():
        q, r = divmod(int(degrees[x]), m)
        hi = q + 1 if r else q
        for k in range(1, m + 1):
            if not q <= counts[x][k] <= hi:
                return False
    return True

def is_proper(g, c):
    """
    True iff no two edges sharing a vertex share a color. Parallel
    edges share both endpoints.
    """
    check_coloring(g, c)
    for x in g.vertices():
        seen = [c[e.id] for e in g.incident_edges(x)]
        if len(seen) != len(set(seen)):
            return False
    return True

def greedy_proper_coloring(g):
    """
    Color edges in id order with the least color absent at both
    endpoints. Uses at most ``2*Delta - 1`` colors; the result is
    homogeneous for its own ``m`` since every vertex sees distinct
    colors.

    :returns EdgeColoring: a proper coloring with ``m`` equal to the
      number of colors used (at least 2)
    """
    used = [set() for _ in range(g.n + 1)]
    colors = []
    for e in g.edges:
        k = 1
        while k in used[e.u] or k in used[e.v]:
            k += 1
        used[e.u].add(k)
        used[e.v].add(k)
        colors.append(k)
    return EdgeColoring(max([2] + colors), colors)

def count_monochromatic_vertices(g, c):
    """
    Count the vertices of a 2-colored cycle whose two edges share a
    color. For odd cycles the count is always odd.

    :param g: a cycle
    :param c: an ``EdgeColoring`` with ``m = 2``
    """
    if not is_cycle(g):
        raise NotACycle('%r is not a cycle' % g)
    if c.m != 2:
        raise InvalidParameter('monochromatic vertex count needs m = 2, got %d' % c.m)
    check_coloring(g, c)
    n = 0
    for x in g.vertices():
        e, f = g.incident_edges(x)
        if c[e.id] == c[f.id]:
            n += 1
    return n
