"""
Hamiltonian cycle decompositions of ``K_n`` for odd ``n``.

The construction is Walecki's rotation: vertex ``n`` is fixed and
the other vertices, read as residues mod ``n-1``, follow the zig-zag
``0, 1, -1, 2, -2, ..., k`` (``k = (n-1)/2``). Rotating the zig-zag
by ``0..k-1`` and closing each path through ``n`` gives ``k``
edge-disjoint Hamiltonian cycles covering every edge.
"""

import logging
from collections import namedtuple

from ..graphs.multigraph import InvalidParameter

class HamiltonianDecomposition(namedtuple('HamiltonianDecomposition', ['n', 'cycles'])):
    """
    ``(n-1)/2`` Hamiltonian cycles of ``K_n``, each a sequence of the
    ``n`` vertices in visiting order.
    """
    __slots__ = ()
    def __new__(cls, n, cycles):
        return super(HamiltonianDecomposition, cls).__new__(cls, int(n), tuple(tuple(int(x) for x in cy) for cy in cycles))
    def to_dict(self):
        return { 'n': self.n, 'cycles': [list(cy) for cy in self.cycles] }
    @classmethod
    def from_dict(cls, d):
        return cls(d['n'], d['cycles'])

def zigzag(n):
    """
    The base zig-zag path on residues ``0..n-2``.
    """
    k = (n - 1) // 2
    seq = [0]
    for t in range(1, k):
        seq.extend([t, (-t) % (n - 1)])
    seq.append(k)
    return seq

def walecki_decompose(n):
    """
    Decompose ``K_n`` into Hamiltonian cycles.

    :param n: odd, at least 3
    :returns HamiltonianDecomposition: cycles in rotation order; each
      starts at the fixed vertex ``n``
    """
    if n < 3 or n % 2 == 0:
        raise InvalidParameter('Walecki decomposition needs odd n >= 3, got %d' % n)
    base = zigzag(n)
    cycles = []
    for r in range((n - 1) // 2):
        cycles.append([n] + [(x + r) % (n - 1) + 1 for x in base])
    return HamiltonianDecomposition(n, cycles)

def cycle_pairs(cycle):
    """
    The edges of a vertex cycle as pairs, starting from its
    lowest-labeled vertex and following the stored direction.
    """
    i = cycle.index(min(cycle))
    seq = list(cycle[i:]) + list(cycle[:i])
    return [(seq[t], seq[(t + 1) % len(seq)]) for t in range(len(seq))]

def cycle_edges(g, cycle, copy=0):
    """
    Edge ids of ``g`` along a vertex cycle, in ``cycle_pairs`` order.
    """
    return [g.edge_between(u, v, copy).id for u, v in cycle_pairs(cycle)]

def check_decomposition(d):
    """
    :returns tuple: ``(ok, message)``; message describes the first
      failure found
    """
    n = d.n
    if n < 3 or n % 2 == 0:
        return False, 'n must be odd and at least 3'
    if len(d.cycles) != (n - 1) // 2:
        return False, 'expected %d cycles, found %d' % ((n - 1) // 2, len(d.cycles))
    seen = set()
    for i, cy in enumerate(d.cycles):
        if sorted(cy) != list(range(1, n + 1)):
            return False, 'cycle %d is not Hamiltonian' % i
        for u, v in cycle_pairs(cy):
            e = (min(u, v), max(u, v))
            if e in seen:
                return False, 'edge %s repeated in cycle %d' % (e, i)
            seen.add(e)
    if len(seen) != n * (n - 1) // 2:
        return False, 'cycles cover %d of %d edges' % (len(seen), n * (n - 1) // 2)
    return True, 'ok'

def verify_decomposition(d):
    """
    True iff every cycle is Hamiltonian and the cycles are pairwise
    edge-disjoint and cover ``K_n``.
    """
    ok, message = check_decomposition(d)
    if not ok:
        logging.warning(f'invalid decomposition of K_{d.n}: {message}')
    return ok
