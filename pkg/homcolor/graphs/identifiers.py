"""
Support for parsing compact graph family labels.

Labels follow the usual notation for the families, with an optional
leading multiplicity:

* ``K7``, ``3K7`` - complete (multi)graph ``lam K_n``
* ``K2,3``, ``2K2,3``, ``K_{2,3}`` - complete bipartite ``lam K_{m,n}``
* ``P4``, ``C5``, ``S5``, ``W5`` - path, cycle, star, wheel
* ``T9s7`` - random tree on 9 vertices from seed 7
"""

import re
from functools import lru_cache

from .multigraph import (FamilySpec, InvalidParameter, COMPLETE, COMPLETE_BIPARTITE,
                         PATH, CYCLE, STAR, WHEEL, TREE)

LETTERS = {
    'P': PATH,
    'C': CYCLE,
    'S': STAR,
    'W': WHEEL,
}

@lru_cache()
def c(pattern):
    """
    Compile a regex pattern (with caching)
    """
    return re.compile(pattern)

def normalize(label):
    """
    Strip TeX-ish decoration (``_``, braces, spaces) from a label.

    >>> normalize('2K_{3, 4}')
    '2K3,4'
    """
    return c(r'[_{}\s]').sub('', label)

def parse(label):
    """
    Parse a family label into a ``FamilySpec``.

    :param label: the label, e.g. ``'3K7'``
    :type label: str
    :returns FamilySpec: the family
    """
    s = normalize(label)
    m = c(r'^([0-9]*)K([0-9]+),([0-9]+)$').match(s)
    if m:
        lam, a, b = m.groups()
        return FamilySpec(COMPLETE_BIPARTITE, (int(a), int(b), int(lam or 1)))
    m = c(r'^([0-9]*)K([0-9]+)$').match(s)
    if m:
        lam, n = m.groups()
        return FamilySpec(COMPLETE, (int(n), int(lam or 1)))
    m = c(r'^([PCSW])([0-9]+)$').match(s)
    if m:
        letter, n = m.groups()
        return FamilySpec(LETTERS[letter], (int(n),))
    m = c(r'^T([0-9]+)s([0-9]+)$').match(s)
    if m:
        n, seed = m.groups()
        return FamilySpec(TREE, (int(n), int(seed)))
    raise InvalidParameter('invalid family label: %s' % label)

def unparse(spec):
    """
    Unparse a ``FamilySpec`` into its compact label. Inverse of
    ``parse`` for every regenerable family.
    """
    p = spec.params
    def mult(lam):
        return '' if lam == 1 else str(lam)
    if spec.kind == COMPLETE:
        n, lam = p
        return '%sK%d' % (mult(lam), n)
    if spec.kind == COMPLETE_BIPARTITE:
        m, n, lam = p
        return '%sK%d,%d' % (mult(lam), m, n)
    if spec.kind == TREE:
        return 'T%ds%d' % p
    for letter, kind in LETTERS.items():
        if spec.kind == kind:
            return '%s%d' % (letter, p[0])
    raise InvalidParameter('family %s has no label' % spec.kind)
