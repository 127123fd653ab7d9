"""
Graphviz DOT rendering of multigraphs and their colorings.

To render the output, save it as ``output.dot`` and run::

    $ neato -Tpng output.dot > output.png
"""

from ..config import PALETTE
from ..coloring.homogeneity import check_coloring

def edge_color(k, palette=PALETTE):
    """
    The palette entry for color ``k`` (1-based), cycling when ``k``
    exceeds the palette.
    """
    return palette[(k - 1) % len(palette)]

def to_dot(g, coloring=None, palette=PALETTE):
    """
    Render ``g`` as an undirected DOT graph. Parallel edges are drawn
    separately. With a coloring, each edge gets its palette color and
    its color index as label.

    :param g: the multigraph
    :param coloring: an optional ``EdgeColoring`` of ``g``
    :param palette: list of DOT color strings
    :returns str: the DOT text, one statement per line
    """
    if coloring is not None:
        check_coloring(g, coloring)
    lines = ['graph G {', 'node [shape=circle];']
    append = lines.append

    def node(x):
        return 'x{}'.format(x)

    for x in g.vertices():
        append('{} [label="{}"];'.format(node(x), x))
    for e in g.edges:
        if coloring is None:
            append('{} -- {};'.format(node(e.u), node(e.v)))
        else:
            k = coloring[e.id]
            append('{} -- {} [color="{}", label="{}"];'.format(node(e.u), node(e.v), edge_color(k, palette), k))
    append('}')
    return '\n'.join(lines) + '\n'
