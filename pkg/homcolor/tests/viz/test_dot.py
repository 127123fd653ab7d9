import unittest

from homcolor.graphs import multigraph as mg
from homcolor.coloring.homogeneity import EdgeColoring, ColoringMismatch
from homcolor.viz import dot

GOLDEN_P3 = '''graph G {
node [shape=circle];
x1 [label="1"];
x2 [label="2"];
x3 [label="3"];
x1 -- x2 [color="#1f77b4", label="1"];
x2 -- x3 [color="#d62728", label="2"];
}
'''

class TestDot(unittest.TestCase):
    def test_golden(self):
        assert dot.to_dot(mg.path(3), EdgeColoring(2, [1, 2])) == GOLDEN_P3
    def test_uncolored(self):
        text = dot.to_dot(mg.complete(2, 2))
        assert text.count('x1 -- x2;') == 2
        assert 'color' not in text
    def test_stable(self):
        g = mg.wheel(6)
        c = EdgeColoring(2, [1, 2] * 5)
        assert dot.to_dot(g, c) == dot.to_dot(g, c)
    def test_palette(self):
        assert dot.edge_color(1) == '#1f77b4'
        assert dot.edge_color(13) == dot.edge_color(1)
        text = dot.to_dot(mg.path(2), EdgeColoring(2, [2]), palette=['red', 'blue'])
        assert 'color="blue"' in text
    def test_mismatch(self):
        with self.assertRaises(ColoringMismatch):
            dot.to_dot(mg.path(3), EdgeColoring(2, [1]))
