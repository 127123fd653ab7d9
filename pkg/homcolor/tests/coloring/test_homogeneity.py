import itertools
import unittest

from homcolor.graphs import multigraph as mg
from homcolor.graphs.multigraph import InvalidParameter, NotACycle, UnknownVertex
from homcolor.coloring import homogeneity as hom
from homcolor.coloring.homogeneity import EdgeColoring, ColoringMismatch
from homcolor.coloring.constructions import color_complete_1mod4, color_complete_3mod4

class TestEdgeColoring(unittest.TestCase):
    def test_dictlike(self):
        c = EdgeColoring(3, [1, 3, 2])
        assert c[1] == 3
        assert len(c) == 3
        assert list(c.keys()) == [0, 1, 2]
        assert dict(c.items()) == {0: 1, 1: 3, 2: 2}
        assert 2 in c and 3 not in c
    def test_invalid(self):
        with self.assertRaises(ColoringMismatch):
            EdgeColoring(1, [1])
        with self.assertRaises(ColoringMismatch):
            EdgeColoring(2, [1, 3])
        with self.assertRaises(ValueError):
            EdgeColoring(2, [0])
    def test_unused_color(self):
        c = EdgeColoring(3, [1, 1])
        assert c.m == 3
    def test_permute(self):
        c = EdgeColoring(3, [1, 2, 3, 1])
        assert hom.cycle_permutation(1, 3, 2) == {1: 3, 3: 2, 2: 1}
        assert c.permuted(hom.cycle_permutation(1, 3, 2)).colors == (3, 1, 2, 3)
        assert c.swapped().colors == (2, 1, 3, 2)
        with self.assertRaises(InvalidParameter):
            hom.permute_colors(c, {1: 2})
    def test_dict_round_trip(self):
        c = EdgeColoring(2, [2, 1])
        assert c.to_dict() == {'m': 2, 'colors': [2, 1]}
        assert EdgeColoring.from_dict(c.to_dict()) == c
        assert c != EdgeColoring(3, [2, 1])

class TestVerify(unittest.TestCase):
    def test_triangle_monochromatic(self):
        g = mg.cycle(3)
        report = hom.verify(g, EdgeColoring(2, [1, 1, 1]))
        assert not report.ok
        assert not report
        v = report.first_violation
        assert v.vertex == 1
        assert v.color == 1
        assert v.count == 2
        assert v.allowed == (1,)
    def test_spectrum_circulant_k5(self):
        result = color_complete_1mod4(5, 'circulant')
        for x in result.graph.vertices():
            s = hom.spectrum(result.graph, result.coloring, x)
            assert s.counts == {1: 2, 2: 2}
            assert (s.d, s.q, s.r) == (4, 2, 0)
    def test_report_contents(self):
        g = mg.path(3)
        report = hom.verify(g, EdgeColoring(2, [1, 2]))
        assert report.ok
        assert len(report) == 3
        assert report[2].counts == {1: 1, 2: 1}
        assert report[1].counts == {1: 1}
        assert report[1].sorted_counts(2) == [0, 1]
        assert report[1].allowed() == (0, 1)
        d = report.to_dict()
        assert d['ok'] and d['first_violation'] is None
        assert d['spectra'][1]['counts'] == {'1': 1, '2': 1}
    def test_report_unknown_vertex(self):
        report = hom.verify(mg.path(3), EdgeColoring(2, [1, 2]))
        for x in (0, 4, -1):
            assert x not in report
            with self.assertRaises(KeyError):
                report[x]
    def test_dataframe(self):
        g = mg.star(3)
        df = hom.verify(g, EdgeColoring(2, [1, 2, 1])).to_dataframe()
        assert list(df.columns) == ['d', 1, 2]
        assert df.loc[1, 1] == 2 and df.loc[1, 2] == 1
        assert df.loc[3, 'd'] == 1
    def test_mismatch(self):
        with self.assertRaises(ColoringMismatch):
            hom.verify(mg.path(3), EdgeColoring(2, [1]))
        with self.assertRaises(UnknownVertex):
            hom.spectrum(mg.path(3), EdgeColoring(2, [1, 2]), 5)
    def test_small_degree_needs_distinct_colors(self):
        # d < m: every edge at a vertex must have its own color
        g = mg.star(2)
        assert hom.verify(g, EdgeColoring(3, [1, 2])).ok
        assert not hom.verify(g, EdgeColoring(3, [2, 2])).ok
    def test_partition_agrees(self):
        for g in [mg.cycle(4), mg.star(3), mg.complete(4), mg.complete(3, 2)]:
            for m in (2, 3):
                for colors in itertools.product(range(1, m + 1), repeat=g.n_edges):
                    c = EdgeColoring(m, colors)
                    ok = hom.verify(g, c).ok
                    assert hom.satisfies_partition(g, c) == ok
                    assert hom.is_homogeneous(g, colors, m) == ok
    def test_color_relabeling_invariance(self):
        g = mg.wheel(5)
        for colors in itertools.product((1, 2), repeat=g.n_edges):
            c = EdgeColoring(2, colors)
            assert hom.verify(g, c).ok == hom.verify(g, c.swapped()).ok
    def test_three_color_relabeling_invariance(self):
        for n, variant in [(7, 'cycles'), (7, 'circulant'), (11, 'direct'), (15, 'direct'), (15, 'cycles')]:
            result = color_complete_3mod4(n, variant)
            for images in itertools.permutations((1, 2, 3)):
                c = result.coloring.permuted(dict(zip((1, 2, 3), images)))
                assert hom.verify(result.graph, c).ok, 'K_%d %s under %s' % (n, variant, images)
        # a violation survives relabeling too
        g = mg.complete(4)
        bad = EdgeColoring(3, [1, 1, 1, 2, 3, 2])
        for images in itertools.permutations((1, 2, 3)):
            assert not hom.verify(g, bad.permuted(dict(zip((1, 2, 3), images)))).ok

class TestProperColoring(unittest.TestCase):
    def test_greedy(self):
        for g in [mg.complete(6), mg.complete(5, 2), mg.wheel(7), mg.star(1)]:
            c = hom.greedy_proper_coloring(g)
            assert hom.is_proper(g, c)
            assert hom.verify(g, c).ok
            assert c.m <= max(2, 2 * g.max_degree() - 1)
    def test_parallel_edges_not_proper(self):
        g = mg.complete(2, 2)
        assert not hom.is_proper(g, EdgeColoring(2, [1, 1]))
        assert hom.is_proper(g, EdgeColoring(2, [1, 2]))
    def test_proper_is_homogeneous(self):
        # K_4 split into its three perfect matchings
        k4 = EdgeColoring(3, [1, 2, 3, 3, 2, 1])
        assert hom.is_proper(mg.complete(4), k4)
        assert hom.verify(mg.complete(4), k4).ok
        for g in [mg.cycle(5), mg.star(3), mg.complete(4), mg.complete(3, 2)]:
            delta = g.max_degree()
            for m in (delta, delta + 1):
                for colors in itertools.product(range(1, m + 1), repeat=g.n_edges):
                    c = EdgeColoring(m, colors)
                    if hom.is_proper(g, c):
                        assert hom.verify(g, c).ok, '%r %s' % (g, colors)

class TestMonochromaticVertices(unittest.TestCase):
    def test_count(self):
        g = mg.cycle(5)
        assert hom.count_monochromatic_vertices(g, EdgeColoring(2, [1, 1, 1, 1, 1])) == 5
        assert hom.count_monochromatic_vertices(g, EdgeColoring(2, [1, 2, 1, 2, 2])) == 1
        # vertices 1, 2 and 4 see a single color
        assert hom.count_monochromatic_vertices(g, EdgeColoring(2, [1, 1, 2, 2, 1])) == 3
    def test_errors(self):
        with self.assertRaises(NotACycle):
            hom.count_monochromatic_vertices(mg.path(3), EdgeColoring(2, [1, 2]))
        with self.assertRaises(InvalidParameter):
            hom.count_monochromatic_vertices(mg.cycle(3), EdgeColoring(3, [1, 2, 3]))
