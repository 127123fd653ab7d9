import unittest

from homcolor.graphs import multigraph as mg
from homcolor.graphs.multigraph import InvalidParameter
from homcolor.coloring import decompositions as dec
from homcolor.coloring.decompositions import HamiltonianDecomposition

class TestWalecki(unittest.TestCase):
    def test_valid(self):
        for n in range(3, 102, 2):
            d = dec.walecki_decompose(n)
            assert len(d.cycles) == (n - 1) // 2
            assert dec.verify_decomposition(d), 'K_%d decomposition invalid' % n
    def test_zigzag(self):
        assert dec.zigzag(7) == [0, 1, 5, 2, 4, 3]
        assert dec.zigzag(3) == [0, 1]
    def test_k5(self):
        d = dec.walecki_decompose(5)
        assert d.cycles == ((5, 1, 2, 4, 3), (5, 2, 3, 1, 4))
    def test_invalid_n(self):
        for n in (1, 2, 4, 10):
            with self.assertRaises(InvalidParameter):
                dec.walecki_decompose(n)
    def test_cycle_edges_cover(self):
        n = 9
        g = mg.complete(n)
        d = dec.walecki_decompose(n)
        ids = [i for cy in d.cycles for i in dec.cycle_edges(g, cy)]
        assert sorted(ids) == list(range(g.n_edges))
    def test_cycle_pairs(self):
        assert dec.cycle_pairs((5, 1, 2, 4, 3)) == [(1, 2), (2, 4), (4, 3), (3, 5), (5, 1)]

class TestCheckDecomposition(unittest.TestCase):
    def test_wrong_count(self):
        d = HamiltonianDecomposition(5, [[5, 1, 2, 4, 3]])
        ok, message = dec.check_decomposition(d)
        assert not ok
        assert 'expected 2 cycles' in message
    def test_not_hamiltonian(self):
        d = HamiltonianDecomposition(5, [[5, 1, 2, 4, 4], [5, 2, 3, 1, 4]])
        assert not dec.verify_decomposition(d)
    def test_repeated_edge(self):
        d = HamiltonianDecomposition(5, [[5, 1, 2, 4, 3], [5, 1, 2, 4, 3]])
        ok, message = dec.check_decomposition(d)
        assert not ok
        assert 'repeated' in message
    def test_even(self):
        assert not dec.verify_decomposition(HamiltonianDecomposition(4, []))
    def test_dict_round_trip(self):
        d = dec.walecki_decompose(7)
        assert HamiltonianDecomposition.from_dict(d.to_dict()) == d
