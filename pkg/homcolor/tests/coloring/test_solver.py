import unittest

from homcolor.graphs import multigraph as mg
from homcolor.graphs.multigraph import InvalidParameter, Multigraph
from homcolor.coloring import solver
from homcolor.coloring.homogeneity import verify, count_monochromatic_vertices
from homcolor.coloring.solver import BudgetExceeded, ExhaustiveBoundExceeded

class TestChiTilde(unittest.TestCase):
    def assert_chi(self, g, expected):
        result = solver.chi_tilde(g)
        assert result.value == expected, '%r: expected %d, got %d' % (g, expected, result.value)
        assert verify(g, result.witness).ok
        assert result.witness.m == expected
        assert result.infeasible_below == list(range(2, expected))
    def test_complete(self):
        for n in (4, 5, 6, 8, 9):
            self.assert_chi(mg.complete(n), 2)
        for n in (3, 7, 11):
            self.assert_chi(mg.complete(n), 3)
    def test_lambda_complete(self):
        self.assert_chi(mg.complete(3, 3), 3)
        self.assert_chi(mg.complete(7, 1), 3)
        self.assert_chi(mg.complete(3, 2), 2)
        self.assert_chi(mg.complete(7, 2), 2)
    def test_bipartite(self):
        for m in range(1, 5):
            for n in range(1, 5):
                self.assert_chi(mg.complete_bipartite(m, n), 2)
    def test_trees(self):
        for seed in range(20):
            self.assert_chi(mg.random_tree(2 + seed % 8, seed), 2)
    def test_small_families(self):
        for n in range(2, 9):
            self.assert_chi(mg.path(n), 2)
        for n in range(1, 9):
            self.assert_chi(mg.star(n), 2)
        for n in range(4, 8):
            self.assert_chi(mg.wheel(n), 2)
        for n in range(3, 10):
            self.assert_chi(mg.cycle(n), 2 if n % 2 == 0 else 3)
    def test_edgeless(self):
        with self.assertRaises(InvalidParameter):
            solver.chi_tilde(Multigraph(3, []))
    def test_to_dict(self):
        d = solver.chi_tilde(mg.complete(7)).to_dict()
        assert d['chi_tilde'] == 3
        assert d['refuted'] == [2]
        assert d['witness']['m'] == 3

class TestFeasible(unittest.TestCase):
    def test_wheel_non_monotone(self):
        g = mg.wheel(5)
        yes = solver.feasible(g, 2)
        assert yes.feasible
        assert verify(g, yes.witness).ok
        no = solver.feasible(g, 3)
        assert not no.feasible
        assert no.witness is None
    def test_parity(self):
        assert solver.parity_refutes(mg.complete(7), 2)
        assert solver.parity_refutes(mg.cycle(5), 2)
        assert solver.parity_refutes(mg.complete(3, 3), 2)
        assert not solver.parity_refutes(mg.complete(5), 2)
        assert not solver.parity_refutes(mg.complete(6), 2)
    def test_invalid_m(self):
        with self.assertRaises(InvalidParameter):
            solver.feasible(mg.path(3), 1)
    def test_budget(self):
        # K_4 at m = 3 is a proper coloring problem; one node cannot decide it
        with self.assertRaises(BudgetExceeded):
            solver.feasible(mg.complete(4), 3, budget=1)
    def test_edgeless(self):
        result = solver.feasible(Multigraph(2, []), 2)
        assert result.feasible
        assert len(result.witness) == 0

def oracle_graphs():
    """
    Every small family instance with at most 8 edges.
    """
    graphs = [mg.complete(n, lam) for n in range(2, 5) for lam in range(1, 5)]
    graphs += [mg.complete_bipartite(a, b, lam) for a in range(1, 5) for b in range(1, 5) for lam in range(1, 5)]
    graphs += [mg.path(n) for n in range(2, 10)]
    graphs += [mg.cycle(n) for n in range(3, 9)]
    graphs += [mg.star(n) for n in range(1, 9)]
    graphs += [mg.wheel(n) for n in range(4, 6)]
    graphs += [mg.random_tree(n, seed) for n in range(2, 10) for seed in range(3)]
    graphs += [mg.random_eulerian(n, seed) for n in (3, 4) for seed in range(3)]
    graphs += [mg.Multigraph.from_pairs(3, [(1, 2), (1, 2), (1, 2), (2, 3), (1, 3)]),
               mg.Multigraph.from_pairs(6, [(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 6), (6, 1)])]
    return [g for g in graphs if g.n_edges <= 8]

class TestOracle(unittest.TestCase):
    def test_agrees_with_enumeration(self):
        for g in oracle_graphs():
            for m in (2, 3):
                fast = solver.feasible(g, m)
                slow = solver.naive_feasible(g, m)
                assert fast.feasible == slow, '%r at m=%d: search says %s' % (g, m, fast.feasible)
                if fast.feasible:
                    assert verify(g, fast.witness).ok
    def test_exhaustive_bound(self):
        with self.assertRaises(ExhaustiveBoundExceeded):
            solver.naive_feasible(mg.complete(7), 2)
        with self.assertRaises(BudgetExceeded):
            solver.naive_feasible(mg.complete(4), 2, max_edges=5)

class TestMonochromaticParity(unittest.TestCase):
    def test_odd_cycles(self):
        for n in (3, 5, 7, 9):
            g = mg.cycle(n)
            assert solver.all_colorings_property(g, lambda g, c: count_monochromatic_vertices(g, c) % 2 == 1)
    def test_even_cycle_fails(self):
        g = mg.cycle(4)
        assert not solver.all_colorings_property(g, lambda g, c: count_monochromatic_vertices(g, c) % 2 == 1)
