import unittest

from homcolor.graphs import identifiers as ids
from homcolor.graphs.multigraph import FamilySpec, InvalidParameter, from_family

GOOD = {
    'K7': FamilySpec('Complete', (7, 1)),
    '3K7': FamilySpec('Complete', (7, 3)),
    'K2,3': FamilySpec('CompleteBipartite', (2, 3, 1)),
    '2K2,3': FamilySpec('CompleteBipartite', (2, 3, 2)),
    'P4': FamilySpec('Path', (4,)),
    'C5': FamilySpec('Cycle', (5,)),
    'S5': FamilySpec('Star', (5,)),
    'W5': FamilySpec('Wheel', (5,)),
    'T9s7': FamilySpec('Tree', (9, 7)),
}

BAD = ['', 'K', 'X5', 'K7a', '3', 'KK7', 'T9', 'W5,5', 'K2,3,4']

class TestIdentifiers(unittest.TestCase):
    def test_parse(self):
        for label, spec in GOOD.items():
            assert ids.parse(label) == spec, 'wrong parse of %s' % label
    def test_unparse(self):
        for label, spec in GOOD.items():
            assert ids.unparse(spec) == label
    def test_tex_decoration(self):
        assert ids.parse('K_{2, 3}') == GOOD['K2,3']
        assert ids.parse('3K_7') == GOOD['3K7']
    def test_bad(self):
        for label in BAD:
            with self.assertRaises(InvalidParameter):
                ids.parse(label)
    def test_generate(self):
        g = from_family(ids.parse('3K7'))
        assert g.n_edges == 63
