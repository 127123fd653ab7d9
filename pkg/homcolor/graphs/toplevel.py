# high-level API

from .multigraph import Multigraph, Edge, FamilySpec, from_family
from .multigraph import complete, complete_bipartite, complete_multipartite
from .multigraph import path, cycle, star, wheel, random_tree, random_eulerian
from .identifiers import parse as parse_label, unparse as family_label

from ..coloring.homogeneity import EdgeColoring, verify, spectrum
from ..coloring.constructions import construct, theoretical_chi_tilde
from ..coloring.decompositions import walecki_decompose, verify_decomposition
from ..coloring.solver import feasible, chi_tilde

# I/O helper functions

from .io import read_graph, write_graph, read_coloring, write_coloring

# errors

from .multigraph import InvalidParameter, UnknownVertex
from ..coloring.homogeneity import ColoringMismatch
from ..coloring.solver import BudgetExceeded
from ..coloring.constructions import NoColoringFound
