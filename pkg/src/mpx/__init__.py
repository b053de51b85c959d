"""Multipath complexes of directed graphs and their integral homology."""

from .digraph import (
    Digraph,
    UndirectedGraph,
    blow_up,
    blow_up_at,
    blow_up_with_map,
    gen_family,
    is_acyclic,
    make_digraph,
    t_operation,
    underlying,
)
from .errors import BudgetExceeded, MpxError
from .harness import (
    expected_homology,
    mu,
    nu,
    run_check,
    run_suite,
    verify_matching_iso,
    verify_omega,
)
from .homology import (
    HomologyResult,
    boundary_matrices,
    homological_connectivity,
    homology,
    reduced_homology,
    smith_normal_form,
)
from .multipath import PathPoset, enumerate_multipaths, is_multipath, multipath_complex
from .shellability import ShellingOutcome, find_shelling, is_shelling
from .simplicial import (
    SimplicialComplex,
    are_isomorphic,
    cross_polytope_subcomplex,
    from_facets,
    is_subcomplex,
    join,
    matching_complex,
    suspension,
)

__version__ = "0.1.0"
