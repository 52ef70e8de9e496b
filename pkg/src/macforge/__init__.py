"""Invariants of moment-angle complexes and their motivic refinement."""

from .complexes import (
    ComplexError,
    GhostVertex,
    MonomialIdeal,
    MTooLarge,
    SimplicialComplex,
    VertexOutOfRange,
    alexander_dual,
    euler_characteristic,
    full_subcomplex,
    join,
    mask,
    minimal_non_faces,
    skeleton,
    vertices,
)
from .gw import (
    GWElement,
    chi_a1_davis,
    chi_a1_from_summands,
    chi_a1_splitting,
    chi_classical_polyhedral,
    gw_smash_shift,
    gw_wedge_rule,
)
from .homology import HomologyGroup, homology, reduced_homology, smith_normal_form
from .motivic import (
    SheafExpression,
    a1_betti_numbers,
    cellular_a1_homology,
    classical_bigraded_betti,
    motivic_cohomology_decomposition,
    tensor_kmw,
)
from .splitting import rzk_homology_groups, stable_splitting, zk_cohomology_groups

__version__ = "0.1.0"
