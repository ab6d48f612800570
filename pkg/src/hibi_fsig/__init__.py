"""Generalized F-signatures of Hibi rings by exact volume and descent counting."""

from .alcove import (DescentResult, HamiltonianPath, complement, find_hamiltonian_path,
                     fsig_descent, path_from_order, transform_to_alcoved)
from .analysis import FSigReport, HibiSetup, compute_fsig, prepare
from .cell import CellPolytope, build_cell, interior_point, membership
from .conic import ConicRegion, build_conic_region, enumerate_conic_classes, reduce_to_class
from .cycles import (Circuit, FundamentalCycle, SpanningTree, choose_spanning_tree,
                     enumerate_circuits, fundamental_cycles)
from .frobenius import FrobeniusTally, convergence_report, frobenius_tally
from .polytope import HPolytope, enumerate_vertices, triangulate, volume
from .poset import HasseHat, Poset, PosetError, build_hat, chain_poset, is_pure, load_poset, parse_poset
from .segre import (SegreSpec, build_segre_poset, eulerian, fsig_segre_2var, fsig_segre_theorem,
                    fsig_segre_two_rings, hypersimplex_volume, segre_conic_classes)

__all__ = [
    "CellPolytope", "Circuit", "ConicRegion", "DescentResult", "FSigReport", "FrobeniusTally",
    "FundamentalCycle", "HPolytope", "HamiltonianPath", "HasseHat", "HibiSetup", "Poset",
    "PosetError", "SegreSpec", "SpanningTree",
    "build_cell", "build_conic_region", "build_hat", "build_segre_poset", "chain_poset",
    "choose_spanning_tree", "complement", "compute_fsig", "convergence_report",
    "enumerate_circuits", "enumerate_conic_classes", "enumerate_vertices", "eulerian",
    "find_hamiltonian_path", "frobenius_tally", "fsig_descent", "fsig_segre_2var",
    "fsig_segre_theorem", "fsig_segre_two_rings", "fundamental_cycles", "hypersimplex_volume",
    "interior_point", "is_pure", "load_poset", "membership", "parse_poset", "path_from_order",
    "prepare", "reduce_to_class", "segre_conic_classes", "transform_to_alcoved", "triangulate",
    "volume",
]
