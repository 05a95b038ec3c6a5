"""Acyclic sets and feedback vertex sets in planar oriented graphs.

The package has three layers:

* exact machinery: graph types, rotation-system embeddings, and
  branch-and-bound solvers for minimum feedback vertex set / maximum acyclic
  set / maximum induced forest, each paired with a brute-force oracle;
* the recursive construction of planar oriented graphs whose maximum acyclic
  set meets the ceil((n(g-2)+1)/(g-1)) upper bound with equality;
* a reproduction pipeline that scans plane triangulations for tight
  induced-forest examples and sweeps all of their orientations.
"""

from .bounds import gr_bound, table1_bound
from .construction import (ConstructionCertificate, construct, pad_to_order,
                           theorem_bound)
from .embedding import (FaceWalk, PlaneEmbedding, euler_characteristic,
                        insert_path_in_face, trace_faces)
from .graphs import (Digraph, OrientedGraph, UndirectedGraph, digirth,
                     is_acyclic, orientations, read_edge_list,
                     read_undirected_edge_list, reverse, write_edge_list)
from .scan import (Checkpoint, EmbeddedGraph, ScanRecord, SweepResult,
                   check_problem1, find_tight, fixture_bytes, is_triangulation,
                   load_fixtures, orientation_sweep, read_planar_code,
                   write_planar_code)
from .solvers import (SolverWitness, brute_force_max_induced_forest,
                      brute_force_min_fvs, has_acyclic_set_of_size,
                      max_acyclic_set, max_induced_forest, min_fvs,
                      pair_in_some_min_fvs)

__version__ = "0.1.0"

__all__ = [
    "Checkpoint", "ConstructionCertificate", "Digraph", "EmbeddedGraph",
    "FaceWalk", "OrientedGraph", "PlaneEmbedding", "ScanRecord",
    "SolverWitness", "SweepResult", "UndirectedGraph",
    "brute_force_max_induced_forest", "brute_force_min_fvs", "check_problem1",
    "construct", "digirth", "euler_characteristic", "find_tight",
    "fixture_bytes", "gr_bound", "has_acyclic_set_of_size",
    "insert_path_in_face", "is_acyclic", "is_triangulation", "load_fixtures",
    "max_acyclic_set", "max_induced_forest", "min_fvs", "orientation_sweep",
    "orientations", "pad_to_order", "pair_in_some_min_fvs", "read_edge_list",
    "read_planar_code", "read_undirected_edge_list", "reverse",
    "table1_bound", "theorem_bound", "trace_faces", "write_edge_list",
    "write_planar_code",
]
