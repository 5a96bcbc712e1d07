"""Collared combinatorics of a pentagonal substitution tiling.

The package derives the collared tiles, edges and vertices of a pentagon
substitution from scratch, verifies border forcing, builds the associated
cell complex with its substitution chain maps, and computes cohomology of
the complex and of the tiling hull as a direct limit.  A parallel 1D engine
collars arbitrary symbolic substitutions, and a thread model truncates the
inverse limit of the face substitution.
"""

from .apcomplex import (CANONICAL_PLACEMENT_PARAMS, ChainMaps, CWComplex,
                        Placement, PlacementParams, build_complex,
                        canonical_placement, chain_maps, check_commutation,
                        complex_to_dict, connectivity, derive_placement,
                        euler_characteristic, export_dot, subdivided_edge)
from .collaring import (EDGE_CONVENTION, IncidenceTable, compatible_neighbors,
                        edge_from_slot, incidence_table, raw_edge_sides,
                        search_conventions, vertices_from_edge)
from .core import (CollaredEdge, CollaredTile, CollaredVertex,
                   DecorationError, TilespaceError, canonicalize_edge,
                   canonicalize_vertex, normalize_tile, pred, succ)
from .dataset import (PentagonDataset, SubstitutionRule, load_dataset,
                      serialize_dataset, validate_dataset)
from .enumeration import (EnumerationMismatchError, PatternRow,
                          enumerate_collared_tiles, enumeration_report,
                          exclusion_reason, expand_pattern_row,
                          implied_degree3_vertex, load_pattern_rows)
from .forcing import (ForcingReport, PatchReport, patch_consistency,
                      uncollared_projection, verify_border_forcing_k1,
                      verify_border_forcing_uncollared)
from .homology import (AbelianGroup, DirectLimitResult, InducedEndomorphism,
                       SNFResult, cohomology, direct_limit, hull_cohomology,
                       induced_endomorphisms, smith_normal_form)
from .invlimit import (Thread, ThreadError, enumerate_threads, random_thread,
                       realize, shift_left, shift_right)
from .symbolic1d import (CollaredLetter, CollaredSubstitution,
                         SubstitutionError, SymbolicSubstitution, ap_graph_1d,
                         border_forcing_k, collared_letters,
                         collared_substitution, fibonacci, forcing_equations,
                         is_primitive, legal_words, parse_rules_text,
                         subshift_report, thue_morse)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "CANONICAL_PLACEMENT_PARAMS", "ChainMaps",
    "CollaredEdge", "CollaredLetter", "CollaredSubstitution", "CollaredTile",
    "CollaredVertex", "CWComplex", "DecorationError", "DirectLimitResult",
    "EDGE_CONVENTION", "EnumerationMismatchError", "ForcingReport",
    "IncidenceTable", "InducedEndomorphism", "PatchReport", "PatternRow",
    "PentagonDataset", "Placement", "PlacementParams", "SNFResult",
    "SubstitutionError", "SubstitutionRule", "SymbolicSubstitution",
    "Thread", "ThreadError", "TilespaceError", "ap_graph_1d",
    "border_forcing_k", "build_complex", "canonical_placement",
    "canonicalize_edge", "canonicalize_vertex", "chain_maps",
    "check_commutation", "cohomology", "collared_letters",
    "collared_substitution", "compatible_neighbors", "complex_to_dict",
    "connectivity", "derive_placement", "direct_limit", "edge_from_slot",
    "enumerate_collared_tiles", "enumerate_threads", "enumeration_report",
    "euler_characteristic", "exclusion_reason", "expand_pattern_row",
    "export_dot", "fibonacci", "forcing_equations", "hull_cohomology",
    "implied_degree3_vertex", "incidence_table", "induced_endomorphisms",
    "is_primitive", "legal_words", "load_dataset",
    "load_pattern_rows", "normalize_tile", "parse_rules_text",
    "patch_consistency", "pred", "random_thread", "raw_edge_sides",
    "realize", "search_conventions", "serialize_dataset", "shift_left",
    "shift_right", "smith_normal_form", "subdivided_edge", "subshift_report",
    "succ", "thue_morse", "uncollared_projection", "validate_dataset",
    "verify_border_forcing_k1", "verify_border_forcing_uncollared",
    "vertices_from_edge",
]
