"""Exact graph invariants and long-cycle theorem verification for
small graphs: toughness, connectivity, circumference, segment
decompositions of longest cycles, constructive cycle rewirings, and an
exhaustive small-graph verification harness."""

from .graph import (
    Graph, Cycle, Path,
    Graph6Error, parse_graph6, write_graph6, parse_edge_list,
    petersen, cycle_graph, complete_graph, path_graph, complete_bipartite,
    delete_vertices, component_count, components, is_connected,
    canonical_form, canonical_relabel, is_isomorphic, cycle_step,
)
from .rational import ExactRational
from .invariants import (
    min_degree, connectivity, toughness, is_t_tough, circumference,
    is_hamiltonian, is_dominating_cycle, longest_path_outside,
    all_longest_paths_outside, enumerate_longest_cycles,
    InvariantReport, invariant_report,
)
from .enumeration import connected_graphs, count_connected_graphs
from .structure import (
    SegmentDecomposition, IntermediatePath, LemmaVerdict, DecompositionError,
    decompose, intermediate_paths, upsilon, check_lemma1, check_lemma2,
    check_lemma3, check_claims_1_2, check_claims_3_4, check_voss,
    extreme_pairs,
)
from .extension import (
    RewireCandidate, RewireError, splice_basic, rewire_two_edges,
    claim_rewires, greedy_extend,
)
from .harness import (
    TheoremVerdict, SweepReport, verify_theoremA, verify_theoremB,
    verify_theorem1, enumerate_connected_graphs, sweep,
)

__version__ = "0.1.0"
