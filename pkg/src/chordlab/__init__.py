"""chordlab: exact search and exhaustive desk-scale verification of
bound vertices of longest paths and chords of longest cycles in cubic
graphs."""

from .graphs import (
    Graph,
    build_graph,
    components_after_deletion,
    connectivity_at_least,
    contract_set,
    is_cubic,
)
from .graph6 import parse_graph6, stream_corpus, write_graph6
from .coloring import pick_color_class, subdivision_transform, three_color_cycle_plus
from .errors import InvariantViolation
from .extender import (
    extend_path,
    extend_path_adjacent,
    precheck,
    verify_chords,
    verify_zhan,
)
from .generate import (
    enumerate_cubic,
    gen_cycle_plus_instance,
    gen_lemma_instance,
    random_cubic,
)
from .second_cycle import second_hamilton_cycle, verify_parity_lemma
from .search import (
    Cycle,
    Path,
    PathReport,
    chords,
    hamilton_count_through_edge,
    hamilton_cycles,
    internal_bound_vertices,
    longest_cycles,
    longest_xy_paths,
)

__all__ = [
    "Graph",
    "build_graph",
    "is_cubic",
    "connectivity_at_least",
    "components_after_deletion",
    "contract_set",
    "parse_graph6",
    "write_graph6",
    "stream_corpus",
    "Path",
    "Cycle",
    "PathReport",
    "longest_xy_paths",
    "internal_bound_vertices",
    "longest_cycles",
    "hamilton_cycles",
    "hamilton_count_through_edge",
    "chords",
    "enumerate_cubic",
    "random_cubic",
    "gen_lemma_instance",
    "gen_cycle_plus_instance",
    "subdivision_transform",
    "three_color_cycle_plus",
    "pick_color_class",
    "verify_parity_lemma",
    "second_hamilton_cycle",
    "precheck",
    "extend_path",
    "extend_path_adjacent",
    "verify_zhan",
    "verify_chords",
    "InvariantViolation",
]
