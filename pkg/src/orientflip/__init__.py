"""k-edge-connected orientations reached and reconfigured by single edge flips."""

from .connectivity import (
    CutResult,
    TightFamilies,
    delta_minus,
    delta_plus,
    is_k_edge_connected,
    lambda_directed,
    lambda_undirected,
    max_flow,
    min_cut,
    tight_families,
    x_in,
    x_out,
)
from .flip_core import (
    FlipPath,
    FlipSequence,
    SafeVertex,
    augment_connectivity,
    build_flip_path,
    choose_r_set,
    decompose_path_flip,
    improve_step,
    orient_k_connected,
    path_from_minimal_in,
    path_to_minimal_out,
    reconfigure_k,
    safe_sink,
    safe_source,
)
from .local_reach import Obstruction, find_obstruction, reconfigure_strong
from .multigraph import (
    ROOT,
    Orientation,
    UndirectedMultigraph,
    apply_flips,
    build,
    complete_graph,
    cycle_graph,
    diff,
    duplicate,
    flip,
    members,
    strong_orientation,
    strong_skeleton,
    vertex_set,
)

__version__ = "0.1.0"
