"""Stability of point configurations on expanded degenerations."""

from .configuration import (
    ConfigPoint,
    Configuration,
    enumerate_configurations,
    numerical_support,
    reverse_configuration,
)
from .errors import ExpDegError
from .expansion import (
    AVector,
    all_avectors,
    avector_from_set,
    avector_from_support,
    canonical_support,
    contract,
    expand,
    standard_embed,
)
from .graph import (
    BipartiteSplit,
    DualGraph,
    Edge,
    Vertex,
    bipartify,
    bipartite_orientations,
    blowup_order,
    has_directed_cycle,
    is_bipartitely_oriented,
    reverse_orientation,
    single_edge_graph,
)
from .quotient import closure_order, dual_complex, singularity_report, stabilizer, strata
from .stability import (
    canonical_stabilizing_index,
    destabilizing_witness,
    git_stable,
    lw_stable,
    oracle_scan,
    oracle_stable,
    verify_forcing_lemma,
)
from .weights import (
    INFINITY,
    Corner,
    PointPosition,
    Smooth,
    limit,
    omega,
    omega_closed_form,
    omega_config,
    point_weight,
)

__version__ = "0.1.0"
