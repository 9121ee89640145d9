"""Hamilton cycles in s-stable Kneser graphs, streamed one vertex at a time.

Vertices are the k-subsets of {1..n} whose elements keep cyclic distance at
least s (s = 2 gives the Schrijver graph); edges join disjoint subsets.  The
generator walks a Hamilton cycle with O(n) time and memory per vertex; the
oracle re-derives every structural ingredient by brute force at desk scale.
"""

from .bitvertex import (
    CardinalityError,
    MatchProfile,
    ParameterError,
    Params,
    Run,
    StabilityError,
    Vertex,
    VertexError,
    glider_starts,
    is_edge,
    match_profile,
)
from .connector import (
    Connector,
    connector_head,
    connector_profile,
    connector_tail,
    descend,
    four_cycle,
    is_connectable,
    is_tree_head,
)
from .factor import OrbitCycle, enumerate_factor, orbit_cycle, vertex_from_profile
from .hamilton import HamiltonGenerator, Snapshot, default_start, generate
from .oracle import (
    DEFAULT_GUARD,
    CountMismatchError,
    VerificationReport,
    count_formula,
    enumerate_vertices,
    verify_instance,
)
from .profiles import (
    GapBlockSeq,
    canonical_profile,
    is_anchored,
    min_rotation,
    profile_at,
    profile_of,
    render_profile,
)

__version__ = "0.1.0"

__all__ = [
    "CardinalityError",
    "Connector",
    "CountMismatchError",
    "DEFAULT_GUARD",
    "GapBlockSeq",
    "HamiltonGenerator",
    "MatchProfile",
    "OrbitCycle",
    "ParameterError",
    "Params",
    "Run",
    "Snapshot",
    "StabilityError",
    "VerificationReport",
    "Vertex",
    "VertexError",
    "canonical_profile",
    "connector_head",
    "connector_profile",
    "connector_tail",
    "count_formula",
    "default_start",
    "descend",
    "enumerate_factor",
    "enumerate_vertices",
    "four_cycle",
    "generate",
    "glider_starts",
    "is_anchored",
    "is_connectable",
    "is_edge",
    "is_tree_head",
    "match_profile",
    "min_rotation",
    "orbit_cycle",
    "profile_at",
    "profile_of",
    "render_profile",
    "verify_instance",
    "vertex_from_profile",
]
