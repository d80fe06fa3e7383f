"""Queue layouts of planar graphs in at most 42 queues.

Library surface: plane-graph machinery and generators, linear-layout and
rainbow tools with an exact brute-force oracle, straight-line outerplanar
drawings, 5-queue layouts of maximal plane 3-trees, tripod decompositions,
and the end-to-end pipeline producing verified layouts.
"""

from .errors import EmbeddingError, InputError, InvariantError
from .plane_graph import (
    BfsLayering,
    FaceSet,
    PlaneGraph,
    bfs_layering,
    compute_faces,
    gen_maximal_outerplanar,
    gen_maximal_planar,
    gen_planar_3tree,
    named,
    parse_plane_graph,
    serialize_plane_graph,
    triangulate,
    validate,
)

__all__ = [
    "BfsLayering",
    "EmbeddingError",
    "FaceSet",
    "InputError",
    "InvariantError",
    "PlaneGraph",
    "bfs_layering",
    "compute_faces",
    "gen_maximal_outerplanar",
    "gen_maximal_planar",
    "gen_planar_3tree",
    "named",
    "parse_plane_graph",
    "serialize_plane_graph",
    "triangulate",
    "validate",
]
