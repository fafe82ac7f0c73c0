"""Decide when a growing family of compact convex sets separates two points.

The core is a union-find whose nodes carry the crossing parity of tree
paths with the segment from s to t; a quadtree subdivision driver and a
brute-force flood-fill oracle are built on top of it.
"""

from .errors import (
    ContainsTerminalError,
    ConvsepError,
    DegenerateInputError,
    InvalidAnchorError,
    InvalidBodyError,
    NoIntersectionError,
    ParseError,
    SameSetError,
)
from .geometry import (
    Anchor,
    ConvexBody,
    Point,
    Polyline,
    bodies_intersect,
    connector_curve,
    contains_point,
    intersection_witness,
    orient,
    orient_perturbed,
    polyline_crossing_parity,
    representative_point,
    segment_crossing_parity,
)
from .index import (
    InsertReport,
    SeparationIndex,
    grid_neighbor_finder,
    naive_neighbor_finder,
    new_index,
)
from .oracle import floodfill_separated, green_path_exists, random_box_stream
from .parity_uf import ParityUnionFind, UnionFind
from .subdivision import (
    Color,
    DyadicBox,
    Outcome,
    SubdivisionEngine,
    annulus_oracle,
    disc_oracle,
    polygon_oracle,
    union_oracle,
)

__version__ = "0.1.0"
