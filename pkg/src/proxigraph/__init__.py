"""proxigraph: neighborhood graphs, proximity graphs, and clusterings over
2-D point sets, rendered as Ipe XML or SVG."""

from .errors import (
    BadParameter,
    BadSectorCount,
    DuplicatePoints,
    EmptyInput,
    KOutOfRange,
    MissingParameter,
    NonpositiveEpsilon,
    ParseError,
    ProxigraphError,
    TargetOutOfRange,
    TooFewPoints,
    TooManyPoints,
    UnknownAlgorithm,
)
from .geometry import (
    Graph,
    GridIndex,
    NeighborOrder,
    Point2,
    PointSet,
    Triangulation,
    delaunay,
    distance,
    emst,
    neighbor_order,
)

__all__ = [
    "BadParameter",
    "BadSectorCount",
    "DuplicatePoints",
    "EmptyInput",
    "Graph",
    "GridIndex",
    "KOutOfRange",
    "MissingParameter",
    "NeighborOrder",
    "NonpositiveEpsilon",
    "ParseError",
    "Point2",
    "PointSet",
    "ProxigraphError",
    "TargetOutOfRange",
    "TooFewPoints",
    "TooManyPoints",
    "Triangulation",
    "UnknownAlgorithm",
    "delaunay",
    "distance",
    "emst",
    "neighbor_order",
]

__version__ = "0.1.0"
