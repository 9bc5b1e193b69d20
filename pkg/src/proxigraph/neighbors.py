"""The ten nearest-neighbor graph variants behind one parameterized operation.

Each variant pairs a per-point relation R (among-k-nearest, exactly-k-th
nearest, or furthest) with a symmetrization rule: OR for the plain variants,
AND for the mutual ones, XOR for the asymmetric ones. Distance ties follow
the neighbor-order convention (ascending index), which makes "the k-th
nearest neighbor" unique; the furthest neighbor is rank n-1 in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import KOutOfRange
from .geometry import Graph, PointSet, _d2_rows, knn_rows, require_distinct, require_min_points


class NeighborKind(Enum):
    NEAREST = "nearest"
    KNN = "knn"
    KTH = "kth"
    MUTUAL = "mutual"
    MUTUAL_K = "mutual-k"
    MUTUAL_KTH = "mutual-kth"
    ASYM = "asym"
    ASYM_K = "asym-k"
    ASYM_KTH = "asym-kth"
    FURTHEST = "furthest"


_K_KINDS = {
    NeighborKind.KNN,
    NeighborKind.KTH,
    NeighborKind.MUTUAL_K,
    NeighborKind.MUTUAL_KTH,
    NeighborKind.ASYM_K,
    NeighborKind.ASYM_KTH,
}

_AMONG_KINDS = {NeighborKind.NEAREST, NeighborKind.KNN, NeighborKind.MUTUAL,
                NeighborKind.MUTUAL_K, NeighborKind.ASYM, NeighborKind.ASYM_K}
_EXACT_KINDS = {NeighborKind.KTH, NeighborKind.MUTUAL_KTH, NeighborKind.ASYM_KTH}
_AND_KINDS = {NeighborKind.MUTUAL, NeighborKind.MUTUAL_K, NeighborKind.MUTUAL_KTH}
_XOR_KINDS = {NeighborKind.ASYM, NeighborKind.ASYM_K, NeighborKind.ASYM_KTH}


@dataclass(frozen=True)
class NeighborVariant:
    """A graph variant: the relation kind plus k for the k-parameterized kinds."""

    kind: NeighborKind
    k: int | None = None

    def __post_init__(self):
        if self.kind in _K_KINDS:
            if self.k is None or self.k < 1:
                raise KOutOfRange(f"variant {self.kind.value} requires k >= 1, got {self.k}")
        elif self.k is not None:
            raise KOutOfRange(f"variant {self.kind.value} does not take k")


def _furthest_indices(ps: PointSet) -> list[int]:
    # rank n-1 in neighbor order: maximal (d², index)
    d2 = _d2_rows(ps)
    n = len(ps)
    idx = np.arange(n)
    return [int(np.lexsort((idx, d2[i]))[-1]) for i in range(n)]


def neighbor_graph(ps: PointSet, variant: NeighborVariant) -> Graph:
    """Build the requested nearest-neighbor graph variant.

    Edge {p, q} exists iff R(p,q) OR R(q,p) for the plain kinds, AND for the
    mutual kinds, XOR for the asymmetric kinds.
    """
    require_min_points(ps, 2)
    require_distinct(ps)
    n = len(ps)
    kind = variant.kind

    if kind is NeighborKind.FURTHEST:
        targets = _furthest_indices(ps)
        relation: list[set[int]] = [{t} for t in targets]
    else:
        k = variant.k if kind in _K_KINDS else 1
        if k > n - 1:
            raise KOutOfRange(f"k={k} exceeds n-1={n - 1}")
        rows = knn_rows(ps, k)
        if kind in _EXACT_KINDS:
            relation = [{row[k - 1]} for row in rows]
        else:
            relation = [set(row) for row in rows]

    pairs = []
    if kind in _AND_KINDS:
        for p in range(n):
            for q in relation[p]:
                if p < q and p in relation[q]:
                    pairs.append((p, q))
    elif kind in _XOR_KINDS:
        for p in range(n):
            for q in relation[p]:
                if p not in relation[q]:
                    pairs.append((min(p, q), max(p, q)))
    else:
        for p in range(n):
            for q in relation[p]:
                pairs.append((min(p, q), max(p, q)))
    return Graph.undirected(n, pairs)
