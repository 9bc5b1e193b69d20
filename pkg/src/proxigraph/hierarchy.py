"""Agglomerative clustering with single or complete linkage.

Merges greedily join the closest pair of clusters (ties by lexicographically
smallest cluster-id pair) and are recorded all the way down to one cluster;
the returned labeling is the cut at the requested cluster count. Linkage
values are carried by Lance-Williams min/max updates, so single-linkage merge
distances are exact copies of point-pair distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .clustering import Clustering, renumber_by_first_member
from .errors import TargetOutOfRange
from .geometry import PointSet, require_distinct


class Linkage(Enum):
    SINGLE = "single"
    COMPLETE = "complete"


@dataclass(frozen=True)
class Dendrogram:
    """Full merge history: leaves are 0..n-1, internal nodes n..2n-2 in merge
    order; each entry is (cluster-a, cluster-b, merge-distance) with a < b."""

    n_leaves: int
    merges: tuple[tuple[int, int, float], ...]


def agglomerate(ps: PointSet, linkage: Linkage, target: int) -> tuple[Clustering, Dendrogram]:
    """Merge singletons until ``target`` clusters remain; the dendrogram is
    always recorded down to a single cluster."""
    require_distinct(ps)
    n = len(ps)
    if not 1 <= target <= n:
        raise TargetOutOfRange(f"target must be in 1..{n}, got {target}")

    a = ps.as_array()
    diff = a[:, None, :] - a[None, :, :]
    d = np.sqrt((diff**2).sum(axis=2))
    np.fill_diagonal(d, np.inf)

    alive = np.ones(n, dtype=bool)
    ids = list(range(n))  # slot -> current cluster id
    members: list[list[int]] = [[i] for i in range(n)]  # slot -> point members
    take_max = linkage is Linkage.COMPLETE

    cut_labels: list[int] | None = None
    if target == n:
        cut_labels = list(range(n))

    merges: list[tuple[int, int, float]] = []
    for step in range(n - 1):
        dmin = float(d.min())
        cand = np.argwhere(d == dmin)
        best = None
        for si, sj in cand:
            pair = tuple(sorted((ids[si], ids[sj])))
            if best is None or pair < best[0]:
                best = (pair, (min(si, sj), max(si, sj)))
        (ida, idb), (si, sj) = best
        merges.append((ida, idb, dmin))

        row = np.maximum(d[si], d[sj]) if take_max else np.minimum(d[si], d[sj])
        d[si, :] = row
        d[:, si] = row
        d[si, si] = np.inf
        d[sj, :] = np.inf
        d[:, sj] = np.inf
        alive[sj] = False
        ids[si] = n + step
        members[si] = members[si] + members[sj]

        if n - 1 - step == target:
            cut_labels = [0] * n
            cluster = 0
            for slot in range(n):
                if alive[slot]:
                    for point in members[slot]:
                        cut_labels[point] = cluster
                    cluster += 1

    dendro = Dendrogram(n_leaves=n, merges=tuple(merges))
    assert cut_labels is not None
    labels = renumber_by_first_member(cut_labels)
    c = max(labels) + 1
    return Clustering(labels=tuple(labels), n_clusters=c), dendro
