"""Shared clustering result type.

Labels are integers 0..c-1 plus the NOISE sentinel (-1) used by the
density-based methods. Centroid-based results never contain NOISE.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Point2

#: sentinel label for points assigned to no cluster
NOISE = -1


@dataclass(frozen=True)
class Clustering:
    """Per-point cluster labels plus optional derived geometry."""

    labels: tuple[int, ...]
    n_clusters: int
    centers: tuple[Point2, ...] | None = None
    medoids: tuple[int, ...] | None = None

    def __post_init__(self):
        seen = set()
        for lab in self.labels:
            if lab != NOISE and not 0 <= lab < self.n_clusters:
                raise ValueError(f"label {lab} outside 0..{self.n_clusters - 1}")
            seen.add(lab)
        for cid in range(self.n_clusters):
            if cid not in seen:
                raise ValueError(f"cluster {cid} has no members")

    def members(self, cluster_id: int) -> list[int]:
        return [i for i, lab in enumerate(self.labels) if lab == cluster_id]

    def noise_points(self) -> list[int]:
        return [i for i, lab in enumerate(self.labels) if lab == NOISE]


def renumber_by_first_member(raw_labels: list[int]) -> list[int]:
    """Renumber cluster ids so clusters sort by their smallest member index.

    NOISE labels pass through unchanged.
    """
    mapping: dict[int, int] = {}
    out = []
    for lab in raw_labels:
        if lab == NOISE:
            out.append(NOISE)
            continue
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out.append(mapping[lab])
    return out
