"""Partitional clustering: k-means (uniform or ++ seeding) and k-medoids.

Both algorithms alternate assignment and update steps until the labeling
stops changing (exact fixpoint, no motion tolerance) or max_iter is reached.
``kmeans_iterations`` / ``kmedoids_iterations`` expose the per-iteration
states so callers can watch the objective, which is non-increasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from .clustering import Clustering, renumber_by_first_member
from .errors import KOutOfRange
from .geometry import Point2, PointSet, require_distinct
from .rng import SplitMix64

DEFAULT_MAX_ITER = 100


class KMeansInit(Enum):
    UNIFORM = "uniform"
    PLUSPLUS = "plusplus"


@dataclass(frozen=True)
class IterationState:
    """Snapshot after one assignment step."""

    labels: tuple[int, ...]
    cost: float


def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise KOutOfRange(f"k must be in 1..{n}, got {k}")


def _plusplus_centers(a: np.ndarray, k: int, rng: SplitMix64) -> np.ndarray:
    n = len(a)
    chosen = [rng.below(n)]
    d2 = ((a - a[chosen[0]]) ** 2).sum(axis=1)
    while len(chosen) < k:
        nxt = rng.weighted(d2.tolist())
        chosen.append(nxt)
        d2 = np.minimum(d2, ((a - a[nxt]) ** 2).sum(axis=1))
    return a[chosen].copy()


def kmeans_iterations(
    ps: PointSet,
    k: int,
    seed: int = 0,
    init: KMeansInit = KMeansInit.UNIFORM,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Iterator[IterationState]:
    """Lloyd iterations; yields labels and within-cluster squared cost after
    every assignment step, stopping at the label fixpoint or max_iter."""
    require_distinct(ps)
    n = len(ps)
    _check_k(n, k)
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    a = ps.as_array()
    rng = SplitMix64(seed)
    if init is KMeansInit.PLUSPLUS:
        centers = _plusplus_centers(a, k, rng)
    else:
        centers = a[rng.sample(n, k)].copy()

    prev: tuple[int, ...] | None = None
    for _ in range(max_iter):
        d2 = ((a[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        labels = d2.argmin(axis=1)  # argmin takes the lowest centroid index on ties
        cost = float(d2[np.arange(n), labels].sum())

        # re-seed empty clusters with the point farthest from its centroid;
        # points that are the sole member of their cluster stay put so no
        # cluster is stranded (one exists by pigeonhole whenever one is empty)
        counts = np.bincount(labels, minlength=k)
        if (counts == 0).any():
            point_d2 = d2[np.arange(n), labels].copy()
            for cid in range(k):
                if counts[cid] > 0:
                    continue
                eligible = np.where(counts[labels] > 1, point_d2, -1.0)
                far = int(eligible.argmax())
                cost -= float(point_d2[far])
                counts[labels[far]] -= 1
                labels[far] = cid
                counts[cid] = 1
                centers[cid] = a[far]
                point_d2[far] = 0.0

        state = IterationState(labels=tuple(int(x) for x in labels), cost=cost)
        yield state
        if state.labels == prev:
            break
        prev = state.labels
        for cid in range(k):
            centers[cid] = a[labels == cid].mean(axis=0)


def kmeans(
    ps: PointSet,
    k: int,
    seed: int = 0,
    init: KMeansInit = KMeansInit.UNIFORM,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Clustering:
    """k-means clustering; returns labels and final centroids, with clusters
    renumbered by first member index."""
    final = None
    for final in kmeans_iterations(ps, k, seed=seed, init=init, max_iter=max_iter):
        pass
    assert final is not None
    a = ps.as_array()
    labels = renumber_by_first_member(list(final.labels))
    centers = []
    for cid in range(k):
        members = [i for i, lab in enumerate(labels) if lab == cid]
        mean = a[members].mean(axis=0)
        centers.append(Point2(float(mean[0]), float(mean[1])))
    return Clustering(labels=tuple(labels), n_clusters=k, centers=tuple(centers))


def _dist_to(a: np.ndarray, targets: list[int]) -> np.ndarray:
    diff = a[:, None, :] - a[targets][None, :, :]
    return np.sqrt((diff**2).sum(axis=2))


def _pairwise_sums(sub: np.ndarray) -> np.ndarray:
    # row sums of the pairwise distance matrix, chunked to bound memory
    m = len(sub)
    out = np.zeros(m)
    step = 512
    for lo in range(0, m, step):
        diff = sub[lo : lo + step, None, :] - sub[None, :, :]
        out[lo : lo + step] = np.sqrt((diff**2).sum(axis=2)).sum(axis=1)
    return out


def kmedoids_iterations(
    ps: PointSet, k: int, seed: int = 0, max_iter: int = DEFAULT_MAX_ITER
) -> Iterator[tuple[IterationState, tuple[int, ...]]]:
    """Alternating k-medoids (Voronoi-style update): yields the state after
    each assignment plus the medoid indices in force for that assignment.

    A member replaces its cluster's medoid only when it strictly decreases
    the within-cluster distance sum; ties keep the incumbent, then prefer the
    lowest index. Cost is the total point-to-medoid distance.
    """
    require_distinct(ps)
    n = len(ps)
    _check_k(n, k)
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    a = ps.as_array()
    rng = SplitMix64(seed)
    medoids = sorted(rng.sample(n, k))

    for _ in range(max_iter):
        d = _dist_to(a, medoids)
        assign = d.argmin(axis=1)  # ties to the lowest medoid point index
        cost = float(d[np.arange(n), assign].sum())
        yield IterationState(labels=tuple(int(x) for x in assign), cost=cost), tuple(medoids)

        new_medoids = []
        for pos, med in enumerate(medoids):
            members = np.nonzero(assign == pos)[0]
            sums = _pairwise_sums(a[members])
            best = int(members[np.lexsort((members, sums))[0]])
            incumbent_sum = float(sums[np.nonzero(members == med)[0][0]])
            new_medoids.append(best if float(sums.min()) < incumbent_sum else med)
        new_medoids.sort()
        if new_medoids == medoids:
            break
        medoids = new_medoids


def kmedoids(ps: PointSet, k: int, seed: int = 0, max_iter: int = DEFAULT_MAX_ITER) -> Clustering:
    """k-medoids clustering; returns labels and medoid point indices."""
    final = None
    for final in kmedoids_iterations(ps, k, seed=seed, max_iter=max_iter):
        pass
    assert final is not None
    state, medoids = final
    labels = renumber_by_first_member(list(state.labels))
    ordered = [0] * k
    for pos, med in enumerate(medoids):
        ordered[labels[med]] = med
    return Clustering(labels=tuple(labels), n_clusters=k, medoids=tuple(ordered))
