"""Density-based clustering: DBSCAN, HDBSCAN, and mean shift.

DBSCAN shares the inclusive ε-range semantics of the ε-graph and counts the
point itself toward min_pts. HDBSCAN builds the mutual-reachability MST with
the shared MST primitive, condenses the resulting single-linkage hierarchy at
min_cluster_size, and selects clusters by excess of mass; the hierarchy root
is selectable, with its birth at the root split's λ, so a lone dense blob
plus stragglers still yields a cluster instead of all-noise. Mean shift uses
a flat kernel and merges converged modes by single linkage at merge_tol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .clustering import NOISE, Clustering, renumber_by_first_member
from .errors import BadParameter
from .geometry import (
    GRID_THRESHOLD,
    GridIndex,
    Point2,
    PointSet,
    minimum_spanning_edges,
    range_query,
    require_distinct,
)

MEANSHIFT_MAX_ITER = 300


@dataclass(frozen=True)
class DbscanParams:
    epsilon: float
    min_pts: int

    def __post_init__(self):
        if not self.epsilon > 0:
            raise BadParameter(f"epsilon must be > 0, got {self.epsilon}")
        if self.min_pts < 1:
            raise BadParameter(f"min_pts must be >= 1, got {self.min_pts}")


@dataclass(frozen=True)
class HdbscanParams:
    min_pts: int
    min_cluster_size: int | None = None

    def __post_init__(self):
        if self.min_pts < 1:
            raise BadParameter(f"min_pts must be >= 1, got {self.min_pts}")
        if self.min_cluster_size is not None and self.min_cluster_size < 2:
            raise BadParameter(f"min_cluster_size must be >= 2, got {self.min_cluster_size}")

    @property
    def effective_min_cluster_size(self) -> int:
        # defaults to min_pts, floored at 2 to honor the type invariant
        if self.min_cluster_size is not None:
            return self.min_cluster_size
        return max(2, self.min_pts)


@dataclass(frozen=True)
class MeanShiftParams:
    bandwidth: float
    merge_tol: float | None = None
    max_iter: int = MEANSHIFT_MAX_ITER

    def __post_init__(self):
        if not self.bandwidth > 0:
            raise BadParameter(f"bandwidth must be > 0, got {self.bandwidth}")
        if self.merge_tol is not None and not self.merge_tol > 0:
            raise BadParameter(f"merge_tol must be > 0, got {self.merge_tol}")
        if self.max_iter < 1:
            raise BadParameter(f"max_iter must be >= 1, got {self.max_iter}")

    @property
    def effective_merge_tol(self) -> float:
        return self.merge_tol if self.merge_tol is not None else self.bandwidth / 20.0


# ---------------------------------------------------------------------------
# DBSCAN
# ---------------------------------------------------------------------------


def dbscan(ps: PointSet, params: DbscanParams) -> Clustering:
    """Classic DBSCAN; cluster ids in discovery order, noise labeled -1.

    A point is core when its inclusive ε-neighborhood plus itself reaches
    min_pts. The seed scan runs in ascending index order, so border points
    reachable from several clusters join the first one expanded.
    """
    require_distinct(ps)
    n = len(ps)
    if n == 0:
        return Clustering(labels=(), n_clusters=0)
    eps = params.epsilon
    min_pts = params.min_pts
    use_grid = n > GRID_THRESHOLD
    grid = GridIndex(ps) if use_grid else None

    def neighbors(i: int) -> list[int]:
        p = ps[i]
        if grid is not None:
            return grid.range_query(p.x, p.y, eps, exclude=i)
        return range_query(ps, p.x, p.y, eps, exclude=i, use_grid=False)

    UNSEEN = -2
    labels = [UNSEEN] * n
    cluster = 0
    for i in range(n):
        if labels[i] != UNSEEN:
            continue
        seed_neighbors = neighbors(i)
        if len(seed_neighbors) + 1 < min_pts:
            labels[i] = NOISE
            continue
        labels[i] = cluster
        queue = list(seed_neighbors)
        qi = 0
        while qi < len(queue):
            q = queue[qi]
            qi += 1
            if labels[q] == NOISE:
                labels[q] = cluster  # border point
            if labels[q] != UNSEEN:
                continue
            labels[q] = cluster
            q_neighbors = neighbors(q)
            if len(q_neighbors) + 1 >= min_pts:
                queue.extend(q_neighbors)
        cluster += 1
    return Clustering(labels=tuple(labels), n_clusters=cluster)


# ---------------------------------------------------------------------------
# HDBSCAN
# ---------------------------------------------------------------------------


@dataclass
class _CondensedCluster:
    parent: int | None
    birth: float
    children: list[int] = field(default_factory=list)
    fallouts: list[tuple[int, float]] = field(default_factory=list)  # (point, λ)
    exits: list[tuple[float, int]] = field(default_factory=list)  # (λ, member count)

    def stability(self) -> float:
        s = sum(lam - self.birth for _, lam in self.fallouts)
        s += sum(count * (lam - self.birth) for lam, count in self.exits)
        return s


def _core_distances(ps: PointSet, min_pts: int) -> np.ndarray:
    n = len(ps)
    k = min(min_pts, n)
    a = ps.as_array()
    core = np.zeros(n)
    if k <= 1:
        return core
    for i in range(n):
        dx = a[:, 0] - a[i, 0]
        dy = a[:, 1] - a[i, 1]
        d2 = dx * dx + dy * dy
        d2[i] = np.inf
        core[i] = math.sqrt(float(np.partition(d2, k - 2)[k - 2]))
    return core


def hdbscan(ps: PointSet, params: HdbscanParams) -> Clustering:
    """HDBSCAN over the mutual-reachability graph.

    Pipeline: core distances (self counts toward min_pts), mutual
    reachability d_m = max(core_p, core_q, d(p,q)), MST, single-linkage
    hierarchy, condensing at min_cluster_size, excess-of-mass selection,
    noise for points in no selected cluster.
    """
    require_distinct(ps)
    n = len(ps)
    mcs = params.effective_min_cluster_size
    if n == 0:
        return Clustering(labels=(), n_clusters=0)
    if n < mcs or n < 2:
        return Clustering(labels=(NOISE,) * n, n_clusters=0)

    core = _core_distances(ps, params.min_pts)
    a = ps.as_array()
    xs, ys = a[:, 0], a[:, 1]

    def reach_row(u: int) -> np.ndarray:
        dx = xs - xs[u]
        dy = ys - ys[u]
        d = np.sqrt(dx * dx + dy * dy)
        return np.maximum(np.maximum(core, core[u]), d)

    mst = minimum_spanning_edges(n, reach_row)
    mst.sort(key=lambda e: (e[2], e[0], e[1]))

    # single-linkage hierarchy over the sorted MST edges
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    node_of: list[int] = list(range(n))  # component root -> hierarchy node id
    children: dict[int, tuple[int, int]] = {}
    node_dist: dict[int, float] = {}
    node_size: dict[int, int] = {i: 1 for i in range(n)}
    next_node = n
    for i, j, w in mst:
        ri, rj = find(i), find(j)
        na, nb = node_of[ri], node_of[rj]
        children[next_node] = (na, nb)
        node_dist[next_node] = w
        node_size[next_node] = node_size[na] + node_size[nb]
        parent[rj] = ri
        node_of[ri] = next_node
        next_node += 1
    root = next_node - 1

    # condense: walk top-down; a split is real only when both children reach
    # min_cluster_size, otherwise the small side falls out of the cluster
    clusters: list[_CondensedCluster] = []

    def leaves(node: int) -> list[int]:
        out = []
        stack = [node]
        while stack:
            v = stack.pop()
            if v < n:
                out.append(v)
            else:
                stack.extend(children[v])
        return out

    root_cluster = _CondensedCluster(parent=None, birth=1.0 / node_dist[root])
    clusters.append(root_cluster)
    walk: list[tuple[int, int]] = [(root, 0)]  # (hierarchy node, condensed id)
    while walk:
        node, cid = walk.pop()
        if node < n:
            # unreachable: every walked node has >= mcs >= 2 leaves
            raise RuntimeError("condense walk reached a leaf")
        lam = 1.0 / node_dist[node]
        ca, cb = children[node]
        sa, sb = node_size[ca], node_size[cb]
        if sa >= mcs and sb >= mcs:
            clusters[cid].exits.append((lam, sa + sb))
            for child in (ca, cb):
                clusters.append(_CondensedCluster(parent=cid, birth=lam))
                new_id = len(clusters) - 1
                clusters[cid].children.append(new_id)
                walk.append((child, new_id))
        elif sa < mcs and sb < mcs:
            for leaf in leaves(node):
                clusters[cid].fallouts.append((leaf, lam))
        else:
            small, big = (ca, cb) if sa < mcs else (cb, ca)
            for leaf in leaves(small):
                clusters[cid].fallouts.append((leaf, lam))
            walk.append((big, cid))

    # excess-of-mass selection, bottom-up (children have higher ids)
    stab = [c.stability() for c in clusters]
    selected = [False] * len(clusters)
    total = [0.0] * len(clusters)
    for cid in range(len(clusters) - 1, -1, -1):
        child_total = sum(total[ch] for ch in clusters[cid].children)
        if stab[cid] > child_total:
            selected[cid] = True
            total[cid] = stab[cid]
        else:
            total[cid] = child_total
    # keep only the topmost selected clusters
    final = [False] * len(clusters)
    prune = [0]
    while prune:
        cid = prune.pop()
        if selected[cid]:
            final[cid] = True
        else:
            prune.extend(clusters[cid].children)

    labels = [NOISE] * n
    for cid, cluster in enumerate(clusters):
        for point, lam in cluster.fallouts:
            anchor: int | None = cid
            while anchor is not None and not final[anchor]:
                anchor = clusters[anchor].parent
            if anchor is not None and lam > clusters[anchor].birth:
                labels[point] = anchor

    compact = renumber_by_first_member(labels)
    c = max(compact) + 1 if any(lab != NOISE for lab in compact) else 0
    return Clustering(labels=tuple(compact), n_clusters=c)


# ---------------------------------------------------------------------------
# Mean shift
# ---------------------------------------------------------------------------


def mean_shift(ps: PointSet, params: MeanShiftParams) -> Clustering:
    """Flat-kernel mean shift: every point iterates toward the mean of its
    bandwidth window; converged modes within merge_tol of each other merge
    into one cluster (single linkage over modes)."""
    require_distinct(ps)
    n = len(ps)
    if n == 0:
        return Clustering(labels=(), n_clusters=0)
    bw = params.bandwidth
    tol = params.effective_merge_tol
    stop = tol / 10.0
    a = ps.as_array()
    use_grid = n > GRID_THRESHOLD
    grid = GridIndex(ps) if use_grid else None

    modes = np.empty((n, 2))
    bw2 = bw * bw
    for i in range(n):
        x, y = float(a[i, 0]), float(a[i, 1])
        for _ in range(params.max_iter):
            if grid is not None:
                hits = grid.range_query(x, y, bw)
                window = a[hits]
            else:
                dx = a[:, 0] - x
                dy = a[:, 1] - y
                window = a[dx * dx + dy * dy <= bw2]
            if len(window) == 0:  # cannot happen with an inclusive window
                break
            nx = float(window[:, 0].mean())
            ny = float(window[:, 1].mean())
            shift = math.sqrt((nx - x) * (nx - x) + (ny - y) * (ny - y))
            x, y = nx, ny
            if shift < stop:
                break
        modes[i] = (x, y)

    # single-linkage merge of modes at threshold merge_tol
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tol2 = tol * tol
    for i in range(n):
        dx = modes[i + 1 :, 0] - modes[i, 0]
        dy = modes[i + 1 :, 1] - modes[i, 1]
        for off in np.nonzero(dx * dx + dy * dy <= tol2)[0]:
            ri, rj = find(i), find(i + 1 + int(off))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    raw = [find(i) for i in range(n)]
    labels = renumber_by_first_member(raw)
    c = max(labels) + 1
    centers = []
    for cid in range(c):
        anchor = labels.index(cid)  # lowest member index
        centers.append(Point2(float(modes[anchor, 0]), float(modes[anchor, 1])))
    return Clustering(labels=tuple(labels), n_clusters=c, centers=tuple(centers))
