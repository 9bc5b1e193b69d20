"""Region-based proximity graphs: Gabriel, relative-neighborhood,
sphere-of-influence, ε-graph, Urquhart, and Yao.

Boundary conventions (fixed for determinism and to preserve the classical
containment chain EMST ⊆ RNG ⊆ Gabriel ⊆ Delaunay):

* Gabriel: a point exactly on the diameter circle blocks the edge.
* RNG: a point exactly on the lune boundary does not block.
* Sphere of influence: tangent disks count as overlapping.
* ε-graph: inclusive comparison (d <= ε), shared with DBSCAN.
* Yao: sectors are half-open, counterclockwise from the positive x-axis.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import BadSectorCount, NonpositiveEpsilon
from .geometry import (
    GRID_THRESHOLD,
    Graph,
    GridIndex,
    PointSet,
    delaunay,
    knn_rows,
    require_distinct,
    require_min_points,
)

_TWO_PI = 2.0 * math.pi


def _candidate_edges(ps: PointSet) -> list[tuple[int, int]]:
    # Gabriel and RNG edges are Delaunay edges (their empty witness regions
    # contain an empty circle through both endpoints), so testing Delaunay
    # candidates suffices for n >= 3; n == 2 is the single pair.
    if len(ps) == 2:
        return [(0, 1)]
    return sorted(delaunay(ps).edges)


def gabriel_graph(ps: PointSet) -> Graph:
    """Edges whose diameter disk (closed) contains no other point."""
    require_min_points(ps, 2)
    require_distinct(ps)
    a = ps.as_array()
    xs, ys = a[:, 0], a[:, 1]
    edges = []
    for i, j in _candidate_edges(ps):
        dx = xs[i] - xs[j]
        dy = ys[i] - ys[j]
        d2ij = dx * dx + dy * dy
        d2i = (xs - xs[i]) ** 2 + (ys - ys[i]) ** 2
        d2j = (xs - xs[j]) ** 2 + (ys - ys[j]) ** 2
        blocked = d2i + d2j <= d2ij
        blocked[i] = blocked[j] = False
        if not blocked.any():
            edges.append((i, j))
    return Graph.undirected(len(ps), edges)


def rng_graph(ps: PointSet) -> Graph:
    """Relative neighborhood graph: edges with an empty open lune."""
    require_min_points(ps, 2)
    require_distinct(ps)
    a = ps.as_array()
    xs, ys = a[:, 0], a[:, 1]
    edges = []
    for i, j in _candidate_edges(ps):
        dx = xs[i] - xs[j]
        dy = ys[i] - ys[j]
        d2ij = dx * dx + dy * dy
        d2i = (xs - xs[i]) ** 2 + (ys - ys[i]) ** 2
        d2j = (xs - xs[j]) ** 2 + (ys - ys[j]) ** 2
        blocked = np.maximum(d2i, d2j) < d2ij
        blocked[i] = blocked[j] = False
        if not blocked.any():
            edges.append((i, j))
    return Graph.undirected(len(ps), edges)


def soi_graph(ps: PointSet) -> Graph:
    """Sphere-of-influence graph: disks of nearest-neighbor radius overlap."""
    require_min_points(ps, 2)
    require_distinct(ps)
    n = len(ps)
    radii = soi_radii(ps)
    a = ps.as_array()
    xs, ys = a[:, 0], a[:, 1]
    edges = []
    for i in range(n):
        dx = xs[i + 1 :] - xs[i]
        dy = ys[i + 1 :] - ys[i]
        d = np.sqrt(dx * dx + dy * dy)
        hits = np.nonzero(d <= radii[i] + radii[i + 1 :])[0]
        edges.extend((i, i + 1 + int(j)) for j in hits)
    return Graph.undirected(n, edges)


def soi_radii(ps: PointSet) -> np.ndarray:
    """Per-point nearest-neighbor distances (the influence radii)."""
    rows = knn_rows(ps, 1)
    a = ps.as_array()
    out = np.empty(len(ps))
    for i, row in enumerate(rows):
        j = row[0]
        dx = a[i, 0] - a[j, 0]
        dy = a[i, 1] - a[j, 1]
        out[i] = math.sqrt(dx * dx + dy * dy)
    return out


def epsilon_graph(ps: PointSet, epsilon: float) -> Graph:
    """Edges between points within (inclusive) distance epsilon."""
    if not epsilon > 0:
        raise NonpositiveEpsilon(f"epsilon must be > 0, got {epsilon}")
    require_distinct(ps)
    n = len(ps)
    if n <= 1:
        return Graph(n=n, edges=frozenset(), directed=False)
    eps2 = epsilon * epsilon
    edges = []
    if n > GRID_THRESHOLD:
        grid = GridIndex(ps)
        for i, p in enumerate(ps):
            for j in grid.range_query(p.x, p.y, epsilon, exclude=i):
                if j > i:
                    edges.append((i, j))
    else:
        a = ps.as_array()
        xs, ys = a[:, 0], a[:, 1]
        for i in range(n):
            dx = xs[i + 1 :] - xs[i]
            dy = ys[i + 1 :] - ys[i]
            hits = np.nonzero(dx * dx + dy * dy <= eps2)[0]
            edges.extend((i, i + 1 + int(j)) for j in hits)
    return Graph.undirected(n, edges)


def urquhart_graph(ps: PointSet) -> Graph:
    """Delaunay edges minus the longest edge of each triangle.

    Length ties mark the tied edge with the smallest sorted index pair.
    Collinear inputs pass the Delaunay path edges through unchanged.
    """
    require_min_points(ps, 2)
    require_distinct(ps)
    n = len(ps)
    if n == 2:
        return Graph.undirected(2, [(0, 1)])
    tri = delaunay(ps)
    pts = ps.points
    removed: set[tuple[int, int]] = set()
    for t in tri.triangles:
        best = None
        for u, v in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            e = (u, v) if u < v else (v, u)
            dx = pts[u].x - pts[v].x
            dy = pts[u].y - pts[v].y
            d2 = dx * dx + dy * dy
            # longest edge; ties keep the lexicographically smallest pair
            if best is None or d2 > best[0] or (d2 == best[0] and e < best[1]):
                best = (d2, e)
        removed.add(best[1])
    return Graph(n=n, edges=frozenset(tri.edges - removed), directed=False)


def yao_arcs(ps: PointSet, sectors: int, origin_degrees: float = 0.0) -> list[tuple[int, int]]:
    """Directed Yao arcs: from each point to its closest neighbor per sector
    (at most ``sectors`` arcs per point, ties by index).

    Sectors are half-open intervals of width 2π/sectors counterclockwise,
    anchored at ``origin_degrees`` from the positive x-axis.
    """
    if not isinstance(sectors, int) or sectors < 1:
        raise BadSectorCount(f"sectors must be an integer >= 1, got {sectors}")
    require_min_points(ps, 2)
    require_distinct(ps)
    n = len(ps)
    width = _TWO_PI / sectors
    offset = math.radians(origin_degrees)
    pts = ps.points
    arcs = []
    for i in range(n):
        best: dict[int, tuple[float, int]] = {}
        xi, yi = pts[i].x, pts[i].y
        for j in range(n):
            if j == i:
                continue
            dx = pts[j].x - xi
            dy = pts[j].y - yi
            ang = math.atan2(dy, dx) - offset
            ang %= _TWO_PI
            sector = min(int(ang // width), sectors - 1)
            d2 = dx * dx + dy * dy
            cand = (d2, j)
            if sector not in best or cand < best[sector]:
                best[sector] = cand
        arcs.extend((i, j) for _, j in best.values())
    return arcs


def yao_graph(ps: PointSet, sectors: int, origin_degrees: float = 0.0) -> Graph:
    """Yao graph: the OR-symmetrization of the directed Yao arcs."""
    arcs = yao_arcs(ps, sectors, origin_degrees=origin_degrees)
    return Graph.undirected(len(ps), [(min(i, j), max(i, j)) for i, j in arcs])
