"""Primitive types and geometric substrate: distances, neighbor orders,
k-nearest / range queries, Delaunay triangulation, and the Euclidean MST.

All values are immutable after construction and every operation is a pure
function of its inputs, so everything here is safe to share across threads.

Distance comparisons use squared distances wherever possible; when actual
distances are needed they are always computed as ``sqrt(dx*dx + dy*dy)`` so
scalar and vectorized code paths produce bit-identical values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import DuplicatePoints, TooFewPoints
from .predicates import incircle, orientation

#: point counts above which ε-range and k-NN queries go through the grid index
GRID_THRESHOLD = 1000


@dataclass(frozen=True)
class Point2:
    """A planar point in drawing units."""

    x: float
    y: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class PointSet:
    """Ordered, indexed list of points; the index is the vertex identity."""

    points: tuple[Point2, ...]

    @classmethod
    def from_xy(cls, pairs: Iterable[Sequence[float]]) -> "PointSet":
        return cls(tuple(Point2(float(x), float(y)) for x, y in pairs))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Point2:
        return self.points[i]

    def as_array(self) -> np.ndarray:
        """Coordinates as an (n, 2) float64 array."""
        return np.array([(p.x, p.y) for p in self.points], dtype=np.float64).reshape(-1, 2)

    def duplicate_indices(self) -> tuple[int, int] | None:
        """First pair of indices with identical coordinates, or None."""
        seen: dict[tuple[float, float], int] = {}
        for i, p in enumerate(self.points):
            key = (p.x, p.y)
            if key in seen:
                return (seen[key], i)
            seen[key] = i
        return None


@dataclass(frozen=True)
class Graph:
    """Edge set over point-set indices.

    Undirected edges are stored once with the lower index first; no
    self-loops; all endpoints < n.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    directed: bool = False

    @classmethod
    def undirected(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        normalized = set()
        for a, b in pairs:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            normalized.add((a, b) if a < b else (b, a))
        return cls(n=n, edges=frozenset(normalized), directed=False)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


@dataclass(frozen=True)
class Triangulation:
    """Triangles (counterclockwise index triples) plus the derived edge set."""

    n: int
    triangles: tuple[tuple[int, int, int], ...]
    edges: frozenset[tuple[int, int]]

    def edge_graph(self) -> Graph:
        return Graph(n=self.n, edges=self.edges, directed=False)


@dataclass(frozen=True)
class NeighborOrder:
    """For each point, every other index sorted by distance, ties by index."""

    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    @property
    def n(self) -> int:
        return len(self.rows)


def distance(a: Point2, b: Point2) -> float:
    """Euclidean distance."""
    dx = a.x - b.x
    dy = a.y - b.y
    return math.sqrt(dx * dx + dy * dy)


def dist2(a: Point2, b: Point2) -> float:
    """Squared Euclidean distance."""
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def require_distinct(ps: PointSet) -> None:
    dup = ps.duplicate_indices()
    if dup is not None:
        raise DuplicatePoints(f"points {dup[0]} and {dup[1]} coincide")


def require_min_points(ps: PointSet, minimum: int) -> None:
    if len(ps) < minimum:
        raise TooFewPoints(f"need at least {minimum} points, got {len(ps)}")


# ---------------------------------------------------------------------------
# Neighbor queries: brute-force reference path and grid-accelerated path.
# Both must produce identical results (same inclusive comparisons, same
# (distance, index) tie order).
# ---------------------------------------------------------------------------


def _d2_rows(ps: PointSet) -> np.ndarray:
    a = ps.as_array()
    dx = a[:, 0][:, None] - a[:, 0][None, :]
    dy = a[:, 1][:, None] - a[:, 1][None, :]
    return dx * dx + dy * dy


def neighbor_order(ps: PointSet) -> NeighborOrder:
    """Full sorted neighbor lists for every point.

    Row i contains all j != i sorted by distance from i, equal distances
    broken by ascending j.
    """
    require_min_points(ps, 2)
    require_distinct(ps)
    n = len(ps)
    d2 = _d2_rows(ps)
    idx = np.arange(n)
    rows = []
    for i in range(n):
        order = np.lexsort((idx, d2[i]))
        # self sorts first (d2 == 0 and distinct points elsewhere)
        rows.append(tuple(int(j) for j in order[1:]))
    return NeighborOrder(rows=tuple(rows))


class GridIndex:
    """Uniform-grid spatial index over a point set.

    Accelerates ε-range and k-NN queries for large inputs; query results are
    identical to the brute-force path (inclusive radius, (d², index) ties).
    """

    def __init__(self, ps: PointSet, cell: float | None = None):
        self.ps = ps
        n = max(len(ps), 1)
        xs = [p.x for p in ps]
        ys = [p.y for p in ps]
        self.xmin = min(xs) if xs else 0.0
        self.ymin = min(ys) if ys else 0.0
        extent = max(max(xs) - self.xmin, max(ys) - self.ymin) if xs else 0.0
        if cell is None:
            cell = extent / math.sqrt(n) if extent > 0 else 1.0
        self.cell = max(cell, 1e-12)
        self.cells: dict[tuple[int, int], list[int]] = {}
        for i, p in enumerate(ps):
            self.cells.setdefault(self._cell_of(p.x, p.y), []).append(i)

    def _cell_of(self, x: float, y: float) -> tuple[int, int]:
        return (int(math.floor((x - self.xmin) / self.cell)), int(math.floor((y - self.ymin) / self.cell)))

    def range_query(self, x: float, y: float, radius: float, exclude: int | None = None) -> list[int]:
        """Indices with distance <= radius from (x, y), ascending index."""
        r2 = radius * radius
        cx0, cy0 = self._cell_of(x - radius, y - radius)
        cx1, cy1 = self._cell_of(x + radius, y + radius)
        out = []
        pts = self.ps.points
        for cx in range(cx0, cx1 + 1):
            for cy in range(cy0, cy1 + 1):
                for i in self.cells.get((cx, cy), ()):
                    if i == exclude:
                        continue
                    p = pts[i]
                    dx = p.x - x
                    dy = p.y - y
                    if dx * dx + dy * dy <= r2:
                        out.append(i)
        out.sort()
        return out

    def k_nearest(self, x: float, y: float, k: int, exclude: int | None = None) -> list[int]:
        """The k nearest indices to (x, y) in (d², index) order."""
        pts = self.ps.points
        ccx, ccy = self._cell_of(x, y)
        max_ring = 0
        for cx, cy in self.cells:
            max_ring = max(max_ring, abs(cx - ccx), abs(cy - ccy))
        found: list[tuple[float, int]] = []
        for ring in range(max_ring + 1):
            for cx, cy in self._ring_cells(ccx, ccy, ring):
                for i in self.cells.get((cx, cy), ()):
                    if i == exclude:
                        continue
                    p = pts[i]
                    dx = p.x - x
                    dy = p.y - y
                    found.append((dx * dx + dy * dy, i))
            if len(found) >= k:
                found.sort()
                # unexplored cells sit at Chebyshev ring >= ring+1, hence at
                # least ring*cell away from the query point in the center cell
                bound = ring * self.cell
                if found[k - 1][0] < bound * bound:
                    break
        found.sort()
        return [i for _, i in found[:k]]

    def _ring_cells(self, ccx: int, ccy: int, ring: int) -> Iterator[tuple[int, int]]:
        if ring == 0:
            yield (ccx, ccy)
            return
        for cx in range(ccx - ring, ccx + ring + 1):
            yield (cx, ccy - ring)
            yield (cx, ccy + ring)
        for cy in range(ccy - ring + 1, ccy + ring):
            yield (ccx - ring, cy)
            yield (ccx + ring, cy)


def range_query(
    ps: PointSet, x: float, y: float, radius: float, exclude: int | None = None, use_grid: bool | None = None
) -> list[int]:
    """Indices within (inclusive) radius of (x, y), ascending index."""
    if use_grid is None:
        use_grid = len(ps) > GRID_THRESHOLD
    if use_grid:
        return GridIndex(ps).range_query(x, y, radius, exclude=exclude)
    r2 = radius * radius
    out = []
    for i, p in enumerate(ps):
        if i == exclude:
            continue
        dx = p.x - x
        dy = p.y - y
        if dx * dx + dy * dy <= r2:
            out.append(i)
    return out


def knn_rows(ps: PointSet, k: int, use_grid: bool | None = None) -> list[tuple[int, ...]]:
    """First k neighbor-order entries for every point.

    Equals ``neighbor_order(ps)`` rows truncated to k; the grid path computes
    them without materializing the full order.
    """
    require_min_points(ps, 2)
    require_distinct(ps)
    n = len(ps)
    if use_grid is None:
        use_grid = n > GRID_THRESHOLD
    if not use_grid:
        d2 = _d2_rows(ps)
        idx = np.arange(n)
        rows = []
        for i in range(n):
            order = np.lexsort((idx, d2[i]))
            rows.append(tuple(int(j) for j in order[1 : k + 1]))
        return rows
    grid = GridIndex(ps)
    return [tuple(grid.k_nearest(p.x, p.y, k, exclude=i)) for i, p in enumerate(ps)]


# ---------------------------------------------------------------------------
# Delaunay triangulation: lexicographic incremental scan followed by Lawson
# flips with exact predicates. Cocircular ties flip toward the diagonal with
# the lexicographically smallest sorted index pair.
# ---------------------------------------------------------------------------


def _canonical(a: int, b: int, c: int) -> tuple[int, int, int]:
    # rotate the CCW triple so the smallest index comes first
    if a <= b and a <= c:
        return (a, b, c)
    if b <= a and b <= c:
        return (b, c, a)
    return (c, a, b)


def delaunay(ps: PointSet) -> Triangulation:
    """Delaunay triangulation of the point set.

    Collinear inputs yield zero triangles and the path edges along the line.
    Cocircular point groups are resolved deterministically: among valid
    diagonals the lexicographically smallest sorted index pair wins.
    """
    require_min_points(ps, 3)
    require_distinct(ps)
    n = len(ps)
    pts = [(p.x, p.y) for p in ps]
    order = sorted(range(n), key=lambda i: pts[i])

    def orient(i: int, j: int, k: int) -> int:
        return orientation(*pts[i], *pts[j], *pts[k])

    # split off the leading collinear chain
    first_off_line = None
    for m in range(2, n):
        if orient(order[0], order[1], order[m]) != 0:
            first_off_line = m
            break
    if first_off_line is None:
        edges = frozenset(
            (min(order[i], order[i + 1]), max(order[i], order[i + 1])) for i in range(n - 1)
        )
        return Triangulation(n=n, triangles=(), edges=edges)

    tris: dict[tuple[int, int, int], None] = {}
    edge_tris: dict[tuple[int, int], list[tuple[int, int, int]]] = {}

    def add_tri(a: int, b: int, c: int) -> None:
        t = _canonical(a, b, c)
        if t in tris:
            raise RuntimeError(f"triangle {t} inserted twice")
        tris[t] = None
        for e in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            key = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
            edge_tris.setdefault(key, []).append(t)

    def remove_tri(t: tuple[int, int, int]) -> None:
        del tris[t]
        for e in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            key = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
            edge_tris[key].remove(t)
            if not edge_tris[key]:
                del edge_tris[key]

    chain = order[:first_off_line]
    p = order[first_off_line]
    side = orient(chain[0], chain[1], p)
    for u, v in zip(chain, chain[1:]):
        if side > 0:
            add_tri(u, v, p)
        else:
            add_tri(v, u, p)
    hull = chain + [p] if side > 0 else chain[::-1] + [p]

    for q in order[first_off_line + 1 :]:
        m = len(hull)
        vis = [orient(hull[i], hull[(i + 1) % m], q) < 0 for i in range(m)]
        # visible edges form one contiguous circular arc
        start = next(i for i in range(m) if vis[i] and not vis[(i - 1) % m])
        count = 0
        while vis[(start + count) % m]:
            count += 1
        for t in range(count):
            a = hull[(start + t) % m]
            b = hull[(start + t + 1) % m]
            add_tri(a, q, b)
        new_hull = []
        i = (start + count) % m
        while True:
            new_hull.append(hull[i])
            if i == start:
                break
            i = (i + 1) % m
        new_hull.append(q)
        hull = new_hull

    # Lawson flips to the Delaunay condition
    stack = [e for e, ts in edge_tris.items() if len(ts) == 2]
    in_stack = set(stack)
    flips = 0
    flip_limit = 16 * n * n + 1024
    while stack:
        e = stack.pop()
        in_stack.discard(e)
        ts = edge_tris.get(e)
        if ts is None or len(ts) != 2:
            continue
        t1, t2 = ts
        a, b = e
        # orient the shared edge so t1 contains the directed edge a->b
        if not _has_directed_edge(t1, a, b):
            t1, t2 = t2, t1
        c = _third_vertex(t1, a, b)
        d = _third_vertex(t2, a, b)
        s = incircle(*pts[a], *pts[b], *pts[c], *pts[d])
        tie = (min(c, d), max(c, d)) < (a, b)
        if s > 0 or (s == 0 and tie):
            remove_tri(t1)
            remove_tri(t2)
            add_tri(a, d, c)
            add_tri(d, b, c)
            flips += 1
            if flips > flip_limit:
                raise RuntimeError("delaunay flip loop failed to terminate")
            for ne in ((a, d), (d, b), (b, c), (c, a)):
                key = (ne[0], ne[1]) if ne[0] < ne[1] else (ne[1], ne[0])
                if key not in in_stack:
                    stack.append(key)
                    in_stack.add(key)

    triangles = tuple(sorted(tris))
    edges = frozenset(edge_tris)
    return Triangulation(n=n, triangles=triangles, edges=edges)


def _has_directed_edge(t: tuple[int, int, int], a: int, b: int) -> bool:
    return (t[0], t[1]) == (a, b) or (t[1], t[2]) == (a, b) or (t[2], t[0]) == (a, b)


def _third_vertex(t: tuple[int, int, int], a: int, b: int) -> int:
    for v in t:
        if v != a and v != b:
            return v
    raise ValueError(f"triangle {t} degenerate for edge ({a},{b})")


# ---------------------------------------------------------------------------
# Minimum spanning trees. Ties are broken by the lexicographic edge index
# pair, which makes the tree the unique MST under the total order
# (weight, min index, max index); both the Euclidean MST and HDBSCAN's
# mutual-reachability MST use this primitive.
# ---------------------------------------------------------------------------


def minimum_spanning_edges(
    n: int, weight_row: Callable[[int], np.ndarray]
) -> list[tuple[int, int, float]]:
    """Prim's algorithm over an implicit complete graph.

    ``weight_row(u)`` returns the n-vector of edge weights from u. Returns
    n-1 edges as (i, j, weight) with i < j.
    """
    if n <= 1:
        return []
    best_w = np.full(n, np.inf)
    best_pmin = np.full(n, n, dtype=np.int64)
    best_pmax = np.full(n, n, dtype=np.int64)
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    u = 0
    edges: list[tuple[int, int, float]] = []
    ids = np.arange(n, dtype=np.int64)
    for _ in range(n - 1):
        w = weight_row(u)
        cand_min = np.minimum(u, ids)
        cand_max = np.maximum(u, ids)
        better = (w < best_w) | (
            (w == best_w)
            & ((cand_min < best_pmin) | ((cand_min == best_pmin) & (cand_max < best_pmax)))
        )
        better &= ~in_tree
        best_w[better] = w[better]
        best_pmin[better] = cand_min[better]
        best_pmax[better] = cand_max[better]
        masked_w = np.where(in_tree, np.inf, best_w)
        v = int(np.lexsort((best_pmax, best_pmin, masked_w))[0])
        edges.append((int(best_pmin[v]), int(best_pmax[v]), float(best_w[v])))
        in_tree[v] = True
        u = v
    return edges


def emst(ps: PointSet) -> Graph:
    """Euclidean minimum spanning tree; weight ties resolved lexicographically."""
    require_distinct(ps)
    n = len(ps)
    if n == 0:
        raise TooFewPoints("need at least 1 point")
    if n == 1:
        return Graph(n=1, edges=frozenset(), directed=False)
    a = ps.as_array()
    xs, ys = a[:, 0], a[:, 1]

    def row(u: int) -> np.ndarray:
        dx = xs - xs[u]
        dy = ys - ys[u]
        return np.sqrt(dx * dx + dy * dy)

    edges = minimum_spanning_edges(n, row)
    return Graph.undirected(n, [(i, j) for i, j, _ in edges])
