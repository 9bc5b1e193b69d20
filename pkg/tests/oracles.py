"""Definition-literal oracles: direct evaluation of each graph predicate in
plain loops, independent of the engine's algorithms and data structures.

Each oracle returns a set of sorted index pairs. The neighbor-rank table is
computed by counting, not sorting, so it shares nothing with the engine's
neighbor-order path.
"""

from __future__ import annotations

import math

from proxigraph.geometry import PointSet
from proxigraph.predicates import incircle, orientation


def _coords(ps: PointSet) -> list[tuple[float, float]]:
    return [(p.x, p.y) for p in ps]


def _d2_table(ps: PointSet) -> list[list[float]]:
    pts = _coords(ps)
    n = len(pts)
    d2 = [[0.0] * n for _ in range(n)]
    for i in range(n):
        xi, yi = pts[i]
        row = d2[i]
        for j in range(n):
            dx = pts[j][0] - xi
            dy = pts[j][1] - yi
            row[j] = dx * dx + dy * dy
    return d2


def rank_table(ps: PointSet) -> list[list[int]]:
    """rank[p][q] = how many other points are closer to p than q is, under
    the (distance, index) tie order; rank 0 is the nearest neighbor."""
    d2 = _d2_table(ps)
    n = len(ps)
    rank = [[0] * n for _ in range(n)]
    for p in range(n):
        dp = d2[p]
        for q in range(n):
            if q == p:
                continue
            key = (dp[q], q)
            count = 0
            for r in range(n):
                if r != p and r != q and (dp[r], r) < key:
                    count += 1
            rank[p][q] = count
    return rank


def neighbor_oracle(
    ps: PointSet, kind: str, k: int | None = None, rank: list[list[int]] | None = None
) -> set[tuple[int, int]]:
    """Edge set for any of the ten nearest-neighbor variants; ``rank`` lets
    callers share one rank table across variants."""
    n = len(ps)
    if rank is None:
        rank = rank_table(ps)

    def r_holds(p: int, q: int) -> bool:
        if kind in ("nearest", "mutual", "asym"):
            return rank[p][q] < 1
        if kind in ("knn", "mutual-k", "asym-k"):
            return rank[p][q] < k
        if kind in ("kth", "mutual-kth", "asym-kth"):
            return rank[p][q] == k - 1
        if kind == "furthest":
            return rank[p][q] == n - 2
        raise ValueError(kind)

    edges = set()
    for p in range(n):
        for q in range(p + 1, n):
            fwd, back = r_holds(p, q), r_holds(q, p)
            if kind.startswith("mutual"):
                keep = fwd and back
            elif kind.startswith("asym"):
                keep = fwd != back
            else:
                keep = fwd or back
            if keep:
                edges.add((p, q))
    return edges


def gabriel_oracle(ps: PointSet) -> set[tuple[int, int]]:
    d2 = _d2_table(ps)
    n = len(ps)
    edges = set()
    for p in range(n):
        for q in range(p + 1, n):
            blocked = False
            for r in range(n):
                if r != p and r != q and d2[p][r] + d2[q][r] <= d2[p][q]:
                    blocked = True
                    break
            if not blocked:
                edges.add((p, q))
    return edges


def rng_oracle(ps: PointSet) -> set[tuple[int, int]]:
    d2 = _d2_table(ps)
    n = len(ps)
    edges = set()
    for p in range(n):
        for q in range(p + 1, n):
            blocked = False
            for r in range(n):
                if r != p and r != q and max(d2[p][r], d2[q][r]) < d2[p][q]:
                    blocked = True
                    break
            if not blocked:
                edges.add((p, q))
    return edges


def soi_oracle(ps: PointSet) -> set[tuple[int, int]]:
    d2 = _d2_table(ps)
    n = len(ps)
    radius = [math.sqrt(min(d2[i][j] for j in range(n) if j != i)) for i in range(n)]
    edges = set()
    for p in range(n):
        for q in range(p + 1, n):
            if math.sqrt(d2[p][q]) <= radius[p] + radius[q]:
                edges.add((p, q))
    return edges


def epsilon_oracle(ps: PointSet, epsilon: float) -> set[tuple[int, int]]:
    d2 = _d2_table(ps)
    n = len(ps)
    return {
        (p, q)
        for p in range(n)
        for q in range(p + 1, n)
        if d2[p][q] <= epsilon * epsilon
    }


def yao_oracle(ps: PointSet, sectors: int) -> set[tuple[int, int]]:
    pts = _coords(ps)
    d2 = _d2_table(ps)
    n = len(pts)
    width = 2.0 * math.pi / sectors
    edges = set()
    for p in range(n):
        best: dict[int, tuple[float, int]] = {}
        for q in range(n):
            if q == p:
                continue
            ang = math.atan2(pts[q][1] - pts[p][1], pts[q][0] - pts[p][0]) % (2.0 * math.pi)
            sector = min(int(ang // width), sectors - 1)
            cand = (d2[p][q], q)
            if sector not in best or cand < best[sector]:
                best[sector] = cand
        for _, q in best.values():
            edges.add((min(p, q), max(p, q)))
    return edges


def urquhart_from_triangles(
    ps: PointSet, triangles: tuple[tuple[int, int, int], ...], dt_edges: set[tuple[int, int]]
) -> set[tuple[int, int]]:
    """Re-derive the Urquhart edge set by the literal removal rule from a
    (separately verified) Delaunay triangle set."""
    d2 = _d2_table(ps)
    removed = set()
    for a, b, c in triangles:
        sides = []
        for u, v in ((a, b), (b, c), (c, a)):
            e = (u, v) if u < v else (v, u)
            sides.append((d2[u][v], e))
        longest = max(d2_uv for d2_uv, _ in sides)
        marked = min(e for d2_uv, e in sides if d2_uv == longest)
        removed.add(marked)
    return dt_edges - removed


def verify_delaunay(ps: PointSet, triangles, edges) -> None:
    """Definitional certificate for a claimed Delaunay triangulation:
    every triangle is CCW with an empty circumcircle, the triangles tile the
    convex hull (signed areas sum to the hull area and the counts match the
    Euler relation), and collinear inputs give the sorted path."""
    pts = _coords(ps)
    n = len(pts)
    hull = _convex_hull(pts)
    if len(hull) < 3:
        assert triangles == ()
        order = sorted(range(n), key=lambda i: pts[i])
        want = {
            (min(a, b), max(a, b)) for a, b in zip(order, order[1:])
        }
        assert set(edges) == want, "collinear input must give the sorted path"
        return

    for a, b, c in triangles:
        assert orientation(*pts[a], *pts[b], *pts[c]) > 0, f"triangle {(a, b, c)} not CCW"
        for d in range(n):
            if d not in (a, b, c):
                assert incircle(*pts[a], *pts[b], *pts[c], *pts[d]) <= 0, (
                    f"point {d} strictly inside circumcircle of {(a, b, c)}"
                )

    tri_area = 0.0
    for a, b, c in triangles:
        tri_area += (pts[b][0] - pts[a][0]) * (pts[c][1] - pts[a][1]) - (
            pts[b][1] - pts[a][1]
        ) * (pts[c][0] - pts[a][0])
    hull_area = 0.0
    for i in range(len(hull)):
        x1, y1 = hull[i]
        x2, y2 = hull[(i + 1) % len(hull)]
        hull_area += x1 * y2 - x2 * y1
    assert abs(tri_area - hull_area) <= 1e-9 * max(1.0, abs(hull_area)), (
        "triangle areas must tile the convex hull"
    )

    # Euler relation for a triangulation of n points with h on the hull
    # (only exact when no hull edge has a collinear interior point, which the
    # strict-turn hull below guarantees by construction of h)
    boundary = _on_hull_boundary(pts, hull)
    h = len(boundary)
    assert len(triangles) == 2 * n - h - 2, "triangle count off"
    assert len(edges) == 3 * n - h - 3, "edge count off"


def _convex_hull(pts: list[tuple[float, float]]) -> list[tuple[float, float]]:
    uniq = sorted(set(pts))
    if len(uniq) <= 2:
        return uniq

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(*out[-2], *out[-1], *p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(uniq)
    upper = half(uniq[::-1])
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 3 else uniq


def _on_hull_boundary(pts, hull) -> set[int]:
    out = set()
    m = len(hull)
    for i, p in enumerate(pts):
        for j in range(m):
            a, b = hull[j], hull[(j + 1) % m]
            if orientation(*a, *b, *p) == 0 and (
                min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
            ):
                out.add(i)
                break
    return out
