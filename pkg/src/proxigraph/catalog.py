"""Algorithm catalog: one entry per computable graph or clustering.

The CLI and the HTTP service both dispatch through ``run_algorithm`` so a
request produces byte-identical results on either surface. Parameter
defaults follow the figure captions where the source material pins them
(k=3, Yao sectors=5, suggested ε=28); epsilon, bandwidth, and target carry
no default and must be supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .centroid import KMeansInit, kmeans, kmedoids
from .clustering import NOISE, Clustering
from .density import DbscanParams, HdbscanParams, MeanShiftParams, dbscan, hdbscan, mean_shift
from .errors import BadParameter, MissingParameter, UnknownAlgorithm
from .geometry import Graph, PointSet, delaunay
from .hierarchy import Linkage, agglomerate
from .neighbors import NeighborKind, NeighborVariant, neighbor_graph
from .proximity import (
    epsilon_graph,
    gabriel_graph,
    rng_graph,
    soi_graph,
    soi_radii,
    urquhart_graph,
    yao_graph,
)
from .render import GRAY_INDEX, MARK_CROSS, MARK_DISK, Document, Mark

DEFAULT_K = 3
DEFAULT_SECTORS = 5
DEFAULT_MIN_PTS = 3
DEFAULT_SEED = 0
DEFAULT_MAX_ITER_CENTROID = 100
DEFAULT_MAX_ITER_MEANSHIFT = 300
SUGGESTED_EPSILON = 28


@dataclass(frozen=True)
class ParamSpec:
    name: str
    required: bool = False
    default: float | int | str | None = None
    integer: bool = True
    placeholder: float | int | None = None


@dataclass(frozen=True)
class AlgorithmSpec:
    id: str
    kind: str  # "graph" | "clustering"
    params: tuple[ParamSpec, ...]
    run: Callable[[PointSet, dict], Graph | Clustering]


def _p_k() -> ParamSpec:
    return ParamSpec("k", default=DEFAULT_K)


def _p_seed() -> ParamSpec:
    return ParamSpec("seed", default=DEFAULT_SEED)


def _neighbor(kind: NeighborKind, with_k: bool):
    def run(ps: PointSet, params: dict) -> Graph:
        variant = NeighborVariant(kind, params["k"] if with_k else None)
        return neighbor_graph(ps, variant)

    return run


def _catalog() -> dict[str, AlgorithmSpec]:
    entries: list[AlgorithmSpec] = []

    for ident, kind in [
        ("nearest", NeighborKind.NEAREST),
        ("knn", NeighborKind.KNN),
        ("kth", NeighborKind.KTH),
        ("mutual", NeighborKind.MUTUAL),
        ("mutual-k", NeighborKind.MUTUAL_K),
        ("mutual-kth", NeighborKind.MUTUAL_KTH),
        ("asym", NeighborKind.ASYM),
        ("asym-k", NeighborKind.ASYM_K),
        ("asym-kth", NeighborKind.ASYM_KTH),
        ("furthest", NeighborKind.FURTHEST),
    ]:
        with_k = kind in {
            NeighborKind.KNN,
            NeighborKind.KTH,
            NeighborKind.MUTUAL_K,
            NeighborKind.MUTUAL_KTH,
            NeighborKind.ASYM_K,
            NeighborKind.ASYM_KTH,
        }
        params = (_p_k(),) if with_k else ()
        entries.append(AlgorithmSpec(ident, "graph", params, _neighbor(kind, with_k)))

    entries.append(AlgorithmSpec("gabriel", "graph", (), lambda ps, p: gabriel_graph(ps)))
    entries.append(AlgorithmSpec("rng", "graph", (), lambda ps, p: rng_graph(ps)))
    entries.append(AlgorithmSpec("soi", "graph", (), lambda ps, p: soi_graph(ps)))
    entries.append(
        AlgorithmSpec(
            "epsilon",
            "graph",
            (ParamSpec("epsilon", required=True, integer=False, placeholder=SUGGESTED_EPSILON),),
            lambda ps, p: epsilon_graph(ps, p["epsilon"]),
        )
    )
    entries.append(AlgorithmSpec("urquhart", "graph", (), lambda ps, p: urquhart_graph(ps)))
    entries.append(
        AlgorithmSpec(
            "yao",
            "graph",
            (
                ParamSpec("sectors", default=DEFAULT_SECTORS),
                ParamSpec("origin", default=0, integer=False),
            ),
            lambda ps, p: yao_graph(ps, p["sectors"], origin_degrees=p["origin"]),
        )
    )
    entries.append(
        AlgorithmSpec("delaunay", "graph", (), lambda ps, p: delaunay(ps).edge_graph())
    )

    centroid_common = (
        _p_k(),
        _p_seed(),
        ParamSpec("max_iter", default=DEFAULT_MAX_ITER_CENTROID),
    )
    entries.append(
        AlgorithmSpec(
            "kmeans",
            "clustering",
            centroid_common,
            lambda ps, p: kmeans(
                ps, p["k"], seed=p["seed"], init=KMeansInit.UNIFORM, max_iter=p["max_iter"]
            ),
        )
    )
    entries.append(
        AlgorithmSpec(
            "kmeans++",
            "clustering",
            centroid_common,
            lambda ps, p: kmeans(
                ps, p["k"], seed=p["seed"], init=KMeansInit.PLUSPLUS, max_iter=p["max_iter"]
            ),
        )
    )
    entries.append(
        AlgorithmSpec(
            "kmedoids",
            "clustering",
            centroid_common,
            lambda ps, p: kmedoids(ps, p["k"], seed=p["seed"], max_iter=p["max_iter"]),
        )
    )

    entries.append(
        AlgorithmSpec(
            "single-linkage",
            "clustering",
            (ParamSpec("target", required=True),),
            lambda ps, p: agglomerate(ps, Linkage.SINGLE, p["target"])[0],
        )
    )
    entries.append(
        AlgorithmSpec(
            "complete-linkage",
            "clustering",
            (ParamSpec("target", required=True),),
            lambda ps, p: agglomerate(ps, Linkage.COMPLETE, p["target"])[0],
        )
    )

    entries.append(
        AlgorithmSpec(
            "dbscan",
            "clustering",
            (
                ParamSpec("epsilon", required=True, integer=False, placeholder=SUGGESTED_EPSILON),
                ParamSpec("min_pts", default=DEFAULT_MIN_PTS),
            ),
            lambda ps, p: dbscan(ps, DbscanParams(epsilon=p["epsilon"], min_pts=p["min_pts"])),
        )
    )
    entries.append(
        AlgorithmSpec(
            "hdbscan",
            "clustering",
            (
                ParamSpec("min_pts", default=DEFAULT_MIN_PTS),
                ParamSpec("min_cluster_size", default="min_pts"),
            ),
            lambda ps, p: hdbscan(
                ps, HdbscanParams(min_pts=p["min_pts"], min_cluster_size=p["min_cluster_size"])
            ),
        )
    )
    entries.append(
        AlgorithmSpec(
            "meanshift",
            "clustering",
            (
                ParamSpec("bandwidth", required=True, integer=False),
                ParamSpec("max_iter", default=DEFAULT_MAX_ITER_MEANSHIFT),
            ),
            lambda ps, p: mean_shift(
                ps, MeanShiftParams(bandwidth=p["bandwidth"], max_iter=p["max_iter"])
            ),
        )
    )

    return {e.id: e for e in entries}


CATALOG: dict[str, AlgorithmSpec] = _catalog()

ALGORITHM_IDS = tuple(CATALOG)


def coerce_params(spec: AlgorithmSpec, raw: Mapping[str, object]) -> dict:
    """Validate raw parameters against ``spec``'s declarations and apply defaults."""
    unknown = set(raw) - {p.name for p in spec.params}
    if unknown:
        raise BadParameter(f"unknown parameter(s) for {spec.id}: {', '.join(sorted(unknown))}")
    out: dict[str, object] = {}
    for p in spec.params:
        if p.name in raw:
            value = raw[p.name]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise BadParameter(f"parameter {p.name} must be a number")
            if p.integer:
                if float(value) != int(value):
                    raise BadParameter(f"parameter {p.name} must be an integer, got {value}")
                out[p.name] = int(value)
            else:
                out[p.name] = float(value)
        elif p.required:
            raise MissingParameter(f"algorithm {spec.id} requires parameter {p.name}")
        else:
            out[p.name] = p.default
    # dependent default: hdbscan's min_cluster_size follows min_pts
    if out.get("min_cluster_size") == "min_pts":
        out["min_cluster_size"] = max(2, int(out["min_pts"]))
    return out


def get_algorithm(algorithm_id: str) -> AlgorithmSpec:
    spec = CATALOG.get(algorithm_id)
    if spec is None:
        raise UnknownAlgorithm(f"unknown algorithm {algorithm_id!r}")
    return spec


def run_algorithm(ps: PointSet, algorithm_id: str, raw_params: Mapping[str, object]) -> Graph | Clustering:
    spec = get_algorithm(algorithm_id)
    params = coerce_params(spec, raw_params)
    return spec.run(ps, params)


def catalog_listing() -> list[dict]:
    """JSON-friendly catalog for GET /api/algorithms and the UI."""
    listing = []
    for spec in CATALOG.values():
        params = []
        for p in spec.params:
            entry: dict[str, object] = {"name": p.name, "required": p.required, "integer": p.integer}
            if p.default is not None:
                entry["default"] = p.default
            if p.placeholder is not None:
                entry["placeholder"] = p.placeholder
            params.append(entry)
        listing.append({"id": spec.id, "kind": spec.kind, "params": params})
    return listing


def build_document(ps: PointSet, result: Graph | Clustering, algorithm_id: str) -> Document:
    """Drawing for a computed result: graphs as black segments over disks,
    clusterings as color-coded disks with noise drawn as gray crosses; the
    sphere-of-influence graph also draws its influence circles."""
    n = len(ps)
    if isinstance(result, Graph):
        marks = tuple(Mark() for _ in range(n))
        segments = tuple((i, j, 0) for i, j in result.edge_list())
        circles: tuple[tuple[int, float, int], ...] = ()
        if algorithm_id == "soi":
            radii = soi_radii(ps)
            circles = tuple((i, float(radii[i]), GRAY_INDEX) for i in range(n))
        return Document(points=ps, marks=marks, segments=segments, circles=circles)
    marks = tuple(
        Mark(color=GRAY_INDEX, symbol=MARK_CROSS)
        if lab == NOISE
        else Mark(color=lab, symbol=MARK_DISK)
        for lab in result.labels
    )
    return Document(points=ps, marks=marks)
