"""Stateless HTTP compute service.

Endpoints:
    POST /api/compute            ComputeRequest JSON -> result JSON; add
                                 ?render=svg or ?render=ipe for a rendering
                                 field alongside the result
    GET  /api/algorithms         algorithm catalog with parameter metadata
    GET  /healthz                liveness probe

Every request is fully self-contained; compute paths are pure, so the
threaded listener needs no synchronization. Errors use the envelope
{"error": name, "detail": message} with status 400 (bad request), 404
(unknown algorithm or path), 413 (too many points), or 500 (internal).
"""

from __future__ import annotations

import json
import math
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .catalog import build_document, catalog_listing, run_algorithm
from .errors import ProxigraphError, TooManyPoints, UnknownAlgorithm
from .geometry import PointSet
from .render import write_ipe, write_result_json, write_svg

MAX_POINTS = 10_000


def _json_bytes(obj) -> bytes:
    return json.dumps(obj, separators=(",", ":")).encode("utf-8")


def _parse_compute_request(body: bytes) -> tuple[PointSet, str, dict]:
    try:
        payload = json.loads(body)
    except json.JSONDecodeError as exc:
        raise ValueError(f"request body is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError("request body must be a JSON object")
    points = payload.get("points")
    if not isinstance(points, list):
        raise ValueError("field 'points' must be an array of [x, y] pairs")
    if len(points) > MAX_POINTS:
        raise TooManyPoints(f"{len(points)} points exceeds the cap of {MAX_POINTS}")
    pairs = []
    for i, entry in enumerate(points):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
            or not all(math.isfinite(float(v)) for v in entry)
        ):
            raise ValueError(f"points[{i}] must be a finite [x, y] pair")
        pairs.append((float(entry[0]), float(entry[1])))
    algorithm = payload.get("algorithm")
    if not isinstance(algorithm, str):
        raise ValueError("field 'algorithm' must be a string")
    params = payload.get("params", {})
    if not isinstance(params, dict):
        raise ValueError("field 'params' must be an object")
    return PointSet.from_xy(pairs), algorithm, params


class ComputeHandler(BaseHTTPRequestHandler):
    server_version = "proxigraph"
    protocol_version = "HTTP/1.1"
    cors_origin = "*"

    def end_headers(self):
        self.send_header("Access-Control-Allow-Origin", self.cors_origin)
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        super().end_headers()

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, status: int, body: bytes, content_type: str = "application/json") -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_error_envelope(self, status: int, name: str, detail: str) -> None:
        self._send(status, _json_bytes({"error": name, "detail": detail}))

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        path = urlparse(self.path).path
        if path == "/healthz":
            self._send(200, _json_bytes({"status": "ok"}))
        elif path == "/api/algorithms":
            self._send(200, _json_bytes({"algorithms": catalog_listing()}))
        else:
            self._send_error_envelope(404, "NotFound", f"no such path: {path}")

    def do_POST(self):
        url = urlparse(self.path)
        if url.path != "/api/compute":
            self._send_error_envelope(404, "NotFound", f"no such path: {url.path}")
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = self.rfile.read(length)
            ps, algorithm, raw_params = _parse_compute_request(body)
            result = run_algorithm(ps, algorithm, raw_params)
            payload = write_result_json(result)
            render = parse_qs(url.query).get("render", [None])[0]
            if render is not None:
                if render not in ("svg", "ipe"):
                    raise ValueError(f"render must be 'svg' or 'ipe', got {render!r}")
                doc = build_document(ps, result, algorithm)
                rendering = write_svg(doc) if render == "svg" else write_ipe(doc)
                obj = json.loads(payload)
                obj[render] = rendering.decode("utf-8")
                payload = _json_bytes(obj)
            self._send(200, payload)
        except TooManyPoints as exc:
            self._send_error_envelope(413, exc.name, str(exc))
        except UnknownAlgorithm as exc:
            self._send_error_envelope(404, exc.name, str(exc))
        except ProxigraphError as exc:
            self._send_error_envelope(400, exc.name, str(exc))
        except ValueError as exc:
            self._send_error_envelope(400, "BadRequest", str(exc))
        except Exception as exc:  # pragma: no cover - invariant violation
            self._send_error_envelope(500, "InternalError", f"{type(exc).__name__}: {exc}")


def make_server(bind: str = "127.0.0.1", port: int = 0, cors_origin: str = "*") -> ThreadingHTTPServer:
    """Create (but do not start) the threaded HTTP server; port 0 picks a
    free port, readable from ``server.server_address``."""
    handler = type("BoundComputeHandler", (ComputeHandler,), {"cors_origin": cors_origin})
    return ThreadingHTTPServer((bind, port), handler)


def serve(bind: str = "127.0.0.1", port: int = 8420, cors_origin: str = "*") -> None:
    """Run the compute service until interrupted."""
    server = make_server(bind, port, cors_origin=cors_origin)
    host, actual_port = server.server_address[:2]
    print(f"proxigraph service listening on http://{host}:{actual_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
