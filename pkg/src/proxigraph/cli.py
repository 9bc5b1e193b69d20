"""Batch command-line front end.

    proxigraph <algorithm> --input pts.csv --output out.ipe [--k 3 ...]
    proxigraph serve [--bind ADDR] [--port N] [--cors-origin ORIGIN]

Exit codes: 0 success, 1 data error (the message carries the error name),
2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .catalog import CATALOG, build_document, run_algorithm
from .errors import ProxigraphError
from .render import PointFormat, parse_points, write_ipe, write_result_json, write_svg

_INPUT_FORMATS = {"csv": PointFormat.CSV, "json": PointFormat.JSON, "ipe": PointFormat.IPE_XML}
_INPUT_EXTENSIONS = {".csv": "csv", ".json": "json", ".ipe": "ipe", ".xml": "ipe"}
_OUTPUT_EXTENSIONS = {".ipe": "ipe", ".xml": "ipe", ".svg": "svg", ".json": "json"}

_FLAG_DEST = {
    "k": "--k",
    "epsilon": "--epsilon",
    "sectors": "--sectors",
    "origin": "--origin",
    "min_pts": "--min-pts",
    "min_cluster_size": "--min-cluster-size",
    "bandwidth": "--bandwidth",
    "target": "--target",
    "seed": "--seed",
    "max_iter": "--max-iter",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostic, exit code 2
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _default_port() -> int:
    env = os.environ.get("PROXIGRAPH_PORT")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return 8420


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="proxigraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="<algorithm>|serve")

    for spec in CATALOG.values():
        p = sub.add_parser(spec.id, prog=f"proxigraph {spec.id}")
        p.add_argument("--input", required=True, help="point-set file (csv, json, or ipe xml)")
        p.add_argument("--input-format", choices=sorted(_INPUT_FORMATS))
        p.add_argument("--output", required=True, help="output file (ipe, svg, or json)")
        p.add_argument("--output-format", choices=["ipe", "json", "svg"])
        for param in spec.params:
            kind = int if param.integer else float
            p.add_argument(
                _FLAG_DEST[param.name], dest=param.name, type=kind, required=param.required
            )

    serve = sub.add_parser("serve", prog="proxigraph serve")
    serve.add_argument("--bind", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=_default_port())
    serve.add_argument("--cors-origin", default="*")
    return parser


def _infer(path: str, table: dict[str, str], what: str, parser: argparse.ArgumentParser) -> str:
    ext = Path(path).suffix.lower()
    fmt = table.get(ext)
    if fmt is None:
        parser.error(f"cannot infer {what} format from {path!r}; pass --{what}-format")
    return fmt


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "serve":
        from .service import serve

        serve(args.bind, args.port, cors_origin=args.cors_origin)
        return 0

    spec = CATALOG[args.command]
    try:
        in_fmt = args.input_format or _infer(args.input, _INPUT_EXTENSIONS, "input", parser)
        out_fmt = args.output_format or _infer(args.output, _OUTPUT_EXTENSIONS, "output", parser)
    except SystemExit as exc:
        return int(exc.code or 0)

    raw_params = {
        p.name: getattr(args, p.name) for p in spec.params if getattr(args, p.name) is not None
    }
    try:
        data = Path(args.input).read_bytes()
    except OSError as exc:
        print(f"proxigraph: InputError: {exc}", file=sys.stderr)
        return 1
    try:
        ps = parse_points(data, _INPUT_FORMATS[in_fmt])
        result = run_algorithm(ps, args.command, raw_params)
        if out_fmt == "json":
            payload = write_result_json(result)
        else:
            doc = build_document(ps, result, args.command)
            payload = write_ipe(doc) if out_fmt == "ipe" else write_svg(doc)
        Path(args.output).write_bytes(payload)
    except ProxigraphError as exc:
        print(f"proxigraph: {exc.name}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"proxigraph: OutputError: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
