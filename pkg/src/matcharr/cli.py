"""Command line front end: one graph file in, one computation out.

Exit codes: 0 success, 1 domain error (unreadable input, parse failure, cap
exceeded, unsupported format), 2 verification verdict false.  Output on
stdout is byte-identical for identical (input, flags, seed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .arrangement import (build_matching_arrangement, characteristic_polynomial,
                          enumerate_regions, region_count)
from .errors import MatcharrError
from .graphs import DEFAULT_SEQUENCE_CAP, Graph, enumerate_matchings, parse_graph
from .orientations import enumerate_lp_orientations, orientation_to_dot, verify_bijection
from .polytope import build_skeleton, skeleton_to_dot, skeleton_to_json_dict

COMMANDS = ("matchings", "hyperplanes", "regions", "charpoly",
            "skeleton", "orientations", "verify")

DEFAULT_EDGE_CAP = 10


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str
    output_format: str = "json"
    seed: int = 0
    samples: int = 5
    max_edges: int = DEFAULT_EDGE_CAP
    max_sequences: int = DEFAULT_SEQUENCE_CAP


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _poly_str(coefficients: tuple[int, ...]) -> str:
    # constant-first storage, printed in descending powers
    terms = []
    for k in range(len(coefficients) - 1, -1, -1):
        c = coefficients[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "t" if mag == 1 else f"{mag}*t"
        else:
            body = f"t^{k}" if mag == 1 else f"{mag}*t^{k}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


def _equation_str(normal: tuple[int, ...]) -> str:
    parts = []
    for i, c in enumerate(normal):
        if c == 0:
            continue
        name = f"x{i + 1}"
        if not parts:
            parts.append(name if c > 0 else f"-{name}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {name}")
    return " ".join(parts) + " = 0"


def _signs_str(signs) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def _cmd_matchings(cfg: RunConfig, g: Graph) -> tuple[str, int]:
    matchings = enumerate_matchings(g)
    lists = [[i + 1 for i in m.edge_indices()] for m in matchings]
    if cfg.output_format == "json":
        return _json_text({"edge_count": g.edge_count,
                           "count": len(lists),
                           "matchings": lists}), 0
    lines = [f"matchings {len(lists)}"]
    lines += ["{" + ",".join(str(i) for i in entry) + "}" for entry in lists]
    return "\n".join(lines) + "\n", 0


def _cmd_hyperplanes(cfg: RunConfig, g: Graph) -> tuple[str, int]:
    a = build_matching_arrangement(g, max_sequences=cfg.max_sequences)
    if cfg.output_format == "json":
        return _json_text({"dimension": a.dimension,
                           "count": len(a.hyperplanes),
                           "normals": [list(h.normal) for h in a.hyperplanes]}), 0
    lines = [f"hyperplanes {len(a.hyperplanes)}"]
    lines += [_equation_str(h.normal) for h in a.hyperplanes]
    return "\n".join(lines) + "\n", 0


def _cmd_regions(cfg: RunConfig, g: Graph) -> tuple[str, int]:
    a = build_matching_arrangement(g, max_sequences=cfg.max_sequences)
    regions = enumerate_regions(a)
    if cfg.output_format == "json":
        payload = {
            "dimension": a.dimension,
            "hyperplane_count": len(a.hyperplanes),
            "region_count": len(regions),
            "regions": [{"signs": list(r.signs),
                         "witness": [str(w) for w in r.witness]}
                        for r in regions],
        }
        return _json_text(payload), 0
    lines = [f"regions {len(regions)}"]
    lines += [f"{_signs_str(r.signs)} witness " + " ".join(str(w) for w in r.witness)
              for r in regions]
    return "\n".join(lines) + "\n", 0


def _cmd_charpoly(cfg: RunConfig, g: Graph) -> tuple[str, int]:
    a = build_matching_arrangement(g, max_sequences=cfg.max_sequences)
    poly = characteristic_polynomial(a)
    regions = region_count(poly)
    if cfg.output_format == "json":
        return _json_text({"dimension": a.dimension,
                           "coefficients": list(poly.coefficients),
                           "region_count": regions}), 0
    return (f"chi(t) = {_poly_str(poly.coefficients)}\n"
            f"regions {regions}\n"), 0


def _cmd_skeleton(cfg: RunConfig, g: Graph) -> tuple[str, int]:
    sk = build_skeleton(g)
    if cfg.output_format == "json":
        return _json_text(skeleton_to_json_dict(sk)), 0
    if cfg.output_format == "dot":
        return skeleton_to_dot(sk), 0
    data = skeleton_to_json_dict(sk)
    lines = [f"vertices {data['vertex_count']}", f"edges {data['edge_count']}"]
    lines += [f"vertex {i} {{{','.join(str(x) for x in entry)}}}"
              for i, entry in enumerate(data["vertices"])]
    lines += [f"edge {i} {j}" for i, j in data["edges"]]
    return "\n".join(lines) + "\n", 0


def _cmd_orientations(cfg: RunConfig, g: Graph) -> tuple[str, int]:
    sk = build_skeleton(g)
    orientations = enumerate_lp_orientations(g, max_sequences=cfg.max_sequences)
    if cfg.output_format == "json":
        payload = {
            "skeleton": skeleton_to_json_dict(sk),
            "orientation_count": len(orientations),
            "orientations": [list(o.directions) for o in orientations],
        }
        return _json_text(payload), 0
    if cfg.output_format == "dot":
        header = f"// orientation 1 of {len(orientations)}\n"
        return header + orientation_to_dot(sk, orientations[0]), 0
    lines = [f"orientations {len(orientations)}"]
    lines += [_signs_str(o.directions) for o in orientations]
    return "\n".join(lines) + "\n", 0


def _cmd_verify(cfg: RunConfig, g: Graph) -> tuple[str, int]:
    report = verify_bijection(g, samples_per_region=cfg.samples,
                              rng_seed=cfg.seed,
                              max_sequences=cfg.max_sequences)
    code = 0 if report.verdict else 2
    if cfg.output_format == "json":
        payload = {
            "region_count": report.region_count,
            "orientation_count": report.orientation_count,
            "verdict": report.verdict,
            "injective": report.injective,
            "total": report.total,
            "well_defined": report.well_defined,
            "samples_per_region": report.samples_per_region,
            "seed": report.seed,
            "sampling_shortfalls": [list(s) for s in report.sampling_shortfalls],
            "mismatched_regions": list(report.mismatched_regions),
            "fingerprints": list(report.fingerprints),
        }
        return _json_text(payload), code
    lines = [
        f"regions {report.region_count}",
        f"orientations {report.orientation_count}",
        f"injective {str(report.injective).lower()}",
        f"total {str(report.total).lower()}",
        f"well_defined {str(report.well_defined).lower()}",
        f"verdict {str(report.verdict).lower()}",
    ]
    return "\n".join(lines) + "\n", code


_DISPATCH = {
    "matchings": _cmd_matchings,
    "hyperplanes": _cmd_hyperplanes,
    "regions": _cmd_regions,
    "charpoly": _cmd_charpoly,
    "skeleton": _cmd_skeleton,
    "orientations": _cmd_orientations,
    "verify": _cmd_verify,
}

_DOT_COMMANDS = {"skeleton", "orientations"}


def run(cfg: RunConfig, out=None, err=None) -> int:
    """Execute one command; returns the exit code, writing output to `out`."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        if cfg.command not in _DISPATCH:
            raise MatcharrError(f"unknown command {cfg.command!r}")
        if cfg.output_format not in ("json", "dot", "text"):
            raise MatcharrError(f"unknown format {cfg.output_format!r}")
        if cfg.output_format == "dot" and cfg.command not in _DOT_COMMANDS:
            raise MatcharrError(
                f"format dot is only available for: {', '.join(sorted(_DOT_COMMANDS))}")
        try:
            text = Path(cfg.input_path).read_text()
        except OSError as exc:
            raise MatcharrError(f"cannot read {cfg.input_path}: {exc.strerror or exc}")
        g = parse_graph(text)
        if g.edge_count > cfg.max_edges:
            raise MatcharrError(
                f"graph has {g.edge_count} edges, exceeding the cap of "
                f"{cfg.max_edges}; raise --max-edges to proceed")
        payload, code = _DISPATCH[cfg.command](cfg, g)
    except (MatcharrError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    out.write(payload)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matcharr",
        description="Exact arrangements, matching polytopes, and skeleton "
                    "orientations of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--input", required=True, metavar="PATH",
                         help="edge-list file: one 'u v' pair per line")
        cmd.add_argument("--format", choices=["json", "dot", "text"],
                         default="json")
        cmd.add_argument("--seed", type=int, default=0,
                         help="sampling seed (verify only)")
        cmd.add_argument("--samples", type=int, default=5,
                         help="samples per region (verify only)")
        cmd.add_argument("--max-edges", type=int, default=DEFAULT_EDGE_CAP)
        cmd.add_argument("--max-sequences", type=int, default=DEFAULT_SEQUENCE_CAP)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for a false verdict
        return 0 if not exc.code else 1
    cfg = RunConfig(command=args.command, input_path=args.input,
                    output_format=args.format, seed=args.seed,
                    samples=args.samples, max_edges=args.max_edges,
                    max_sequences=args.max_sequences)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
