"""Command-line front end.

Structured results go to stdout as line-delimited JSON records; human-readable
summaries go to stderr, so pipelines can consume stdout directly. Exit code 0
means every requested verification passed; parse and usage problems exit 2,
failed verifications exit 1.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__
from .bounds import gr_bound, table1_bound
from .construction import ConstructionCertificate, construct, theorem_bound
from .embedding import euler_characteristic
from .errors import Error, ParseError, ResourceGuardError
from .graphs import (Digraph, mask_is_acyclic, read_edge_list,
                     read_undirected_edge_list, write_edge_list)
from .scan import (Checkpoint, DEFAULT_SWEEP_GATE, EmbeddedGraph, ScanRecord,
                   check_problem1, is_triangulation, max_induced_forest,
                   orientation_sweep, read_planar_code)
from .solvers import (SolverWitness, mask_is_forest, max_acyclic_set, min_fvs)


def _emit(record: dict) -> None:
    print(json.dumps(record))


def _info(message: str) -> None:
    print(message, file=sys.stderr)


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _load_embedded(path: str) -> list[EmbeddedGraph]:
    return list(read_planar_code(_read_input(path)))


# ---------------------------------------------------------------------------
# construct / emit-dot


def _certificate_record(cert: ConstructionCertificate) -> dict:
    return {
        "n": cert.digraph.n,
        "m": cert.digraph.m,
        "g": cert.digirth,
        "f": cert.feedback_size,
        "claimed_fvs": cert.claimed_min_fvs,
        "claimed_mas": cert.claimed_max_acyclic,
        "pair": [cert.x, cert.y],
        "face": list(cert.face.vertices),
        "euler": euler_characteristic(cert.embedding),
        "arcs": [list(a) for a in cert.digraph.arcs],
    }


def _vertex_label(cert: ConstructionCertificate, v: int) -> str:
    level = cert.level_of(v)
    if level == 1:
        return f"v{v}"
    index = (v - cert.digirth) % (cert.digirth - 1) + 1
    return f"s{index}.L{level}"


def construction_dot(cert: ConstructionCertificate) -> str:
    lines = [f"digraph construction_g{cert.digirth}_f{cert.feedback_size} {{",
             "  node [shape=circle];"]
    for v in range(cert.digraph.n):
        attrs = [f'label="{_vertex_label(cert, v)}"']
        if v in (cert.x, cert.y):
            attrs.append("shape=doublecircle")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    lines.extend(f"  {u} -> {v};" for u, v in cert.digraph.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_dot(digraph: Digraph) -> str:
    lines = ["digraph G {"]
    lines.extend(f"  {u} -> {v};" for u, v in digraph.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_construct(args) -> int:
    cert = construct(args.g, args.f)
    record = _certificate_record(cert)
    if record["euler"] != 2:
        _info("euler check failed")
        return 1
    if args.out:
        Path(args.out).write_text(write_edge_list(cert.digraph))
    if args.dot:
        Path(args.dot).write_text(construction_dot(cert))
    _emit(record)
    _info(f"built g={args.g} f={args.f}: n={record['n']} m={record['m']} "
          f"pair=({cert.x},{cert.y}) euler=2")
    return 0


def cmd_emit_dot(args) -> int:
    if args.input:
        digraph = read_edge_list(_read_input(args.input).decode())
        text = digraph_dot(digraph)
    else:
        text = construction_dot(construct(args.g, args.f))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# solve


def _verify_witness(kind: str, witness: SolverWitness, graph) -> bool:
    mask = 0
    for v in witness.vertices:
        mask |= 1 << v
    if kind == "fvs":
        return mask_is_acyclic(graph.out_masks, ((1 << graph.n) - 1) & ~mask)
    if kind == "mas":
        return mask_is_acyclic(graph.out_masks, mask)
    return mask_is_forest(graph.adj_masks, mask)


def cmd_solve(args) -> int:
    data = _read_input(args.input)
    if args.mode == "forest":
        if data.startswith(b">>planar_code<<") or (data and data[0] < 0x20):
            graphs = [eg.graph for eg in read_planar_code(data)]
        else:
            graphs = [read_undirected_edge_list(data.decode())]
        solve = max_induced_forest
    else:
        graphs = [read_edge_list(data.decode())]
        solve = min_fvs if args.mode == "fvs" else max_acyclic_set
    for graph in graphs:
        witness = solve(graph)
        if not _verify_witness(args.mode, witness, graph):
            _info(f"witness failed re-validation: {witness}")
            return 1
        _emit({"mode": args.mode, "n": graph.n, "m": graph.m,
               "size": witness.size, "vertices": sorted(witness.vertices)})
    _info(f"solved {len(graphs)} graph(s) in mode {args.mode}")
    return 0


# ---------------------------------------------------------------------------
# scan / problem1


def _sweep_kwargs(args) -> dict:
    return {"dedup": args.dedup, "exact": args.exact, "jobs": args.jobs,
            "force": args.force}


def cmd_scan(args) -> int:
    import time
    graphs = []
    for path in args.inputs:
        graphs.extend(_load_embedded(path))
    bad = [i for i, eg in enumerate(graphs) if not is_triangulation(eg)]
    if bad:
        _info(f"inputs are not plane triangulations at indices {bad}")
        return 2
    checkpoint = Checkpoint(args.checkpoint) if args.checkpoint else None
    tight_count = 0
    swept = 0
    skipped = 0
    failures = 0
    for index, eg in enumerate(graphs):
        t0 = time.perf_counter()
        forest = max_induced_forest(eg.graph).size
        tight = eg.n % 2 == 0 and forest == eg.n // 2
        record = ScanRecord(n=eg.n, m=eg.m, forest=forest, tight=tight,
                            orientations=0, min_mas=None, threshold=None,
                            holds=None, seconds=0.0)
        if tight:
            tight_count += 1
            planned = 1 << (eg.m - 1 if (args.dedup and eg.m) else eg.m)
            if planned <= DEFAULT_SWEEP_GATE or args.long:
                result = orientation_sweep(
                    eg.graph, eg.n // 2 + 1, checkpoint=checkpoint,
                    checkpoint_key=f"g{index}n{eg.n}", **_sweep_kwargs(args))
                record.threshold = eg.n // 2 + 1
                record.orientations = result.orientations
                record.min_mas = result.min_mas
                record.holds = result.all_meet_threshold
                swept += 1
                if not result.all_meet_threshold:
                    failures += 1
            else:
                skipped += 1
                _info(f"graph {index} (n={eg.n}, m={eg.m}): sweep of {planned} "
                      "orientations skipped; rerun with --long")
        record.seconds = time.perf_counter() - t0
        print(record.to_json())
    _info(f"graphs={len(graphs)} tight={tight_count} swept={swept} "
          f"skipped={skipped} sweep_failures={failures}")
    return 1 if failures else 0


def cmd_problem1(args) -> int:
    graphs = []
    for path in args.inputs:
        graphs.extend(_load_embedded(path))
    failures = 0
    not_applicable = 0
    for eg in graphs:
        record = check_problem1(eg, long_run=args.long, **_sweep_kwargs(args))
        if record.threshold is None:
            not_applicable += 1
        elif record.holds is False:
            failures += 1
        print(record.to_json())
    _info(f"graphs={len(graphs)} not_applicable={not_applicable} "
          f"failures={failures}")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# bound


def cmd_bound(args) -> int:
    record = {
        "n": args.n,
        "g": args.g,
        "theorem_upper": theorem_bound(args.n, args.g),
        "table1_lower": str(table1_bound(args.n, args.g)),
        "gr_lower": str(gr_bound(args.n, args.g)) if args.g >= 4 else None,
    }
    _emit(record)
    _info(f"n={args.n} g={args.g}: upper {record['theorem_upper']}, "
          f"lower {record['table1_lower']}"
          + (f", gr {record['gr_lower']}" if record["gr_lower"] else ""))
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_sweep_flags(sub) -> None:
    sub.add_argument("--dedup", action=argparse.BooleanOptionalAction, default=True,
                     help="enumerate orientations up to global reversal (default on)")
    sub.add_argument("--exact", action="store_true",
                     help="track the exact minimum acyclic-set size per graph")
    sub.add_argument("--long", action="store_true",
                     help="run sweeps above the default gate (e.g. n=10 fixtures)")
    sub.add_argument("--jobs", type=int, default=1,
                     help="worker processes for orientation sweeps")
    sub.add_argument("--force", action="store_true",
                     help="override the edge-count resource guard")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planacyclic",
        description="Acyclic sets and feedback vertex sets in planar oriented graphs")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--seed", type=int, default=None,
                        help="seed the RNG (reserved for sampling extensions)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an extremal instance with certificate")
    p.add_argument("--g", type=int, required=True, help="digirth (>= 3)")
    p.add_argument("--f", type=int, required=True, help="feedback set size (>= 1)")
    p.add_argument("--out", help="write the edge list to this file")
    p.add_argument("--dot", help="write a DOT drawing to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("solve", help="exact solve: fvs, mas, or forest")
    p.add_argument("input", help="edge-list file, planar_code file, or - for stdin")
    p.add_argument("--mode", choices=("fvs", "mas", "forest"), required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("scan", help="tightness filter and orientation sweep over planar_code input")
    p.add_argument("inputs", nargs="+", help="planar_code files")
    p.add_argument("--checkpoint", help="plain-text checkpoint file for long sweeps")
    _add_sweep_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("problem1", help="check the forest-size-plus-one question per graph")
    p.add_argument("inputs", nargs="+", help="planar_code files")
    _add_sweep_flags(p)
    p.set_defaults(func=cmd_problem1)

    p = sub.add_parser("bound", help="print the proved upper and cited lower bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("emit-dot", help="DOT output for a construction or edge list")
    p.add_argument("--g", type=int, help="digirth for a constructed instance")
    p.add_argument("--f", type=int, help="feedback size for a constructed instance")
    p.add_argument("--input", help="edge-list file to render instead of constructing")
    p.add_argument("--out", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_emit_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    if args.command == "emit-dot" and not args.input and (args.g is None or args.f is None):
        parser.error("emit-dot needs either --input or both --g and --f")
    try:
        return args.func(args)
    except ParseError as exc:
        _info(f"parse error: {exc}")
        return 2
    except ResourceGuardError as exc:
        _info(f"resource guard: {exc}")
        return 2
    except Error as exc:
        _info(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
