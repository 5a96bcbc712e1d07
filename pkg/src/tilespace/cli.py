"""Command-line entry point wiring the library together.

Machine-readable reports go to stdout (JSON unless another format is
selected); one-line summaries and diagnostics go to stderr.  Exit codes:
0 all checks passed, 1 a check failed or a computation raised, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .apcomplex import (build_complex, canonical_loop_vertices, chain_maps,
                        complex_to_dict, export_dot)
from .collaring import incidence_table
from .core import TilespaceError
from .dataset import load_dataset, validate_dataset
from .enumeration import enumeration_report
from .forcing import verify_border_forcing_k1, verify_border_forcing_uncollared
from .homology import hull_cohomology
from .invlimit import Thread, random_thread, realize, shift_right
from .symbolic1d import fibonacci, parse_rules_text, subshift_report

PROG = "tilespace"


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog=PROG,
        description="Collared pentagon substitution toolkit: derivation, "
                    "verification, complexes, cohomology.")
    top.add_argument("--dataset", metavar="DIR", default=None,
                     help="dataset directory (default: embedded copy, or "
                          "$TILESPACE_DATASET)")
    top.add_argument("--format", metavar="FMT", default=None,
                     choices=["json", "csv", "dot", "text"],
                     help="output format where the command supports several")
    top.add_argument("--seed", metavar="N", type=int, default=0,
                     help="random seed for randomized demos")
    top.add_argument("--out", metavar="FILE", default=None,
                     help="write the stdout report to FILE instead")
    sub = top.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub.add_parser("validate", help="structural checks on the dataset")
    sub.add_parser("enumerate",
                   help="re-derive the collared tiles and compare")
    sub.add_parser("incidence", help="edge/vertex incidence statistics")
    p = sub.add_parser("forcing", help="border forcing verification")
    p.add_argument("--uncollared", action="store_true",
                   help="group by bare pentagon type instead of collared tile")
    p.add_argument("--depth", type=int, default=1, metavar="K",
                   help="substitution power to check (default 1)")
    p = sub.add_parser("complex", help="build the cell complex")
    p.add_argument("--export", choices=["dot", "json"], default=None,
                   help="export format (default json)")
    p = sub.add_parser("cohomology", help="cohomology and hull limits")
    p.add_argument("--json", action="store_true",
                   help="full JSON report instead of the text summary")
    sub.add_parser("fib", help="Fibonacci collaring and forcing demo")
    p = sub.add_parser("subst1d", help="1D substitution pipeline")
    p.add_argument("--rules", required=True, metavar="FILE",
                   help="file of `symbol -> word` lines")
    p = sub.add_parser("shift", help="random thread walk demo")
    p.add_argument("--depth", type=int, default=3, metavar="N")
    # dest kept separate: a subparser default would clobber the global --seed
    p.add_argument("--seed", type=int, default=None, metavar="S",
                   dest="shift_seed")
    p = sub.add_parser("export-dot", help="DOT graph of the cell complex")
    p.add_argument("--faces", action="store_true",
                   help="include face nodes")
    return top


def _load(args):
    path = args.dataset or os.environ.get("TILESPACE_DATASET") or None
    return load_dataset(path)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload) -> None:
    _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _say(line: str) -> None:
    print(line, file=sys.stderr)


def _cmd_validate(args) -> int:
    d = _load(args)
    report = validate_dataset(d)
    counts = {"tiles": len(d.tiles), "edges": len(d.edges),
              "vertices": len(d.vertices), "rules": len(d.rules)}
    summary = (f"dataset {'valid' if report.passed else 'INVALID'}: "
               f"{counts['tiles']} tiles, {counts['edges']} edges, "
               f"{counts['vertices']} vertices, {counts['rules']} rules")
    _emit_json(args, {"counts": counts, "summary": summary,
                      **report.to_dict()})
    _say(summary)
    return 0 if report.passed else 1


def _cmd_enumerate(args) -> int:
    report = enumeration_report(_load(args))
    ok = report["match"] == "exact"
    summary = f"derived {report['derived']} tiles, match: {report['match']}"
    report["summary"] = summary
    _emit_json(args, report)
    _say(summary)
    return 0 if ok else 1


def _cmd_incidence(args) -> int:
    d = _load(args)
    table = incidence_table(d)
    if args.format == "csv":
        lines = ["kind,id,entries"]
        for eid in sorted(table.edgeToTiles):
            joined = ";".join(f"{t}.{s}" for t, s in table.edgeToTiles[eid])
            lines.append(f"edge,{eid},{joined}")
        for vid in sorted(table.vertexToEdges):
            joined = ";".join(str(e) for e in sorted(table.vertexToEdges[vid]))
            lines.append(f"vertex-edges,{vid},{joined}")
        for vid in sorted(table.vertexToTiles):
            joined = ";".join(str(t) for t in sorted(table.vertexToTiles[vid]))
            lines.append(f"vertex-tiles,{vid},{joined}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        stats = table.stats(d)
        stats["edgeToTiles"] = {
            eid: [list(pair) for pair in pairs]
            for eid, pairs in table.edgeToTiles.items()}
        _emit_json(args, stats)
    _say(f"incidence over {len(table.edgeToTiles)} edges, "
         f"{len(table.vertexToEdges)} vertices")
    return 0


def _cmd_forcing(args) -> int:
    d = _load(args)
    if args.uncollared:
        report = verify_border_forcing_uncollared(d, depth=args.depth)
        summary = (f"uncollared border forcing at k={report['depth']}: "
                   f"{'PASS' if report['passed'] else 'FAIL'} "
                   f"({report['singletons']}/{report['groups']} groups "
                   f"singleton)")
        report = dict(report)
        report["summary"] = summary
        _emit_json(args, report)
        _say(summary)
        return 0 if report["passed"] else 1
    report = verify_border_forcing_k1(d, depth=args.depth)
    total = len(report.perEdgeSide)
    summary = (f"edge-level border forcing at k={report.depth}: "
               f"{'PASS' if report.passed else 'FAIL'} "
               f"({report.singleton_count()}/{total} sides singleton)")
    payload = report.to_dict()
    payload["summary"] = summary
    _emit_json(args, payload)
    _say(summary)
    return 0 if report.passed else 1


def _cmd_complex(args) -> int:
    d = _load(args)
    c = build_complex(d)
    export = args.export or ("dot" if args.format == "dot" else "json")
    if export == "dot":
        _emit(args, export_dot(c, loop_vertices=canonical_loop_vertices(d)))
    else:
        _emit_json(args, complex_to_dict(c, chain_maps(d)))
    _say(f"complex: {c.face_count} faces, {c.edge_count} edges, "
         f"{c.vertex_count} vertices")
    return 0


def _cmd_cohomology(args) -> int:
    report = hull_cohomology(_load(args))
    if args.json or args.format == "json":
        _emit_json(args, report)
    else:
        lines = []
        for k in ("H0", "H1", "H2"):
            lines.append(f"{k}(complex) = {report['cohomology'][k]['pretty']}")
        for k in ("H0", "H1", "H2"):
            lim = report["limits"][k]
            lines.append(f"{k}(hull) rational dimension {lim['rationalDim']}, "
                         f"stabilizes at power {lim['stabilizationIndex']}")
        passed = sum(1 for c in report["checks"] if c["passed"])
        lines.append(f"checks: {passed}/{len(report['checks'])} passed")
        _emit(args, "\n".join(lines) + "\n")
    _say(f"hull cohomology over {report['complex']['faces']} faces: "
         f"{len(report['checks'])} checks passed")
    return 0


def _finish_1d(args, report, label) -> int:
    _emit_json(args, report)
    k = report["borderForcing"]["minimalK"]
    ok = all(c["passed"] for c in report["checks"])
    _say(f"{label}: {len(report['collaredLetters'])} collared letters, "
         f"border forcing k={k}, "
         f"H1 rank {report['cohomology']['H1']['rank']}")
    return 0 if ok else 1


def _cmd_fib(args) -> int:
    return _finish_1d(args, subshift_report(fibonacci()), "fibonacci")


def _cmd_subst1d(args) -> int:
    try:
        with open(args.rules) as fh:
            text = fh.read()
    except OSError as exc:
        _say(f"cannot read rules file: {exc}")
        return 2
    s = parse_rules_text(text)
    return _finish_1d(args, subshift_report(s), args.rules)


def _cmd_shift(args) -> int:
    d = _load(args)
    seed = args.shift_seed if args.shift_seed is not None else args.seed
    t = random_thread(args.depth, seed=seed, d=d)
    walk = []
    cur = t
    while True:
        walk.append(list(realize(cur, d)))
        if cur.depth == 0:
            break
        cur = shift_right(cur, d)
    _emit_json(args, {"seed": seed, "depth": t.depth, "baseFace": t.base_face,
                      "addresses": list(t.addresses), "walk": walk})
    _say(f"thread walk from face {t.base_face}, depth {t.depth}")
    return 0


def _cmd_export_dot(args) -> int:
    d = _load(args)
    c = build_complex(d)
    _emit(args, export_dot(c, faces=args.faces,
                           loop_vertices=canonical_loop_vertices(d)))
    _say(f"dot export: {c.vertex_count} vertices, {c.edge_count} edges"
         + (f", {c.face_count} faces" if args.faces else ""))
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "enumerate": _cmd_enumerate,
    "incidence": _cmd_incidence,
    "forcing": _cmd_forcing,
    "complex": _cmd_complex,
    "cohomology": _cmd_cohomology,
    "fib": _cmd_fib,
    "subst1d": _cmd_subst1d,
    "shift": _cmd_shift,
    "export-dot": _cmd_export_dot,
}


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TilespaceError as exc:
        _say(f"error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
