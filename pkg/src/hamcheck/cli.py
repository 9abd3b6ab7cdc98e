"""Command-line surface: analyze graphs, reproduce Table 1, run soundness scans.

Exit codes: 0 clean, 2 parse/processing errors, 64 usage errors (unknown
subcommand, theorem, family, or bad parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Iterator, Optional, TextIO

from . import verify as verify_mod
from .conditions import Status, Verdict
from .families import FamilyId, FamilyTag, NC_GRAPHS, NP_GRAPHS, make_family
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .graphs import Graph, bipartite_from_graph, from_edges, is_connected, two_coloring
from .oracle import MAX_DP_N, is_hamiltonian, is_traceable
from .spectral import DEFAULT_CMP_TOL, DEFAULT_TOL, q_radius, rho

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit 2; we reserve that
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hamcheck", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common_io(p):
        p.add_argument("file", nargs="?", help="input file (default: stdin)")
        p.add_argument("--edgelist", action="store_true",
                       help="input is one edge list ('n m' then m lines 'u v') instead of graph6 lines")
        p.add_argument("--strict", action="store_true",
                       help="stop at the first malformed record instead of skipping it")

    def common_flags(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="spectral convergence tolerance")
        p.add_argument("--cmp-tol", type=float, default=DEFAULT_CMP_TOL,
                       help="threshold comparison tolerance")
        p.add_argument("--deterministic", action="store_true",
                       help="suppress timing fields for byte-identical reruns")

    p_analyze = sub.add_parser("analyze", help="run every applicable checker on input graphs")
    common_io(p_analyze)
    common_flags(p_analyze)

    p_table1 = sub.add_parser("table1", help="recompute the 18 published q values")
    common_flags(p_table1)
    p_table1.add_argument("--tolerance", type=float, default=5e-5,
                          help="max allowed |computed - published|")

    p_verify = sub.add_parser("verify", help="exhaustive soundness scan of a theorem")
    common_flags(p_verify)
    p_verify.add_argument("--theorem", required=True,
                          help="theorem id or 'all' (see 'verify --theorem list')")
    p_verify.add_argument("--max-n", type=int, default=verify_mod.DEFAULT_MAX_N)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--tightness", action="store_true",
                          help="also report near-miss witnesses and exception hypotheses")

    p_family = sub.add_parser("family", help="emit a named family instance")
    p_family.add_argument("name", help="family name, e.g. Knn1PlusEdge, NC, Star")
    p_family.add_argument("--n", type=int)
    p_family.add_argument("--p", type=int)
    p_family.add_argument("--index", type=int)
    p_family.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p_family.add_argument("--deterministic", action="store_true")

    p_oracle = sub.add_parser("oracle", help="exact Hamiltonicity/traceability with witnesses")
    common_io(p_oracle)
    common_flags(p_oracle)

    return parser


# ------------------------------------------------------------------ input

def _read_graphs(args) -> Iterator[tuple[str, Optional[Graph], Optional[str]]]:
    """Yield (record id, graph, error message); exactly one of graph/error set."""
    stream: TextIO
    name = args.file or "<stdin>"
    stream = open(args.file) if args.file else sys.stdin
    try:
        if args.edgelist:
            yield (name, *_parse_edgelist(stream))
            return
        for lineno, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            rec_id = f"{name}:{lineno}"
            try:
                yield rec_id, parse_graph6(line), None
            except Graph6Error as exc:
                yield rec_id, None, str(exc)
    finally:
        if args.file:
            stream.close()


def _parse_edgelist(stream: TextIO) -> tuple[Optional[Graph], Optional[str]]:
    tokens = stream.read().split()
    try:
        if len(tokens) < 2:
            raise ValueError("edge list needs a leading 'n m' header")
        n, m = int(tokens[0]), int(tokens[1])
        if len(tokens) != 2 + 2 * m:
            raise ValueError(f"expected {m} edges, found {(len(tokens) - 2) // 2}")
        edges = [(int(tokens[2 + 2 * k]), int(tokens[3 + 2 * k])) for k in range(m)]
        return from_edges(n, edges), None
    except ValueError as exc:
        return None, str(exc)


# ----------------------------------------------------------------- output

def _verdict_dict(checker: str, v: Verdict) -> dict:
    return {
        "checker": checker,
        "status": v.status.value,
        "property": v.prop,
        "certificate": [[key, value] for key, value in v.certificate],
        "family": str(v.family) if v.family is not None else None,
        "note": v.note,
    }


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record))
        return
    print(f"== {record['id']}: n={record['n']} m={record['m']} min_degree={record['min_degree']}")
    if record.get("rho") is not None:
        print(f"   rho={record['rho']:.6f} q={record['q']:.6f}")
    for v in record.get("verdicts", ()):
        cert = " ".join(f"{k}={val:g}" for k, val in v["certificate"])
        extra = f" family={v['family']}" if v["family"] else ""
        note = f" ({v['note']})" if v["note"] else ""
        print(f"   {v['checker']}: {v['status']}{extra} {cert}{note}")
    oracle = record.get("oracle")
    if oracle is not None:
        print(f"   oracle: hamiltonian={oracle['hamiltonian']} traceable={oracle['traceable']}")


# ---------------------------------------------------------------- analyze

def _applicable_verdicts(g: Graph, tol: float, cmp_tol: float) -> list[dict]:
    verdicts = []
    objects: list[tuple[object, str]] = [(g, "general")]
    if g.n >= 2 and is_connected(g):
        left = two_coloring(g)
        if left is not None:
            b = bipartite_from_graph(g, left)
            if b.p < b.q:  # checkers expect the larger side first
                from .conditions import _transpose

                b = _transpose(b)
            objects.append((b, "bip_balanced" if b.p == b.q else "bip_unbalanced"))
    for obj, kind in objects:
        for tid, spec in verify_mod.THEOREMS.items():
            if spec.kind != kind:
                continue
            verdict = spec.checker(obj)
            if verdict.status is not Status.NOT_APPLICABLE:
                verdicts.append(_verdict_dict(tid, verdict))
    return verdicts


def cmd_analyze(args) -> int:
    status = EXIT_OK
    for rec_id, g, err in _read_graphs(args):
        if err is not None:
            print(f"error: {rec_id}: {err}", file=sys.stderr)
            status = EXIT_PARSE
            if args.strict:
                return status
            continue
        record = {
            "id": rec_id,
            "graph6": write_graph6(g),
            "n": g.n,
            "m": g.edge_count(),
            "min_degree": g.min_degree(),
            "rho": None,
            "q": None,
        }
        if g.n > 0:
            record["rho"] = rho(g, tol=args.tol).value
            record["q"] = q_radius(g, tol=args.tol).value
        record["verdicts"] = _applicable_verdicts(g, args.tol, args.cmp_tol)
        if 0 < g.n <= MAX_DP_N:
            record["oracle"] = {
                "hamiltonian": is_hamiltonian(g) is not None,
                "traceable": is_traceable(g) is not None,
            }
        _emit(record, args.format)
    return status


# ----------------------------------------------------------------- table1

def cmd_table1(args) -> int:
    rows = verify_mod.table1_report(args.tolerance)
    all_ok = True
    out = []
    for name, computed, published, diff in rows:
        ok = diff <= args.tolerance
        all_ok &= ok
        out.append({"name": name, "computed": computed, "published": published,
                    "diff": diff, "pass": ok})
    if args.format == "json":
        print(json.dumps(out))
    else:
        for row in out:
            flag = "" if row["pass"] else "  <-- MISMATCH"
            print(f"{row['name']:<20} q={row['computed']:9.4f} published={row['published']:9.4f}"
                  f" diff={row['diff']:.2e}{flag}")
        print(f"{'all 18 rows within' if all_ok else 'MISMATCHES above'} "
              f"tolerance {args.tolerance:g}")
    return EXIT_OK if all_ok else 1


# ----------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    if args.theorem == "list":
        for tid in verify_mod.theorem_ids():
            print(tid)
        return EXIT_OK
    if args.theorem == "all":
        ids = verify_mod.theorem_ids()
    elif args.theorem in verify_mod.THEOREMS:
        ids = [args.theorem]
    else:
        print(f"hamcheck verify: unknown theorem {args.theorem!r} "
              f"(try --theorem list)", file=sys.stderr)
        return EXIT_USAGE
    all_pass = True
    reports = []
    for tid in ids:
        start = time.monotonic()
        report = verify_mod.soundness(tid, max_n=args.max_n, jobs=args.jobs)
        payload = report.to_dict()
        if not args.deterministic:
            payload["elapsed_s"] = round(time.monotonic() - start, 3)
        if args.tightness and verify_mod.THEOREMS[tid].hyp is not None:
            payload["tightness"] = verify_mod.tightness_search(tid, max_n=args.max_n)
        reports.append(payload)
        all_pass &= report.passed
        if args.format == "text":
            print(report.summary_line())
            if args.tightness and "tightness" in payload:
                miss = payload["tightness"]["best_near_miss"]
                if miss:
                    print(f"  near miss: {miss['graph6']} value={miss['value']:.6f} "
                          f"threshold={miss['threshold']:.6f}")
                for exc in payload["tightness"]["exceptions"]:
                    print(f"  exception {exc['family']}: value={exc['value']:.6f} "
                          f"threshold={exc['threshold']:.6f} "
                          f"hypothesis_satisfied={exc['hypothesis_satisfied']}")
    if args.format == "json":
        print(json.dumps(reports))
    return EXIT_OK if all_pass else 1


# ----------------------------------------------------------------- family

_FAMILY_BY_NAME = {
    "complete": (FamilyTag.COMPLETE, ("n",)),
    "completebipartite": (FamilyTag.COMPLETE_BIPARTITE, ("p", "n")),
    "cycle": (FamilyTag.CYCLE, ("n",)),
    "star": (FamilyTag.STAR, ("n",)),
    "kn1plusedge": (FamilyTag.KN1_PLUS_EDGE, ("n",)),
    "kn1plusvertex": (FamilyTag.KN1_PLUS_VERTEX, ("n",)),
    "knn1plusedge": (FamilyTag.KNN1_PLUS_EDGE, ("n",)),
    "kpn2plus4e": (FamilyTag.KPN2_PLUS_4E, ("n", "p")),
    "knn1plus2e": (FamilyTag.KNN1_PLUS_2E, ("n",)),
}


def cmd_family(args) -> int:
    key = args.name.replace("_", "").replace("-", "").lower()
    if key in ("nc", "np"):
        members = NC_GRAPHS if key == "nc" else NP_GRAPHS
        if args.index is None or not 0 <= args.index < len(members):
            print(f"hamcheck family: {args.name} needs --index in 0..{len(members) - 1}",
                  file=sys.stderr)
            return EXIT_USAGE
        tag = FamilyTag.NC_MEMBER if key == "nc" else FamilyTag.NP_MEMBER
        fid = FamilyId(tag, (args.index,))
    elif key in _FAMILY_BY_NAME:
        tag, param_names = _FAMILY_BY_NAME[key]
        params = []
        for pname in param_names:
            value = getattr(args, pname)
            if value is None:
                print(f"hamcheck family: {args.name} needs --{pname}", file=sys.stderr)
                return EXIT_USAGE
            params.append(value)
        fid = FamilyId(tag, tuple(params))
    else:
        print(f"hamcheck family: unknown family {args.name!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        built = make_family(fid)
    except ValueError as exc:
        print(f"hamcheck family: {exc}", file=sys.stderr)
        return EXIT_USAGE
    g = built.to_graph() if hasattr(built, "to_graph") else built
    if args.format == "graph6":
        print(write_graph6(g))
    else:
        print(g.n, g.edge_count())
        for u, v in g.edges():
            print(u, v)
    return EXIT_OK


# ----------------------------------------------------------------- oracle

def cmd_oracle(args) -> int:
    status = EXIT_OK
    for rec_id, g, err in _read_graphs(args):
        if err is not None:
            print(f"error: {rec_id}: {err}", file=sys.stderr)
            status = EXIT_PARSE
            if args.strict:
                return status
            continue
        if g.n > MAX_DP_N:
            print(f"error: {rec_id}: oracle capped at n <= {MAX_DP_N}", file=sys.stderr)
            status = EXIT_PARSE
            if args.strict:
                return status
            continue
        ham = is_hamiltonian(g)
        tra = is_traceable(g)
        record = {
            "id": rec_id,
            "n": g.n,
            "hamiltonian": ham is not None,
            "cycle": list(ham.order) if ham else None,
            "traceable": tra is not None,
            "path": list(tra.order) if tra else None,
        }
        if args.format == "json":
            print(json.dumps(record))
        else:
            print(f"{rec_id}: hamiltonian={record['hamiltonian']} cycle={record['cycle']} "
                  f"traceable={record['traceable']} path={record['path']}")
    return status


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "analyze": cmd_analyze,
        "table1": cmd_table1,
        "verify": cmd_verify,
        "family": cmd_family,
        "oracle": cmd_oracle,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
