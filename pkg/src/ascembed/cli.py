"""Command-line front end.

Exit codes: 0 success, 1 precondition violated, 2 parse error, 3 budget abort.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .analysis import asc_verdict, classify_diam2
from .constructions import embed_by_method, embed_path
from .errors import ParseError, PreconditionError
from .families import FAMILY_KINDS, FamilySpec, build_family
from .graph import Graph, ecc_profile
from .graph6io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .reports import (
    asc_verdict_report,
    classification_report,
    certificate_report,
    ecc_profile_report,
    embedding_manifest,
    graph_report,
    smallest_report,
    verify_report,
)
from .solver import Budget, exact_index, exists_extension, smallest_asc_order

_EMBED_METHODS = (
    "auto",
    "hat",
    "connected",
    "general",
    "complete",
    "diam2_four",
    "2sc_three",
    "triple_isolated",
    "triple_p3",
    "path",
    "cycle",
    "caterpillar",
)

_FAMILY_HELP = """\
family spec grammar: NAME or NAME:P1[,P2]
  path:n (n>=1)            cycle:n (n>=3)           complete:n (n>=1)
  star:t (t>=1)            complete_bipartite:a,b   cocktail_party:n (n>=1)
  k1_join_matchings:t      caterpillar:n,k (n>=4, 2<=k<=n-2)
  gadget_c_star:n (n>=3)   gadget_c_prime:n (n>=3)  gadget_c8_double
  petersen
examples: --family path:9   --family caterpillar:12,6   --family petersen
"""


def _add_input_group(sub: argparse.ArgumentParser) -> None:
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", metavar="SPEC", help="family spec, e.g. path:9 (see epilog)")
    grp.add_argument("--g6", metavar="G6", help="graph6 string, or - to read one line from stdin")
    grp.add_argument("--edge-list", metavar="PATH", help="edge-list file, or - for stdin")


def _add_budget_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--budget-candidates", type=int, default=10**8, metavar="N",
                     help="candidate ceiling per search call (default 1e8)")
    sub.add_argument("--budget-seconds", type=float, default=300.0, metavar="S",
                     help="wall-clock ceiling per search call (default 300)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ascembed",
        description="Almost-self-centered graph analysis, embeddings, and exact indices.",
        epilog=_FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="eccentricity profile of a graph",
                       epilog=_FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_input_group(p)
    _add_output_args(p)

    p = sub.add_parser("check", help="almost-self-centered verdict",
                       epilog=_FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_input_group(p)
    _add_output_args(p)

    p = sub.add_parser("classify", help="3-ASC index class of a diameter-2 graph",
                       epilog=_FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_input_group(p)
    _add_output_args(p)

    p = sub.add_parser("embed", help="build a verified r-ASC embedding",
                       epilog=_FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_input_group(p)
    p.add_argument("--r", type=int, default=3, help="target radius (default 3)")
    p.add_argument("--method", choices=_EMBED_METHODS, default="auto",
                   help="construction to use (default auto)")
    _add_output_args(p)

    p = sub.add_parser("index", help="exact r-ASC index with certificate",
                       epilog=_FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_input_group(p)
    p.add_argument("--r", type=int, default=3, help="target radius (default 3)")
    p.add_argument("--max-k", type=int, default=None, metavar="K",
                   help="largest added-vertex count to search (default 2r, capped by feasibility)")
    p.add_argument("--threads", type=int, default=1, help="parallel search windows (default 1)")
    _add_budget_args(p)
    _add_output_args(p)

    p = sub.add_parser("smallest", help="least order of any r-ASC graph")
    p.add_argument("--r", type=int, default=3, help="target radius (default 3)")
    p.add_argument("--max-n", type=int, required=True, metavar="N", help="largest order to search")
    p.add_argument("--start-n", type=int, default=None, metavar="N",
                   help="first order to search (default: least order an r-ASC graph can have)")
    _add_budget_args(p)
    _add_output_args(p)

    p = sub.add_parser("gen", help="emit a family graph",
                       epilog=_FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--family", metavar="SPEC", required=True)
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    _add_output_args(p)

    p = sub.add_parser("verify", help="re-check a JSON report's claims")
    p.add_argument("report", metavar="PATH", help="report file, or - for stdin")
    _add_output_args(p)

    p = sub.add_parser("bench", help="eccentricity and solver throughput")
    p.add_argument("--path-order", type=int, default=10**4, metavar="N",
                   help="order of the path whose host is profiled (default 10000)")
    _add_output_args(p)
    return parser


def _add_output_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true", help="emit the JSON report")
    sub.add_argument("--output", metavar="PATH", help="write the report to a file instead of stdout")


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.family is not None:
        spec = FamilySpec.parse(args.family)
        return build_family(spec.kind, *spec.params)
    if args.g6 is not None:
        text = sys.stdin.readline() if args.g6 == "-" else args.g6
        return parse_graph6(text)
    if args.edge_list == "-":
        return parse_edge_list(sys.stdin.read())
    with open(args.edge_list, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def _vertex_list(vs, cap: int = 32) -> str:
    head = " ".join(str(v) for v in vs[:cap])
    return head + (" ..." if len(vs) > cap else "")


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(args: argparse.Namespace, doc: dict, plain: str) -> None:
    _emit(args, json.dumps(doc, indent=2) if args.json else plain)


def _cmd_info(args) -> int:
    g = _load_graph(args)
    prof = ecc_profile(g)
    plain = (
        f"order {g.n}, size {g.size}\n"
        f"radius {prof.radius}, diameter {prof.diameter}\n"
        f"center ({len(prof.center)}): {_vertex_list(prof.center)}\n"
        f"periphery ({len(prof.periphery)}): {_vertex_list(prof.periphery)}"
    )
    _render(args, ecc_profile_report(g), plain)
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args)
    verdict = asc_verdict(g)
    if verdict.is_asc:
        plain = f"{verdict.r}-ASC (r={verdict.r}), non-central: 2 vertices"
    else:
        prof = ecc_profile(g)
        plain = (
            f"not ASC: {len(verdict.non_central)} non-central vertices "
            f"(radius {prof.radius}, diameter {prof.diameter})"
        )
    _render(args, asc_verdict_report(g, verdict), plain)
    return 0


def _cmd_classify(args) -> int:
    g = _load_graph(args)
    cls = classify_diam2(g)
    lines = [f"verdict: {cls.verdict}"]
    for w in cls.checks:
        if w.holds:
            lines.append(f"{w.theorem}: holds, witness ({', '.join(str(v) for v in w.witness)})")
        else:
            lines.append(f"{w.theorem}: fails")
    _render(args, classification_report(g, cls), "\n".join(lines))
    return 0


def _cmd_embed(args) -> int:
    g = _load_graph(args)
    emb = embed_by_method(g, args.method, args.r)
    roles = " ".join(f"{role}={v}" for role, v in emb.added)
    plain = (
        f"method: {emb.method}, r={emb.r}\n"
        f"guest order {emb.guest.n}, host order {emb.host.n} ({emb.r}-ASC verified)\n"
        f"added ({len(emb.added)}): {roles if roles else '-'}\n"
        f"map: {_vertex_list(emb.map, cap=64)}"
    )
    _render(args, embedding_manifest(emb), plain)
    if args.output and emb.host.n > 62:
        # hosts too big for graph6 also get a standalone edge-list file
        with open(args.output + ".edges", "w", encoding="ascii") as fh:
            fh.write(write_edge_list(emb.host))
    return 0


def _cmd_index(args) -> int:
    g = _load_graph(args)
    budget = Budget(args.budget_candidates, args.budget_seconds)
    cert = exact_index(g, args.r, max_k=args.max_k, budget=budget, threads=args.threads)
    if cert.status == "exact":
        head = f"theta_{cert.r} = {cert.k} (exact)"
    elif cert.status == "lower_bound":
        head = f"theta_{cert.r} >= {cert.k} (lower bound, exhausted k <= {cert.exhausted_k})"
    else:
        head = f"aborted: budget hit, proven theta_{cert.r} >= {cert.k} (exhausted k <= {cert.exhausted_k})"
    lines = [head, f"guest: order {g.n}, id {cert.guest_id[:16]}"]
    if cert.witness is not None:
        lines.append(f"witness host: order {cert.witness.host.n} (verified)")
    lines.append(f"{cert.candidates_examined} candidates in {cert.elapsed:.2f} s")
    _render(args, certificate_report(cert, g), "\n".join(lines))
    return 3 if cert.status == "aborted" else 0


def _cmd_smallest(args) -> int:
    budget = Budget(args.budget_candidates, args.budget_seconds)
    res = smallest_asc_order(args.r, args.max_n, start_n=args.start_n, budget=budget)
    if res.status == "found":
        head = f"smallest {res.r}-ASC order: {res.order} (witness verified)"
    elif res.status == "lower_bound":
        head = f"no {res.r}-ASC graph up to order {res.orders_exhausted}"
    else:
        head = f"aborted: budget hit, orders <= {res.orders_exhausted} exhausted"
    plain = f"{head}\n{res.candidates_examined} candidates in {res.elapsed:.2f} s"
    _render(args, smallest_report(res), plain)
    return 3 if res.status == "aborted" else 0


def _cmd_gen(args) -> int:
    spec = FamilySpec.parse(args.family)
    g = build_family(spec.kind, *spec.params)
    if args.json:
        _emit(args, json.dumps(graph_report(g), indent=2))
    elif args.format == "g6":
        _emit(args, write_graph6(g))
    else:
        _emit(args, write_edge_list(g))
    return 0


def _cmd_verify(args) -> int:
    raw = sys.stdin.read() if args.report == "-" else open(args.report, "r", encoding="ascii").read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"report is not valid JSON: {exc}") from exc
    ok, detail = verify_report(doc)
    verdict = "valid" if ok else "invalid"
    payload = {"schema": 1, "kind": "verification", "verdict": verdict, "detail": detail}
    _render(args, payload, f"{verdict}: {detail}")
    return 0 if ok else 1


def _cmd_bench(args) -> int:
    host = embed_path(args.path_order).host
    t0 = time.perf_counter()
    ecc_profile(host)
    ecc_elapsed = time.perf_counter() - t0

    guest = build_family("path", 9)
    exists_extension(guest, 3, 1)  # warm the compiled kernels
    t0 = time.perf_counter()
    outcome = exists_extension(guest, 3, 2)
    solver_elapsed = max(time.perf_counter() - t0, 1e-9)
    rate = outcome.candidates_examined / solver_elapsed

    doc = {
        "schema": 1,
        "kind": "bench",
        "ecc": {
            "family": f"path:{args.path_order}",
            "host_order": host.n,
            "elapsed_ms": int(round(ecc_elapsed * 1000)),
            "rate_per_s": round(host.n / max(ecc_elapsed, 1e-9), 1),
        },
        "solver": {
            "guest": "path:9",
            "r": 3,
            "k": 2,
            "status": outcome.status,
            "candidates_examined": outcome.candidates_examined,
            "elapsed_ms": int(round(solver_elapsed * 1000)),
            "rate_per_s": round(rate, 1),
        },
    }
    plain = (
        f"ecc_profile: host order {host.n} in {ecc_elapsed:.3f} s "
        f"({host.n / max(ecc_elapsed, 1e-9):.0f} vertices/s)\n"
        f"solver: (path:9, r=3, k=2) {outcome.status} after {outcome.candidates_examined} "
        f"candidates in {solver_elapsed:.3f} s ({rate:.0f} candidates/s)"
    )
    _render(args, doc, plain)
    return 0


_COMMANDS = {
    "info": _cmd_info,
    "check": _cmd_check,
    "classify": _cmd_classify,
    "embed": _cmd_embed,
    "index": _cmd_index,
    "smallest": _cmd_smallest,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
