"""JSON report serialization and the manifest re-verifier.

Every report carries {"schema": 1, "kind": ...} and enough raw material
(graph6 strings, maps, roles) for verify_report to re-check its claims from
the document alone. Hosts too large for graph6 (order > 62) inline their
edge-list text instead.
"""

from __future__ import annotations

from typing import Any

from .analysis import (
    AscVerdict,
    Diam2Classification,
    asc_verdict,
    classify_diam2,
    ecc_set,
    revalidate,
)
from .constructions import Embedding, verify_embedding
from .errors import DisconnectedGraphError, InternalCheckError, ParseError, PreconditionError
from .graph import Graph, ecc_profile
from .graph6io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .solver import IndexCertificate, OrderSearchResult

SCHEMA = 1

KINDS = (
    "graph",
    "ecc_profile",
    "asc_verdict",
    "diam2_classification",
    "embedding",
    "certificate",
    "smallest_asc",
    "bench",
)


def _graph_fields(g: Graph, prefix: str) -> dict[str, Any]:
    if g.n <= 62:
        return {f"{prefix}_graph6": write_graph6(g)}
    return {f"{prefix}_edges": write_edge_list(g)}


def _graph_from_fields(doc: dict, prefix: str) -> Graph:
    g6 = doc.get(f"{prefix}_graph6")
    if g6 is not None:
        return parse_graph6(g6)
    edges = doc.get(f"{prefix}_edges")
    if edges is None:
        raise ParseError(f"report has neither {prefix}_graph6 nor {prefix}_edges")
    return parse_edge_list(edges)


def graph_report(g: Graph) -> dict[str, Any]:
    doc = {"schema": SCHEMA, "kind": "graph", "n": g.n, "m": g.size}
    doc.update(_graph_fields(g, "graph"))
    return doc


def ecc_profile_report(g: Graph) -> dict[str, Any]:
    prof = ecc_profile(g)
    doc = {
        "schema": SCHEMA,
        "kind": "ecc_profile",
        "n": g.n,
        "m": g.size,
        "radius": prof.radius,
        "diameter": prof.diameter,
        "ecc": list(prof.ecc),
        "center": list(prof.center),
        "periphery": list(prof.periphery),
    }
    doc.update(_graph_fields(g, "graph"))
    return doc


def asc_verdict_report(g: Graph, verdict: AscVerdict) -> dict[str, Any]:
    doc = {
        "schema": SCHEMA,
        "kind": "asc_verdict",
        "is_asc": verdict.is_asc,
        "r": verdict.r,
        "non_central": list(verdict.non_central),
        "ecc_of_non_central": list(verdict.ecc_of_non_central),
    }
    doc.update(_graph_fields(g, "graph"))
    return doc


def classification_report(g: Graph, cls: Diam2Classification) -> dict[str, Any]:
    doc = {
        "schema": SCHEMA,
        "kind": "diam2_classification",
        "verdict": cls.verdict,
        "checks": [
            {"theorem": w.theorem, "holds": w.holds, "witness": list(w.witness)}
            for w in cls.checks
        ],
    }
    doc.update(_graph_fields(g, "graph"))
    return doc


def embedding_manifest(emb: Embedding) -> dict[str, Any]:
    doc = {
        "schema": SCHEMA,
        "kind": "embedding",
        "method": emb.method,
        "r": emb.r,
        "map": list(emb.map),
        "added": [[role, v] for role, v in emb.added],
    }
    doc.update(_graph_fields(emb.guest, "guest"))
    doc.update(_graph_fields(emb.host, "host"))
    return doc


def certificate_report(cert: IndexCertificate, guest: Graph) -> dict[str, Any]:
    """Certificate JSON; the guest is passed alongside since witness-free
    certificates (lower_bound, aborted) do not embed it."""
    wit = cert.witness
    return {
        "schema": SCHEMA,
        "kind": "certificate",
        "guest_graph6": write_graph6(guest),
        "r": cert.r,
        "status": cert.status,
        "k": cert.k,
        "witness_graph6": None if wit is None else write_graph6(wit.host),
        "witness_map": None if wit is None else list(wit.map),
        "exhausted_k": cert.exhausted_k,
        "candidates_examined": cert.candidates_examined,
        "elapsed_ms": int(round(cert.elapsed * 1000)),
    }


def smallest_report(res: OrderSearchResult) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "kind": "smallest_asc",
        "r": res.r,
        "status": res.status,
        "order": res.order,
        "witness_graph6": None if res.witness is None else write_graph6(res.witness),
        "orders_exhausted": res.orders_exhausted,
        "candidates_examined": res.candidates_examined,
        "elapsed_ms": int(round(res.elapsed * 1000)),
    }


# ---------------------------------------------------------------------------
# re-verification
# ---------------------------------------------------------------------------


def _fail(detail: str) -> tuple[bool, str]:
    return False, detail


def _check_common(doc: dict) -> str | None:
    if not isinstance(doc, dict):
        return "report is not a JSON object"
    if doc.get("schema") != SCHEMA:
        return f"unsupported schema {doc.get('schema')!r}"
    if doc.get("kind") not in KINDS:
        return f"unknown report kind {doc.get('kind')!r}"
    return None


def verify_report(doc: dict) -> tuple[bool, str]:
    """Re-check a report's claims from its own payload. Returns (ok, detail)."""
    problem = _check_common(doc)
    if problem:
        return _fail(problem)
    kind = doc["kind"]
    try:
        return _VERIFIERS[kind](doc)
    except (ParseError, PreconditionError, DisconnectedGraphError, InternalCheckError) as exc:
        return _fail(f"{kind}: {exc}")
    except (KeyError, TypeError, ValueError) as exc:
        return _fail(f"{kind}: malformed report ({exc})")


def _verify_graph(doc: dict) -> tuple[bool, str]:
    g = _graph_from_fields(doc, "graph")
    if doc["n"] != g.n or doc["m"] != g.size:
        return _fail(f"graph payload has n={g.n}, m={g.size}, report claims n={doc['n']}, m={doc['m']}")
    return True, f"graph of order {g.n} re-parsed"


def _verify_ecc_profile(doc: dict) -> tuple[bool, str]:
    g = _graph_from_fields(doc, "graph")
    prof = ecc_profile(g)
    claims = {
        "radius": prof.radius,
        "diameter": prof.diameter,
        "ecc": list(prof.ecc),
        "center": list(prof.center),
        "periphery": list(prof.periphery),
        "n": g.n,
        "m": g.size,
    }
    for key, want in claims.items():
        if doc[key] != want:
            return _fail(f"{key} recomputes to {want}, report says {doc[key]}")
    return True, "eccentricity profile recomputed and matches"


def _verify_asc_verdict(doc: dict) -> tuple[bool, str]:
    g = _graph_from_fields(doc, "graph")
    verdict = asc_verdict(g)
    claims = {
        "is_asc": verdict.is_asc,
        "r": verdict.r,
        "non_central": list(verdict.non_central),
        "ecc_of_non_central": list(verdict.ecc_of_non_central),
    }
    for key, want in claims.items():
        if doc[key] != want:
            return _fail(f"{key} recomputes to {want}, report says {doc[key]}")
    return True, "verdict recomputed and matches"


def _verify_classification(doc: dict) -> tuple[bool, str]:
    g = _graph_from_fields(doc, "graph")
    cls = classify_diam2(g)
    if cls.verdict != doc["verdict"]:
        return _fail(f"verdict recomputes to {cls.verdict}, report says {doc['verdict']}")
    recomputed = {w.theorem: w for w in cls.checks}
    for entry in doc["checks"]:
        want = recomputed.get(entry["theorem"])
        if want is None:
            return _fail(f"unknown checker {entry['theorem']!r}")
        if entry["holds"] != want.holds or tuple(entry["witness"]) != want.witness:
            return _fail(f"checker {entry['theorem']} recomputes differently")
        if not revalidate(g, want):
            return _fail(f"checker {entry['theorem']} witness fails revalidation")
    return True, "classification recomputed and matches"


def _embedding_from_manifest(doc: dict) -> Embedding:
    guest = _graph_from_fields(doc, "guest")
    host = _graph_from_fields(doc, "host")
    vmap = tuple(int(v) for v in doc["map"])
    added = tuple((str(role), int(v)) for role, v in doc["added"])
    return Embedding(guest, host, vmap, added, str(doc["method"]), int(doc["r"]))


def _verify_embedding(doc: dict) -> tuple[bool, str]:
    emb = _embedding_from_manifest(doc)
    verify_embedding(emb)
    return True, f"embedding re-verified: {emb.r}-ASC host of order {emb.host.n}, {len(emb.added)} added"


def _verify_certificate(doc: dict) -> tuple[bool, str]:
    status = doc["status"]
    if status not in ("exact", "lower_bound", "aborted"):
        return _fail(f"unknown certificate status {status!r}")
    guest = parse_graph6(doc["guest_graph6"])
    r, k, exhausted_k = int(doc["r"]), int(doc["k"]), int(doc["exhausted_k"])
    if status == "exact":
        if doc["witness_graph6"] is None:
            return _fail("exact certificate lacks a witness")
        if exhausted_k != k - 1:
            return _fail(f"exact(k={k}) requires exhausted_k = {k - 1}, got {exhausted_k}")
        host = parse_graph6(doc["witness_graph6"])
        vmap = tuple(int(v) for v in doc["witness_map"])
        spare = sorted(set(range(host.n)) - set(vmap))
        if host.n != guest.n + k or len(spare) != k:
            return _fail(f"witness order {host.n} does not equal guest {guest.n} plus k={k}")
        added = tuple((f"a_{i + 1}", v) for i, v in enumerate(spare))
        verify_embedding(Embedding(guest, host, vmap, added, "exact_search", r))
        return True, f"witness re-verified: theta_{r} <= {k} with exhaustion recorded at {exhausted_k}"
    if doc["witness_graph6"] is not None or doc["witness_map"] is not None:
        return _fail(f"{status} certificate must not carry a witness")
    if status == "lower_bound" and exhausted_k != k - 1:
        return _fail(f"lower_bound(k={k}) requires exhausted_k = {k - 1}, got {exhausted_k}")
    if status == "aborted" and exhausted_k != k - 1:
        return _fail(f"aborted certificate proves k >= {exhausted_k + 1}, but says k={k}")
    return True, f"{status} certificate is well-formed (exhaustion claim recorded, not re-run)"


def _verify_smallest(doc: dict) -> tuple[bool, str]:
    status = doc["status"]
    if status not in ("found", "lower_bound", "aborted"):
        return _fail(f"unknown order-search status {status!r}")
    r = int(doc["r"])
    if status == "found":
        if doc["witness_graph6"] is None or doc["order"] is None:
            return _fail("found result lacks a witness")
        witness = parse_graph6(doc["witness_graph6"])
        if witness.n != int(doc["order"]):
            return _fail(f"witness order {witness.n} does not match reported {doc['order']}")
        verdict = asc_verdict(witness)
        if not (verdict.is_asc and verdict.r == r):
            return _fail(f"witness is not {r}-ASC")
        return True, f"witness re-verified as a {r}-ASC graph of order {witness.n}"
    if doc["witness_graph6"] is not None or doc["order"] is not None:
        return _fail(f"{status} result must not carry a witness")
    return True, f"{status} result is well-formed (exhaustion claim recorded, not re-run)"


def _verify_bench(doc: dict) -> tuple[bool, str]:
    for section in ("ecc", "solver"):
        entry = doc[section]
        for field in ("elapsed_ms", "rate_per_s"):
            value = entry[field]
            if not isinstance(value, (int, float)) or value < 0:
                return _fail(f"{section}.{field} is not a non-negative number")
    return True, "bench report is well-formed (timings are environment facts, not re-run)"


_VERIFIERS = {
    "graph": _verify_graph,
    "ecc_profile": _verify_ecc_profile,
    "asc_verdict": _verify_asc_verdict,
    "diam2_classification": _verify_classification,
    "embedding": _verify_embedding,
    "certificate": _verify_certificate,
    "smallest_asc": _verify_smallest,
    "bench": _verify_bench,
}
