"""JSON serialization of schemes.

A scheme document is an array of entries; every set is emitted sorted so
documents are byte-stable and round-trip to equal values.
"""

from __future__ import annotations

import json

from ..errors import InputFormatError
from ..graphs import Graph
from .entry import Hyperedge, SchemeEntry, StepMeta


def entry_to_json(entry: SchemeEntry) -> dict:
    doc = {
        "graph": {"n": entry.graph.n, "edges": [[u, v] for u, v in entry.graph.edges()]},
        "model": {str(v): sorted(m) for v, m in sorted(entry.model.items())},
        "arcs": sorted([a, b] for a, b in entry.arcs),
        "hyperedges": [
            {"s": sorted(e.members), "j": e.label, "sink": e.sink}
            for e in entry.hyperedges
        ],
        "witnesses": {
            str(i): [sorted(s) for s in sets]
            for i, sets in sorted(entry.witnesses.items())
        },
        "witness_links": {
            str(i): [sorted(s) for s in sets]
            for i, sets in sorted(entry.witness_links.items())
        },
        "step_meta": None,
    }
    if entry.step_meta is not None:
        doc["step_meta"] = {
            "q": entry.step_meta.q,
            "U": sorted(entry.step_meta.u_set),
            "U_plus": sorted(entry.step_meta.u_plus),
        }
    return doc


def entry_from_json(doc: dict) -> SchemeEntry:
    try:
        graph = Graph.from_edges(
            doc["graph"]["n"], [tuple(e) for e in doc["graph"]["edges"]]
        )
        model = {int(v): frozenset(m) for v, m in doc["model"].items()}
        arcs = frozenset((a, b) for a, b in doc["arcs"])
        hyperedges = tuple(
            Hyperedge(frozenset(e["s"]), e["j"], e["sink"])
            for e in doc["hyperedges"]
        )
        witnesses = {
            int(i): tuple(frozenset(s) for s in sets)
            for i, sets in doc.get("witnesses", {}).items()
        }
        links = {
            int(i): tuple(frozenset(s) for s in sets)
            for i, sets in doc.get("witness_links", {}).items()
        }
        meta = None
        if doc.get("step_meta") is not None:
            m = doc["step_meta"]
            meta = StepMeta(
                q=m["q"],
                u_set=frozenset(m["U"]),
                u_plus=frozenset(m["U_plus"]),
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"malformed scheme entry: {exc}") from exc
    return SchemeEntry(
        graph=graph,
        model=model,
        arcs=arcs,
        hyperedges=hyperedges,
        witnesses=witnesses,
        witness_links=links,
        step_meta=meta,
    )


def scheme_to_json(scheme: list[SchemeEntry]) -> str:
    docs = [entry_to_json(e) for e in scheme]
    return json.dumps(docs, sort_keys=True, separators=(",", ":")) + "\n"


def scheme_from_json(text: str) -> list[SchemeEntry]:
    try:
        docs = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(docs, list):
        raise InputFormatError("scheme document must be a JSON array of entries")
    return [entry_from_json(d) for d in docs]
