"""JSON instance/certificate documents and DOT export."""

from __future__ import annotations

import hashlib
import json
from typing import Any

from apc.cgs import CgsInstance, Summand, build_cgs
from apc.errors import InstanceError
from apc.graph import CycleSeq, EdgeColor, edge_key, is_alternating_cycle


class DocumentError(InstanceError):
    """Malformed document; the message names the offending location."""


def _color(value: Any, where: str) -> EdgeColor:
    if value not in ("red", "blue"):
        raise DocumentError(f"{where}: color must be \"red\" or \"blue\", got {value!r}")
    return EdgeColor(value)


def _edge_list(items: Any, ids: dict[str, int], where: str) -> dict[tuple[int, int], EdgeColor]:
    if not isinstance(items, list):
        raise DocumentError(f"{where}: expected a list")
    out: dict[tuple[int, int], EdgeColor] = {}
    for k, item in enumerate(items):
        loc = f"{where}[{k}]"
        if not (isinstance(item, list) and len(item) == 3):
            raise DocumentError(f"{loc}: expected [u, v, color]")
        u, v, c = item
        for name in (u, v):
            if name not in ids:
                raise DocumentError(f"{loc}: unknown vertex {name!r}")
        key = edge_key(ids[u], ids[v])
        if key in out:
            raise DocumentError(f"{loc}: edge {u}-{v} listed twice")
        out[key] = _color(c, loc)
    return out


def parse_instance(doc: Any) -> CgsInstance:
    """Build an instance from a parsed JSON document.

    String ids become dense integer ids in order of first appearance in the
    summands' ``vertices`` lists.
    """
    if not isinstance(doc, dict):
        raise DocumentError("top level: expected an object")
    raw = doc.get("summands")
    if not isinstance(raw, list):
        raise DocumentError("summands: expected a list")
    names: list[str] = []
    ids: dict[str, int] = {}
    for i, s in enumerate(raw):
        if not isinstance(s, dict):
            raise DocumentError(f"summands[{i}]: expected an object")
        verts = s.get("vertices")
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise DocumentError(f"summands[{i}].vertices: expected a list of strings")
        for v in verts:
            if v in ids:
                raise DocumentError(f"summands[{i}].vertices: vertex {v!r} appears twice")
            ids[v] = len(names)
            names.append(v)
    summands = []
    for i, s in enumerate(raw):
        cycle = s.get("cycle")
        if not isinstance(cycle, list) or any(v not in ids for v in cycle):
            raise DocumentError(f"summands[{i}].cycle: expected a list of known vertex ids")
        summands.append(
            Summand(
                tuple(ids[v] for v in s["vertices"]),
                tuple(ids[v] for v in cycle),
                _edge_list(s.get("edges"), ids, f"summands[{i}].edges"),
            )
        )
    exterior = _edge_list(doc.get("exterior"), ids, "exterior")
    try:
        return build_cgs(summands, exterior, names)
    except InstanceError as exc:
        raise type(exc)(f"validation: {exc}") from exc


def loads_instance(text: str) -> CgsInstance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parse_instance(doc)


def render_instance(inst: CgsInstance) -> dict:
    name = inst.name

    def edges(table):
        return [[name(u), name(v), c.value] for (u, v), c in sorted(table.items())]

    return {
        "summands": [
            {
                "vertices": [name(v) for v in sorted(s.vertices)],
                "cycle": [name(v) for v in s.cycle],
                "edges": edges(s.edges),
            }
            for s in inst.summands
        ],
        "exterior": edges(inst.exterior),
    }


def _flat(value) -> str:
    return json.dumps(value, separators=(", ", ": "))


def dumps_instance(inst: CgsInstance) -> str:
    """Stable text form: one edge per line, id lists on one line."""
    doc = render_instance(inst)
    out = ['{\n "summands": [']
    for k, s in enumerate(doc["summands"]):
        edges = ",\n".join("    " + _flat(e) for e in s["edges"])
        out.append(
            "  {\n"
            f'   "vertices": {_flat(s["vertices"])},\n'
            f'   "cycle": {_flat(s["cycle"])},\n'
            f'   "edges": [\n{edges}\n   ]\n'
            "  }" + ("," if k + 1 < len(doc["summands"]) else "")
        )
    out.append(" ],")
    ext = ",\n".join("  " + _flat(e) for e in doc["exterior"])
    out.append(f' "exterior": [\n{ext}\n ]\n}}\n')
    return "\n".join(out)


def instance_fingerprint(inst: CgsInstance) -> str:
    blob = json.dumps(render_instance(inst), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


# -- certificates -----------------------------------------------------------


def render_certificate(cert, inst: CgsInstance) -> dict:
    name = inst.name
    return {
        "fingerprint": cert.fingerprint,
        "vertex_count": cert.vertex_count,
        "entries": [
            {"vertex": name(v), "length": L, "cycle": [name(u) for u in cert.entries[(v, L)].vertices]}
            for (v, L) in sorted(cert.entries)
        ],
    }


def verify_certificate_document(doc: Any, inst: CgsInstance) -> list[str]:
    """Re-check a certificate document against an instance.

    Uses nothing but the alternation test on the flattened graph, so the
    result does not depend on how the certificate was produced.
    """
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
        return ["certificate: expected an object with an 'entries' list"]
    problems = []
    if doc.get("fingerprint") != instance_fingerprint(inst):
        problems.append("fingerprint does not match the instance")
    g = inst.graph
    ids = {n: i for i, n in enumerate(inst.names)}
    seen = set()
    for k, entry in enumerate(doc["entries"]):
        loc = f"entries[{k}]"
        try:
            v, L, cyc = entry["vertex"], entry["length"], entry["cycle"]
        except (TypeError, KeyError):
            problems.append(f"{loc}: expected vertex, length and cycle")
            continue
        if v not in ids or not isinstance(cyc, list) or any(u not in ids for u in cyc):
            problems.append(f"{loc}: unknown vertex id")
            continue
        seq = [ids[u] for u in cyc]
        if len(seq) != L:
            problems.append(f"{loc}: cycle length {len(seq)} != {L}")
        if ids[v] not in seq:
            problems.append(f"{loc}: {v} is not on the cycle")
        if not is_alternating_cycle(g, seq):
            problems.append(f"{loc}: not an alternating cycle")
        seen.add((ids[v], L))
    n = inst.vertex_count
    required = {(v, L) for v in range(n) for L in range(4, n + 1, 2)}
    if required - seen:
        problems.append(f"{len(required - seen)} (vertex, length) cells missing")
    return problems


# -- DOT --------------------------------------------------------------------


def render_dot(inst: CgsInstance, highlight: CycleSeq | None = None) -> str:
    bold = set(highlight.edges()) if highlight is not None else set()
    lines = ["graph cgs {", "  node [shape=circle];"]
    for i, s in enumerate(inst.summands):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="G{i}";')
        for v in sorted(s.vertices):
            lines.append(f'    "{inst.name(v)}";')
        lines.append("  }")
    for (u, v), c in sorted(inst.graph.edges.items()):
        styles = []
        if (u, v) in inst.exterior:
            styles.append("dashed")
        if (u, v) in bold:
            styles.append("bold")
        attrs = f"color={c.value}"
        if styles:
            attrs += f', style="{",".join(styles)}"'
        if (u, v) in bold:
            attrs += ", penwidth=3"
        lines.append(f'  "{inst.name(u)}" -- "{inst.name(v)}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
