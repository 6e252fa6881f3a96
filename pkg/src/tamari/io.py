"""Serialization: poset documents (JSON), verification reports, DOT export.

All output here is byte-deterministic for identical inputs: elements are
emitted in index order, covers sorted, fibers by ascending level, and JSON
is dumped with a fixed key order and no NaN/Infinity escapes (vectors are
always serialized in their text form).
"""

from __future__ import annotations

import json
from typing import Mapping

from .elements import format_vector
from .poset import LevelAssignment, Poset

FORMAT_VERSION = 1

_KINDS = ("tamari_a", "tamari_b", "generic")


def _label_text(label) -> str:
    if isinstance(label, tuple):
        return format_vector(label)
    return str(label)


def elements_document(labels, kind: str = "generic", n: int | None = None) -> dict:
    """A poset document carrying only the element list (no covers)."""
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    doc: dict = {"format_version": FORMAT_VERSION, "kind": kind}
    if n is not None:
        doc["n"] = n
    doc["elements"] = [_label_text(lab) for lab in labels]
    return doc


def poset_document(
    p: Poset,
    kind: str = "generic",
    n: int | None = None,
    include_covers: bool = True,
    levels: LevelAssignment | None = None,
) -> dict:
    """Build the JSON-ready mapping describing a poset.

    ``covers`` is omitted when not requested (element-list exports) and
    ``levels`` is included only when a level assignment is supplied.
    """
    doc = elements_document(p.labels, kind=kind, n=n)
    if include_covers:
        doc["covers"] = [[u, v] for u, v in p.covers]
    if levels is not None:
        doc["levels"] = {str(i): lv for i, lv in enumerate(levels.levels)}
    return doc


def document_to_poset(doc: Mapping) -> Poset:
    """Rebuild a poset from a document; inverse of :func:`poset_document`.

    The element ordering is preserved exactly, so a rebuilt Tamari document
    is not merely isomorphic to the original but has the identical matrix.
    Documents without covers cannot reconstruct an order and are rejected.
    """
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {version!r}")
    if "covers" not in doc:
        raise ValueError("document has no covers; cannot rebuild the order")
    labels = list(doc["elements"])
    p = Poset.from_covers(labels, [tuple(c) for c in doc["covers"]])
    levels = doc.get("levels")
    if levels is not None:
        fibers: dict[int, list[int]] = {}
        for key, lv in levels.items():
            fibers.setdefault(int(lv), []).append(int(key))
        for members in fibers.values():
            for a in members:
                for b in members:
                    if a != b and p.leq(a, b):
                        raise ValueError(
                            f"level fiber is not an antichain: {labels[a]!r} <= {labels[b]!r}"
                        )
    return p


def dumps_document(doc: Mapping) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def report_document(report) -> dict:
    """ReportDocument mapping for a VerificationReport (fixed field names)."""
    doc: dict = {"claim": report.claim, "n": report.n, "status": report.status}
    if report.witness is not None:
        doc["witness"] = _jsonable(report.witness)
    if report.data is not None:
        doc["data"] = _jsonable(report.data)
    return doc


def dumps_report(report) -> str:
    return json.dumps(report_document(report), allow_nan=False) + "\n"


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        raise ValueError(f"refusing to serialize a float {value!r}; format vectors first")
    return str(value)


def poset_to_dot(
    p: Poset,
    name: str = "poset",
    levels: LevelAssignment | None = None,
) -> str:
    """Graphviz DOT text: one node per element, one edge per cover.

    Edges point from the lower element to the upper one with ``rankdir=BT``,
    so renderers draw the diagram bottom-up; equal-level elements are pinned
    to the same rank when a level assignment is given.
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box];']
    for i, lab in enumerate(p.labels):
        text = _label_text(lab).replace('"', '\\"')
        lines.append(f'  n{i} [label="{text}"];')
    for u, v in p.covers:
        lines.append(f"  n{u} -> n{v};")
    if levels is not None:
        for _, members in levels.fibers().items():
            group = " ".join(f"n{i};" for i in members)
            lines.append(f"  {{ rank=same; {group} }}")
    lines.append("}")
    return "\n".join(lines) + "\n"
