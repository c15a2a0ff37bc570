"""Design documents: canonical JSON text and a column view with introduced points starred."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .design import Design, introductions
from .errors import StructuralError


@dataclass(frozen=True)
class DesignDocument:
    design: Design
    name: Optional[str] = None
    provenance: Optional[str] = None


def dumps(doc: DesignDocument) -> str:
    """Canonical form: fixed key order, two-space indent, one block per line, LF endings."""
    d = doc.design
    lines = ["{"]
    if doc.name is not None:
        lines.append(f'  "name": {json.dumps(doc.name, ensure_ascii=False)},')
    if doc.provenance is not None:
        lines.append(f'  "provenance": {json.dumps(doc.provenance, ensure_ascii=False)},')
    lines.append(f'  "v": {d.v},')
    lines.append(f'  "k": {d.k},')
    lines.append(f'  "circular": {"true" if d.circular else "false"},')
    lines.append('  "blocks": [')
    rows = ["    [" + ", ".join(str(x) for x in blk) + "]" for blk in d.sorted_blocks()]
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> DesignDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise StructuralError("design document must be a JSON object")
    for key in ("v", "k", "blocks"):
        if key not in raw:
            raise StructuralError(f"design document is missing {key!r}")
    blocks = raw["blocks"]
    if not isinstance(blocks, list) or not all(
        isinstance(b, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in b) for b in blocks
    ):
        raise StructuralError("blocks must be a list of integer lists")
    for i, blk in enumerate(blocks, start=1):
        if len(set(blk)) != len(blk):
            raise StructuralError(f"block {i} repeats a point")
    v, k, circular = raw["v"], raw["k"], raw.get("circular", False)
    if not isinstance(v, int) or not isinstance(k, int) or not isinstance(circular, bool):
        raise StructuralError("v and k must be integers and circular a boolean")
    return DesignDocument(Design(v, k, blocks, circular), raw.get("name"), raw.get("provenance"))


def column_rows(d: Design) -> list[list[tuple[int, bool]]]:
    """Lay blocks out as columns; a point keeps its row while it stays in consecutive blocks."""
    intros = introductions(d)
    columns: list[list[int]] = []
    prev: list[int] = []
    for blk in d.blocks:
        if not prev:
            col = sorted(blk)
        else:
            incoming = iter(sorted(blk - set(prev)))
            col = [x if x in blk else next(incoming) for x in prev]
        columns.append(col)
        prev = col
    return [[(columns[j][r], columns[j][r] in intros[j]) for j in range(d.b)] for r in range(d.k)]


def format_table(d: Design, width: int = 12) -> str:
    """Columns of at most ``width`` blocks, introduced points marked with ``*``."""
    rows = column_rows(d)
    cells = [[f"{x}{'*' if star else ''}" for x, star in row] for row in rows]
    cw = max(len(c) for row in cells for c in row)
    cw = max(cw, len(f"B{d.b}"))
    out = []
    for start in range(0, d.b, width):
        stop = min(d.b, start + width)
        out.append(" ".join(f"B{j + 1}".ljust(cw) for j in range(start, stop)).rstrip())
        for row in cells:
            out.append(" ".join(c.ljust(cw) for c in row[start:stop]).rstrip())
        out.append("")
    return "\n".join(out)
