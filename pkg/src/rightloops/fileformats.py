"""Text formats for right loops and groups.

    # optional comments
    type: group            (group files only)
    elements: 1 2 3 4 5
    identity: 1
    table:
    1 2 3 4 5
    2 3 1 3 3
    ...

Row ``x`` lists ``x o y`` for y in element order.  Labels are whitespace-free.
"""
from __future__ import annotations

from pathlib import Path

from .errors import InvalidInput
from .permgroup import FiniteGroupTable
from .rightloop import RightLoopTable, validate_table


def _parse(text: str) -> dict:
    header: dict[str, str] = {}
    rows: list[list[str]] = []
    in_table = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if in_table:
            rows.append(line.split())
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise InvalidInput(f"line {lineno}: expected 'key: value'")
        key = key.strip().lower()
        if key == "table":
            in_table = True
            if value.strip():
                raise InvalidInput(f"line {lineno}: table rows start on the next line")
            continue
        if key not in ("elements", "identity", "type"):
            raise InvalidInput(f"line {lineno}: unknown key {key!r}")
        header[key] = value.strip()
    if "elements" not in header:
        raise InvalidInput("missing 'elements:' line")
    if not in_table:
        raise InvalidInput("missing 'table:' section")
    labels = header["elements"].split()
    if len(set(labels)) != len(labels):
        raise InvalidInput("duplicate element labels")
    index = {lab: i for i, lab in enumerate(labels)}
    if len(rows) != len(labels):
        raise InvalidInput(f"table has {len(rows)} rows, expected {len(labels)}")
    table = []
    for r, row in enumerate(rows):
        if len(row) != len(labels):
            raise InvalidInput(f"row {labels[r]} has {len(row)} entries, expected {len(labels)}")
        try:
            table.append([index[v] for v in row])
        except KeyError as exc:
            raise InvalidInput(f"row {labels[r]}: unknown element {exc.args[0]!r}") from None
    ident = header.get("identity")
    if ident is not None and ident not in index:
        raise InvalidInput(f"identity {ident!r} is not an element")
    return {"labels": labels, "table": table, "identity": index.get(ident) if ident else None,
            "type": header.get("type", "loop").lower()}


def parse_loop(text: str) -> RightLoopTable:
    d = _parse(text)
    ident = d["identity"] if d["identity"] is not None else 0
    return validate_table(d["table"], identity=ident, labels=d["labels"])


def parse_group(text: str) -> FiniteGroupTable:
    d = _parse(text)
    if d["type"] != "group":
        raise InvalidInput("group file needs 'type: group'")
    g = FiniteGroupTable.from_mul(d["table"], labels=d["labels"])
    if d["identity"] is not None and d["identity"] != g.id:
        raise InvalidInput(f"declared identity {d['labels'][d['identity']]} is not the identity")
    return g


def read_loop(path) -> RightLoopTable:
    return parse_loop(_read(path))


def read_group(path) -> FiniteGroupTable:
    return parse_group(_read(path))


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None


def _format(labels, identity, rows, kind=None) -> str:
    width = max(len(s) for s in labels)
    out = []
    if kind:
        out.append(f"type: {kind}")
    out.append("elements: " + " ".join(labels))
    out.append(f"identity: {identity}")
    out.append("table:")
    for row in rows:
        out.append(" ".join(labels[v].ljust(width) for v in row).rstrip())
    return "\n".join(out) + "\n"


def format_loop(t: RightLoopTable) -> str:
    return _format(t.labels, t.labels[0], t.op)


def format_group(g: FiniteGroupTable) -> str:
    # permutation labels such as "(0 1)" are written "(0,1)" to stay whitespace-free
    labels = [",".join(g.label(x).split()) for x in range(g.order)]
    return _format(labels, labels[g.id], g.mul, kind="group")
