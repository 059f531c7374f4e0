"""Report rendering: one JSON document or one TSV table per command.

Output is byte-deterministic by construction.  JSON key order is the
insertion order of the dicts built by the command handlers, never
sorted at render time; no timestamps or machine identifiers are
embedded unless a command explicitly opts in to timing fields.
"""

from __future__ import annotations

import json

SCHEMA = "galcert/1"


def document(kind: str, config: dict, result: dict) -> dict:
    return {"schema": SCHEMA, "kind": kind, "config": config, "result": result}


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    text = str(value)
    if "\t" in text or "\n" in text:
        raise ValueError("tabular cells must not contain tabs or newlines")
    return text


def render_tsv(rows) -> str:
    return "".join("\t".join(_cell(v) for v in row) + "\n" for row in rows)
