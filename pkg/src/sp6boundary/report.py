"""Tabular report documents with markdown, json and csv renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

KINDS = ("weyl_table", "kostant", "weights", "parity", "face", "e1", "e2", "e3", "boundary", "verify")
FORMATS = ("markdown", "json", "csv")


@dataclass
class ReportDocument:
    """``rows`` hold {labels, values, provenance}; ``extra`` holds top-level keys."""

    kind: str
    columns: list[str]
    rows: list[dict[str, Any]] = field(default_factory=list)
    title: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown report kind {self.kind!r}")

    def add(self, labels: dict, values: dict, provenance: str = "") -> None:
        self.rows.append({"labels": dict(labels), "values": dict(values), "provenance": provenance})

    def to_json(self) -> str:
        payload = {"kind": self.kind, "title": self.title, "columns": self.columns, "rows": self.rows}
        payload.update(self.extra)
        return json.dumps(payload, indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        payload = json.loads(text)
        base = {k: payload.pop(k) for k in ("kind", "title", "columns", "rows")}
        return cls(base["kind"], base["columns"], base["rows"], base["title"], payload)

    def _flat(self) -> list[list[str]]:
        out = []
        for row in self.rows:
            merged = {**row["labels"], **row["values"]}
            out.append([_cell(merged.get(c, "")) for c in self.columns])
        return out

    def to_markdown(self) -> str:
        lines = []
        if self.title:
            lines += [f"## {self.title}", ""]
        lines.append("| " + " | ".join(self.columns) + " |")
        lines.append("|" + "|".join("---" for _ in self.columns) + "|")
        for r in self._flat():
            lines.append("| " + " | ".join(r) + " |")
        for key, value in self.extra.items():
            lines += ["", f"{key}: {_cell(value)}"]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        w.writerows(self._flat())
        return buf.getvalue()

    def render(self, fmt: str = "markdown") -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "markdown":
            return self.to_markdown()
        raise ValueError(f"unknown format {fmt!r}")


def _cell(x: Any) -> str:
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(_cell(v) for v in x) + ")"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)
