"""Hypergraph JSON files and claim reports (JSON or CSV), written atomically.

Hypergraph JSON is ``{"n": int, "r": int, "edges": [[int, ...], ...]}``.
Edges may appear in any order and with unsorted vertices; writing emits them
sorted.  Report CSV columns are ``claim_id,status,expected,got,tolerance``,
one row per individual check.
"""

from __future__ import annotations

import csv
import io as _io
import json
import os
import tempfile

from .errors import HypergraphError, ParseError
from .hypergraph import UniformHypergraph

CSV_COLUMNS = ["claim_id", "status", "expected", "got", "tolerance"]


def atomic_write_text(path, text: str) -> None:
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _edge_offset(text: str, index: int) -> int | None:
    """Character offset of the index-th inner list of the "edges" array."""
    key = text.find('"edges"')
    if key < 0:
        return None
    start = text.find("[", key)
    depth, seen, in_str = 0, -1, False
    for i in range(start, len(text)):
        ch = text[i]
        if in_str:
            in_str = ch != '"' or text[i - 1] == "\\"
            continue
        if ch == '"':
            in_str = True
        elif ch == "[":
            depth += 1
            if depth == 2:
                seen += 1
                if seen == index:
                    return i
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return None
    return None


def hypergraph_from_json(text: str) -> UniformHypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", 1, 1)
    for key in ("n", "r", "edges"):
        if key not in data:
            raise ParseError(f"missing key {key!r}")
    n, r, edges = data["n"], data["r"], data["edges"]
    if not isinstance(n, int) or not isinstance(r, int) or isinstance(n, bool) or isinstance(r, bool):
        raise ParseError("n and r must be integers")
    if not isinstance(edges, list):
        raise ParseError("edges must be a list")
    for i, e in enumerate(edges):
        where = _edge_offset(text, i)
        line, col = _line_col(text, where) if where is not None else (None, None)
        if not isinstance(e, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
            raise ParseError(f"edge {i} must be a list of integers", line, col)
        if len(e) != r:
            raise ParseError(f"edge {i} has {len(e)} vertices, expected r={r}", line, col)
        try:
            UniformHypergraph(n, r, [e])
        except HypergraphError as exc:
            raise ParseError(f"edge {i}: {exc}", line, col) from None
    try:
        return UniformHypergraph(n, r, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc)) from None


def hypergraph_to_json(H: UniformHypergraph) -> str:
    return json.dumps(H.to_dict()) + "\n"


def read_hypergraph(path) -> UniformHypergraph:
    with open(path) as fh:
        return hypergraph_from_json(fh.read())


def write_hypergraph(H: UniformHypergraph, path) -> None:
    atomic_write_text(path, hypergraph_to_json(H))


def _report_dicts(report) -> list[dict]:
    if isinstance(report, (list, tuple)):
        return [r.to_dict() if hasattr(r, "to_dict") else r for r in report]
    return [report.to_dict() if hasattr(report, "to_dict") else report]


def report_to_csv(report) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rep in _report_dicts(report):
        details = rep.get("details") or [{}]
        for d in details:
            w.writerow([
                rep["claim_id"],
                d.get("status", rep["status"]),
                d.get("expected", ""),
                d.get("got", ""),
                d.get("tolerance", ""),
            ])
    return buf.getvalue()


def write_report(report, path, format: str = "json") -> None:
    """Write one report or a list of them as JSON or CSV."""
    if format == "json":
        dicts = _report_dicts(report)
        payload = dicts if isinstance(report, (list, tuple)) else dicts[0]
        atomic_write_text(path, json.dumps(payload, indent=2, default=str) + "\n")
    elif format == "csv":
        atomic_write_text(path, report_to_csv(report))
    else:
        raise ValueError(f"format must be 'json' or 'csv', got {format!r}")


__all__ = [
    "CSV_COLUMNS",
    "atomic_write_text",
    "hypergraph_from_json",
    "hypergraph_to_json",
    "read_hypergraph",
    "write_hypergraph",
    "report_to_csv",
    "write_report",
]
