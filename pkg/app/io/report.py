"""
Text and JSON rendering of classification rows, verification reports and
simple listings. Rationals are always printed as ``p/q``.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Any, Sequence

from app.stability.classify import StabilityReport, order_label
from app.verdict import VerificationReport


class OutputFormat(str, Enum):
    JSON = "json"
    TABLE = "table"


def pretty_table(headers: Sequence[str], rows: Sequence[Sequence[Any]], max_width: int = 48) -> str:
    if not rows:
        return "(no rows)"

    def cell(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "yes" if value else "-"
        text = str(value)
        return text if len(text) <= max_width else text[: max_width - 3] + "..."

    data = [[cell(v) for v in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in data:
        for i, text in enumerate(row):
            widths[i] = max(widths[i], len(text))

    sep = " | "
    header = sep.join(h.ljust(widths[i]) for i, h in enumerate(headers))
    line = "-+-".join("-" * w for w in widths)
    body = "\n".join(sep.join(row[i].ljust(widths[i]) for i in range(len(widths))) for row in data)
    return f"{header}\n{line}\n{body}"


def to_json(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


def render_classification(report: StabilityReport, fmt: OutputFormat | str = OutputFormat.TABLE) -> str:
    if OutputFormat(fmt) is OutputFormat.JSON:
        return to_json(report.to_dict())
    headers = ["network", "payoffs"] + [c.value for c in report.concepts] + [order_label(k) for k in report.orders]
    rows = [["{" + r.network.key() + "}", r.to_dict()["payoffs"]] + [r.flags[c] for c in report.concepts]
            + [r.orders[k] for k in report.orders]
            for r in report.rows]
    return pretty_table(headers, rows)


def render_verification(reports: Sequence[VerificationReport], fmt: OutputFormat | str = OutputFormat.TABLE) -> str:
    if OutputFormat(fmt) is OutputFormat.JSON:
        return to_json([r.to_dict() for r in reports])
    blocks = []
    for r in reports:
        verdict = "VERIFIED" if r.ok else "VIOLATED"
        rows = []
        for c in r.checks:
            status = ("holds" if c.holds else "FAILS") if c.asserted else ("info: yes" if c.holds else "info: no")
            rows.append([c.name, status, c.detail, json.dumps(c.witness, ensure_ascii=False) if c.witness else ""])
        blocks.append(f"{r.theorem} (n={r.n}): {verdict}\n" + pretty_table(["check", "status", "detail", "witness"], rows))
    return "\n\n".join(blocks)


def render_listing(title: str, headers: Sequence[str], rows: Sequence[Sequence[Any]],
                   fmt: OutputFormat | str = OutputFormat.TABLE) -> str:
    if OutputFormat(fmt) is OutputFormat.JSON:
        return to_json({"title": title, "rows": [dict(zip(headers, row)) for row in rows]})
    return f"{title}\n{pretty_table(headers, rows)}"
