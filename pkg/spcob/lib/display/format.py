import json
from collections.abc import Iterable
from typing import Any

from spcob.core.models import Report
from spcob.core.types import OutputFormat

from . import ansi
from .writer import Writer


def emit(out: Writer, fmt: OutputFormat, data: Any, text: str | Iterable[str]) -> None:
    if fmt == "json":
        out.json(data)
        return
    if isinstance(text, str):
        out.print(text)
        return
    for line in text:
        out.print(line)


def mark(passed: bool) -> str:
    return ansi.green("PASS") if passed else ansi.red("FAIL")


def params_text(params: dict[str, Any]) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(params.items()))


def report_line(report: Report) -> str:
    line = f"{mark(report.passed)} {ansi.bold(report.check)} {params_text(report.params)}"
    return f"{line} {ansi.gray(f'({report.elapsed_ms}ms)')}"


def report_lines(report: Report) -> list[str]:
    lines = [report_line(report)]
    if not report.passed:
        lines.append(f"  witness: {json.dumps(report.witness, sort_keys=True)}")
    return lines


def summary_line(reports: list[Report]) -> str:
    failed = sum(1 for r in reports if not r.passed)
    total_ms = sum(r.elapsed_ms for r in reports)
    status = ansi.green("all passed") if not failed else ansi.red(f"{failed} failed")
    return f"{len(reports)} checks, {status}, {total_ms}ms"


def table(rows: list[list[str]], header: list[str] | None = None) -> list[str]:
    body = [header, *rows] if header else rows
    if not body:
        return []
    widths = [max(len(ansi.strip(row[i])) for row in body) for i in range(len(body[0]))]
    out = []
    for row in body:
        cells = [cell + " " * (w - len(ansi.strip(cell))) for cell, w in zip(row, widths, strict=True)]
        out.append("  ".join(cells).rstrip())
    return out
