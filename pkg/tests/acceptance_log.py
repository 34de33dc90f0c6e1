"""Collects one result line per acceptance criterion."""

LINES: list = []


def record(number: int, ok: bool, title: str, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    LINES.append(line)
    print(line)
