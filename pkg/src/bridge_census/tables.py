"""Triangular count tables and per-c statistics in text, CSV and JSON.

Layout follows the printed tables: one row per crossing number, one column
per braid index, and a trailing total column for the ``e`` and ``ep``
quantities.  Zero cells are blank in text output and ``0`` elsewhere.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import formulas as F

QUANTITIES = {
    "k": (F.k_closed, None, "k"),
    "e": (F.e_closed, F.e_total, "e(c)"),
    "ep": (F.ep_closed, F.ep_total, "e_p(c)"),
}
FORMATS = ("table", "csv", "json")


@dataclass
class Table:
    quantity: str | None
    b_values: list[int]
    rows: list[tuple[int, list[int], int | None]]

    @property
    def has_total(self) -> bool:
        return any(total is not None for _, _, total in self.rows)


def build_table(quantity: str, c_min: int, c_max: int) -> Table:
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}")
    if not 3 <= c_min <= c_max:
        raise ValueError(f"need 3 <= min <= max, got {c_min}..{c_max}")
    cell, total, _ = QUANTITIES[quantity]
    b_values = list(range(2, F.max_braid(c_max) + 1))
    rows = []
    for c in range(c_min, c_max + 1):
        rows.append((c, [cell(c, b) for b in b_values], total(c) if total else None))
    return Table(quantity, b_values, rows)


def _total_label(table: Table) -> str:
    if table.quantity in QUANTITIES and QUANTITIES[table.quantity][1]:
        return QUANTITIES[table.quantity][2]
    return "total"


def _aligned(grid: list[list[str]], rule_after: int = 1) -> str:
    widths = [max(len(r[i]) for r in grid) for i in range(len(grid[0]))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in grid]
    lines.insert(rule_after, "-" * len("  ".join("x" * w for w in widths)))
    return "\n".join(lines) + "\n"


def render_text(table: Table) -> str:
    header = ["c\\b"] + [str(b) for b in table.b_values]
    if table.has_total:
        header.append(_total_label(table))
    grid = [header]
    for c, values, total in table.rows:
        row = [str(c)] + [f"{v:,}" if v else "" for v in values]
        if table.has_total:
            row.append(f"{total:,}")
        grid.append(row)
    return _aligned(grid)


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["c"] + [str(b) for b in table.b_values]
    if table.has_total:
        header.append("total")
    w.writerow(header)
    for c, values, total in table.rows:
        w.writerow([c, *values] + ([total] if table.has_total else []))
    return buf.getvalue()


def render_json(table: Table) -> str:
    rows = []
    for c, values, total in table.rows:
        row = {"c": c, "values": values}
        if total is not None:
            row["total"] = total
        rows.append(row)
    doc = {"quantity": table.quantity, "b": table.b_values, "rows": rows}
    return json.dumps(doc, indent=2) + "\n"


def render(table: Table, fmt: str) -> str:
    return {"table": render_text, "csv": render_csv, "json": render_json}[fmt](table)


def parse_csv(text: str, quantity: str | None = None) -> Table:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    has_total = header[-1] == "total"
    b_values = [int(h) for h in header[1:len(header) - has_total]]
    rows = []
    for rec in reader:
        nums = [int(x) for x in rec]
        values = nums[1:1 + len(b_values)]
        rows.append((nums[0], values, nums[-1] if has_total else None))
    return Table(quantity, b_values, rows)


def parse_json(text: str) -> Table:
    doc = json.loads(text)
    rows = [(r["c"], list(r["values"]), r.get("total")) for r in doc["rows"]]
    return Table(doc.get("quantity"), list(doc["b"]), rows)


def parse_text(text: str) -> Table:
    """Read back :func:`render_text` output (blank cells are 0)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0]
    # right-aligned columns: a cell ends where its header token ends
    ends, pos = [], 0
    for token in header.split():
        pos = header.index(token, pos) + len(token)
        ends.append(pos)
    starts = [0] + [e + 1 for e in ends[:-1]]
    tokens = header.split()
    has_total = not tokens[-1].isdigit()
    b_values = [int(t) for t in tokens[1:len(tokens) - has_total]]
    rows = []
    for line in lines[2:]:
        cells = [line[s:e].strip().replace(",", "") for s, e in zip(starts, ends)]
        nums = [int(x) if x else 0 for x in cells]
        rows.append((nums[0], nums[1:1 + len(b_values)], nums[-1] if has_total else None))
    return Table(None, b_values, rows)


# -- statistics ------------------------------------------------------------------

STAT_COLUMNS = ["c", "knots", "mean", "mean_decimal", "variance", "variance_decimal", "mode", "median"]


def decimal_str(x: Fraction, digits: int = 12) -> str:
    """Display-only decimal with ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return f"{d:.{digits}g}"


def stats_rows(c_min: int, c_max: int) -> list[dict]:
    if not 3 <= c_min <= c_max:
        raise ValueError(f"need 3 <= min <= max, got {c_min}..{c_max}")
    rows = []
    for c in range(c_min, c_max + 1):
        s = F.summary(c)
        rows.append({
            "c": c,
            "knots": s.total,
            "mean": str(s.mean),
            "mean_decimal": decimal_str(s.mean),
            "variance": str(s.variance),
            "variance_decimal": decimal_str(s.variance),
            "mode": s.mode,
            "median": str(s.median),
        })
    return rows


def render_stats(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, STAT_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    grid = [STAT_COLUMNS] + [[str(r[k]) for k in STAT_COLUMNS] for r in rows]
    return _aligned(grid)
