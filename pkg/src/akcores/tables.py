# ABOUTME: Block decomposition tables: flattening blocks into rows and rendering them as
# ABOUTME: canonical JSON, CSV or a Markdown pipe table.

import csv
import io
import json
from collections.abc import Sequence
from enum import StrEnum

from tabulate import tabulate

from akcores.blocks import Block
from akcores.partitions import multipartition_to_data

COLUMNS = ("multipartition", "core", "core_charge", "weight", "block_id")

type Row = dict[str, object]


class TableFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    MD = "md"


def block_rows(blocks: Sequence[Block]) -> list[Row]:
    """One row per l-partition, grouped by block; blocks are numbered from 1 in the given order."""
    rows: list[Row] = []
    for block_id, block in enumerate(blocks, start=1):
        core = multipartition_to_data(block.core.core)
        charge = list(block.core.charge)
        rows.extend(
            {
                "multipartition": multipartition_to_data(mp),
                "core": core,
                "core_charge": charge,
                "weight": block.weight,
                "block_id": block_id,
            }
            for mp in block.members
        )
    return rows


def _cell(value: object) -> str:
    if isinstance(value, list):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render_json(rows: Sequence[Row]) -> str:
    return json.dumps(list(rows), sort_keys=True, separators=(",", ":"))


def render_csv(rows: Sequence[Row]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: _cell(row[column]) for column in COLUMNS})
    return buffer.getvalue().rstrip("\n")


def render_markdown(rows: Sequence[Row]) -> str:
    return tabulate([[_cell(row[column]) for column in COLUMNS] for row in rows], headers=COLUMNS, tablefmt="github")


def render_table(rows: Sequence[Row], fmt: TableFormat) -> str:
    match fmt:
        case TableFormat.JSON:
            return render_json(rows)
        case TableFormat.CSV:
            return render_csv(rows)
        case TableFormat.MD:
            return render_markdown(rows)
