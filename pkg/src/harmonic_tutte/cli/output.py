"""
Writing command results.

json-lines: one orjson record per line, fields in DTO order.
human: polynomial strings and rich tables on a fixed-width colourless console.
"""
from __future__ import annotations

import sys
from typing import Iterable, Sequence

import click
import orjson
from pydantic import BaseModel
from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..constants import HUMAN_CONSOLE_WIDTH
from ..enums.system import OutputFormat


class Emitter:
    """Writes to stdout in the chosen format."""

    def __init__(self, output_format: OutputFormat):
        self.output_format = output_format

    @property
    def json(self) -> bool:
        return self.output_format is OutputFormat.JSON_LINES

    def record(self, dto: BaseModel) -> None:
        click.echo(orjson.dumps(dto.model_dump(mode="json")).decode())

    def line(self, text: str = "") -> None:
        click.echo(text)

    def table(self, title: str | None, headers: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
        table = Table(title=Text(title) if title else None, box=box.SIMPLE, show_edge=False, title_justify="left")
        for header in headers:
            table.add_column(header, overflow="fold")
        for row in rows:
            table.add_row(*(Text(str(cell)) for cell in row))
        console = Console(
            file=sys.stdout,
            width=HUMAN_CONSOLE_WIDTH,
            color_system=None,
            force_terminal=False,
            highlight=False,
            emoji=False,
        )
        console.print(table)
