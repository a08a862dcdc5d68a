"""Result documents and their CSV / JSON serialization.

Floats are written with ``repr``, the shortest string that round-trips to
the same double, so output is lossless and byte-stable for a given input.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any

from . import __version__

TOOL = "tanhgup"

FIGURE_COLUMNS = ("n", "e_undeformed", "e_deformed")


def format_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v) or math.isinf(v):
            raise ValueError(f"non-finite value {v!r} cannot be serialized")
        return repr(v)
    if v is None:
        return ""
    return str(v)


def _plain(v: Any) -> Any:
    # numpy scalars and tuples -> plain JSON types
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if hasattr(v, "item") and not isinstance(v, (str, bytes)):
        return v.item()
    return v


@dataclass
class Table:
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)

    def add(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} values, got {len(values)}")
        self.rows.append(tuple(values))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow([format_value(v) for v in row])
        return buf.getvalue()

    def as_records(self) -> list[dict]:
        return [dict(zip(self.columns, _plain(list(r)))) for r in self.rows]


@dataclass
class ResultDocument:
    command: str
    parameters: dict
    payload: dict
    timestamp: str | None = None
    tool: str = TOOL
    version: str = __version__

    def to_dict(self) -> dict:
        return {
            "metadata": {
                "tool": self.tool,
                "version": self.version,
                "command": self.command,
                "parameters": _plain(self.parameters),
                "timestamp": self.timestamp,
            },
            "payload": _plain(self.payload),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        d = json.loads(text)
        m = d["metadata"]
        return cls(
            command=m["command"],
            parameters=m["parameters"],
            payload=d["payload"],
            timestamp=m["timestamp"],
            tool=m["tool"],
            version=m["version"],
        )


def read_csv(text: str) -> tuple[list[str], list[list[str]]]:
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


PLOT_SCRIPT = '''\
"""Draw the level diagram stored in figure.csv next to this script."""

import csv
import pathlib

import matplotlib.pyplot as plt

here = pathlib.Path(__file__).resolve().parent
with open(here / "figure.csv", newline="") as fh:
    rows = list(csv.DictReader(fh))

fig, ax = plt.subplots(figsize=(4, 6))
for row in rows:
    ax.hlines(float(row["e_undeformed"]), 0.1, 0.9, color="k")
    ax.hlines(float(row["e_deformed"]), 1.1, 1.9, color="tab:red")
ax.set_xticks([0.5, 1.5], ["undeformed", "deformed"])
ax.set_xlim(0, 2)
ax.set_ylabel("E")
ax.set_title("{title}")
fig.tight_layout()
fig.savefig(here / "figure.png", dpi=150)
'''


def plot_script(title: str) -> str:
    return PLOT_SCRIPT.replace("{title}", title)
