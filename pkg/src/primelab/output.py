"""Deterministic table/figure serialization: CSV golden format, JSON mirror.

Every file carries a header row and a trailing comment line with the
generator version and a hash of the producing configuration; writes are
atomic (temp + rename) so partial files never land.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass, field
from typing import Any

from . import __version__


@dataclass
class RunConfig:
    sieve_limit: int = 10**6
    output_dir: str = "."
    format: str = "csv"  # csv | json
    seed: int = 0
    threads: int = 1
    sig_figs: int = 4  # display precision in golden files
    zero_table_path: str | None = None

    def __post_init__(self):
        if self.sieve_limit < 10**3:
            raise ValueError("sieve_limit must be >= 1000")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")

    def config_hash(self) -> str:
        payload = json.dumps(
            {"sieve_limit": self.sieve_limit, "seed": self.seed, "sig_figs": self.sig_figs},
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:12]


def format_cell(value: Any, sig_figs: int | None = None) -> str:
    """Stable text form: full repr by default, sig-fig rounded when asked."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if sig_figs is not None:
            return f"{value:.{sig_figs}g}"
        return repr(value)
    return str(value)


@dataclass
class TableData:
    name: str
    columns: list[str]
    rows: list[list[Any]]
    display_sig_figs: dict[str, int] = field(default_factory=dict)


def _atomic_write(path: str, text: str) -> None:
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_table(data: TableData, config: RunConfig) -> str:
    """Write the golden file plus a full-precision companion; returns the path."""
    os.makedirs(config.output_dir, exist_ok=True)
    trailer = f"# generator=primelab-{__version__} config={config.config_hash()}"
    base = os.path.join(config.output_dir, data.name)

    def render_csv(sig: bool) -> str:
        lines = [",".join(data.columns)]
        for row in data.rows:
            cells = []
            for col, v in zip(data.columns, row):
                figs = data.display_sig_figs.get(col, config.sig_figs) if sig else None
                cells.append(format_cell(v, figs))
            lines.append(",".join(cells))
        lines.append(trailer)
        return "\n".join(lines) + "\n"

    if config.format == "json":
        path = f"{base}.json"
        payload = {
            "columns": data.columns,
            "rows": [
                {c: (format_cell(v, data.display_sig_figs.get(c, config.sig_figs)) if v is not None else None)
                 for c, v in zip(data.columns, row)}
                for row in data.rows
            ],
            "generator": f"primelab-{__version__}",
            "config": config.config_hash(),
        }
        _atomic_write(path, json.dumps(payload, indent=1, sort_keys=True) + "\n")
    else:
        path = f"{base}.csv"
        _atomic_write(path, render_csv(sig=True))
    _atomic_write(f"{base}.full", render_csv(sig=False))
    return path
