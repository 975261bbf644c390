"""Result writers: CSV curves, JSON-lines records, JSON documents and the run manifest.

Every file carries the config hash. Only the manifest carries a timestamp, so
identical configs produce identical result bytes.
"""

import csv
import io
import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np
import pytz

from utils.logging_config import get_logger, log_event

from .schemas import RunConfig

logger = get_logger(__name__)


def _plain(value: Any) -> Any:
    """numpy scalars and arrays to JSON-serializable values."""
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Mapping):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


def render_csv(config_hash: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    buffer.write(f"# config_hash={config_hash}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_plain(value) for value in row])
    return buffer.getvalue()


def render_jsonl(config_hash: str, records: Iterable[Mapping[str, Any]]) -> str:
    lines = []
    for record in records:
        lines.append(json.dumps({"config_hash": config_hash, **_plain(record)}, sort_keys=True))
    return "".join(line + "\n" for line in lines)


def render_json(config_hash: str, document: Mapping[str, Any]) -> str:
    return json.dumps({"config_hash": config_hash, **_plain(document)}, sort_keys=True, indent=2) + "\n"


class OutputSink:
    """Serialized writer for one run: files under `out`, or stdout when `out` is unset."""

    def __init__(self, run_config: RunConfig, stream=None):
        self.run_config = run_config
        self.config_hash = run_config.config_hash
        self.directory = Path(run_config.out) if run_config.out else None
        self.stream = stream or sys.stdout
        self.files: List[str] = []

    def _emit(self, name: str, text: str) -> None:
        if self.directory is None:
            self.stream.write(text)
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.directory / name
        path.write_text(text)
        self.files.append(name)
        log_event(
            logger, "info", f"Wrote {path}", event_type="output",
            subcommand=self.run_config.subcommand, config_hash=self.config_hash,
        )

    def csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
        self._emit(name, render_csv(self.config_hash, header, rows))

    def jsonl(self, name: str, records: Iterable[Mapping[str, Any]]) -> None:
        self._emit(name, render_jsonl(self.config_hash, records))

    def json(self, name: str, document: Mapping[str, Any]) -> None:
        self._emit(name, render_json(self.config_hash, document))

    def table(self, stem: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
        """CSV or JSON-lines depending on the configured format."""
        if self.run_config.format == "json":
            self.jsonl(f"{stem}.jsonl", (dict(zip(header, row)) for row in rows))
        else:
            self.csv(f"{stem}.csv", header, rows)

    def manifest(self, seeds: Optional[Dict[str, Any]] = None, summary: Optional[Mapping[str, Any]] = None) -> Optional[dict]:
        """manifest.json beside the results; skipped when writing to stdout."""
        if self.directory is None:
            return None
        document = {
            "subcommand": self.run_config.subcommand,
            "config": self.run_config.to_dict(),
            "seeds": {"root": self.run_config.seed, **(seeds or {})},
            "files": list(self.files),
            "summary": dict(summary or {}),
            "created_at": datetime.now(pytz.UTC).isoformat(),
        }
        self._emit("manifest.json", render_json(self.config_hash, document))
        return document
