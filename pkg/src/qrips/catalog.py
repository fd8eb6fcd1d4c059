"""Append-only JSON-lines result catalog with run manifests."""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .cube import CUBE_ENUM_LIMIT, LEVEL_ENUM_LIMIT, MAX_DIM
from .hadamard import MAX_ORDER
from .rips import VERTEX_LIMIT

DEFAULT_CATALOG = "catalog.jsonl"
CATALOG_ENV = "QRIPS_CATALOG"

REQUIRED_KEYS = {
    "betti": {"ambient", "scale", "betti"},
    "facet-certificate": {"ambient", "scale", "points", "diameter_ok", "rigid_ok", "maximal_ok"},
    "cross-polytope-certificate": {"ambient", "scale", "vertices", "pairing", "facet", "homology_dim"},
    "size-catalog": {"r"},
    "probe": {"quantity"},
    "hadamard": {"order", "verified"},
    "repro": {"target", "item", "expected", "observed", "status"},
}


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def guards() -> dict:
    return {
        "MAX_DIM": MAX_DIM,
        "CUBE_ENUM_LIMIT": CUBE_ENUM_LIMIT,
        "LEVEL_ENUM_LIMIT": LEVEL_ENUM_LIMIT,
        "MAX_ORDER": MAX_ORDER,
        "VERTEX_LIMIT": VERTEX_LIMIT,
    }


def file_sha256(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass
class RunManifest:
    command: list[str]
    workers: int
    inputs: dict[str, str] = field(default_factory=dict)
    tool_version: str = __version__
    timestamp: float = field(default_factory=time.time)

    @property
    def id(self) -> str:
        # timestamp excluded: re-running the same command yields the same id
        body = {
            "command": self.command,
            "tool_version": self.tool_version,
            "inputs": self.inputs,
            "guards": guards(),
            "workers": self.workers,
        }
        return hashlib.sha256(canonical(body).encode()).hexdigest()[:16]

    def to_json(self) -> dict:
        return {
            "kind": "manifest",
            "id": self.id,
            "command": self.command,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
            "inputs": self.inputs,
            "guards": guards(),
            "workers": self.workers,
        }


def validate(kind: str, payload) -> None:
    if kind not in REQUIRED_KEYS:
        raise ValueError(f"unknown record kind {kind!r}")
    if not isinstance(payload, dict):
        raise ValueError(f"{kind} payload must be an object")
    missing = REQUIRED_KEYS[kind] - payload.keys()
    if missing:
        raise ValueError(f"{kind} payload missing {sorted(missing)}")
    canonical(payload)  # must serialise


class Catalog:
    """Serialised appender; the manifest line is written before the first record."""

    def __init__(self, path: str | Path | None, manifest: RunManifest):
        self.path = Path(path) if path is not None else None
        self.manifest = manifest
        self.records: list[dict] = []
        self._lock = threading.Lock()
        self._manifest_written = False

    @staticmethod
    def default_path() -> str:
        return os.environ.get(CATALOG_ENV, DEFAULT_CATALOG)

    def append(self, kind: str, payload: dict) -> dict:
        validate(kind, payload)
        record = {"kind": kind, "manifest": self.manifest.id, "payload": payload}
        with self._lock:
            self.records.append(record)
            if self.path is not None:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with self.path.open("a") as fh:
                    if not self._manifest_written:
                        fh.write(canonical(self.manifest.to_json()) + "\n")
                        self._manifest_written = True
                    fh.write(canonical(record) + "\n")
        return record


def read_catalog(path: str | Path) -> list[dict]:
    return [json.loads(line) for line in Path(path).read_text().splitlines() if line.strip()]
