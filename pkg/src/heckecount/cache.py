"""Versioned on-disk JSON cache with content hashing and atomic writes."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

CACHE_SCHEMA = 1
ENV_CACHE_DIR = "HECKECOUNT_CACHE_DIR"


def default_cache_dir() -> Path:
    override = os.environ.get(ENV_CACHE_DIR)
    if override:
        return Path(override)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(
        os.path.expanduser("~"), ".cache"
    )
    return Path(base) / "heckecount"


def _payload_hash(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class Cache:
    """One directory of {kind}-{label}.json entries.

    Entries carry a schema version and a content hash; reads ignore entries
    that are stale, corrupted or tampered with.  Writes go through a
    temporary file and an atomic rename (first writer wins).
    """

    def __init__(self, root: str | Path | None = None, enabled: bool = True):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.enabled = enabled

    def _path(self, kind: str, label: str) -> Path:
        safe = label.replace("(", "_").replace(")", "_").replace("/", "_")
        return self.root / f"{kind}-{safe}.json"

    def load(self, kind: str, label: str):
        """The cached payload, or None on miss/stale/corruption."""
        if not self.enabled:
            return None
        path = self._path(kind, label)
        try:
            with open(path, encoding="utf-8") as fh:
                entry = json.load(fh)
        except (OSError, ValueError):
            return None
        if not isinstance(entry, dict) or entry.get("schema") != CACHE_SCHEMA:
            return None
        if entry.get("kind") != kind or entry.get("label") != label:
            return None
        payload = entry.get("payload")
        if entry.get("hash") != _payload_hash(payload):
            return None
        return payload

    def store(self, kind: str, label: str, payload) -> None:
        if not self.enabled:
            return
        entry = {
            "schema": CACHE_SCHEMA,
            "kind": kind,
            "label": label,
            "hash": _payload_hash(payload),
            "payload": payload,
        }
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, sort_keys=True, separators=(",", ":"))
            os.replace(tmp, self._path(kind, label))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
