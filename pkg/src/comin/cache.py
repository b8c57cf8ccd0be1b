"""On-disk result cache: one JSON file per entry, content addressed by key."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Callable

SCHEMA_VERSION = 1

log = logging.getLogger(__name__)

MISS = object()


def default_cache_dir() -> Path:
    env = os.environ.get("COMIN_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "comin"


def _canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


class ResultCache:
    def __init__(self, root: str | Path | None = None, enabled: bool = True):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.enabled = enabled
        self.last_status = "off" if not enabled else None

    def key(self, space: str, kind: str, params: dict) -> list:
        return [SCHEMA_VERSION, space, kind, params]

    def path_for(self, key: list) -> Path:
        return self.root / f"{_digest(_canonical(key))}.json"

    def load(self, key: list) -> Any:
        """Stored payload, or ``MISS`` when absent, stale or corrupt."""
        if not self.enabled:
            return MISS
        path = self.path_for(key)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return MISS
        try:
            entry = json.loads(text)
            if entry.get("schema_version") != SCHEMA_VERSION or entry.get("key") != key:
                log.warning("cache entry %s has a stale schema or key; recomputing", path.name)
                return MISS
            if entry.get("checksum") != _digest(_canonical(entry["payload"])):
                log.warning("cache entry %s failed its checksum; recomputing", path.name)
                return MISS
            return entry["payload"]
        except (ValueError, KeyError, TypeError, AttributeError):
            log.warning("cache entry %s is corrupt; recomputing", path.name)
            return MISS

    def store(self, key: list, payload: Any) -> None:
        if not self.enabled:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        entry = {
            "schema_version": SCHEMA_VERSION,
            "key": key,
            "payload": payload,
            "checksum": _digest(_canonical(payload)),
        }
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh, sort_keys=True, indent=1)
            os.replace(tmp, self.path_for(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise

    def get_or_compute(self, space: str, kind: str, params: dict, compute: Callable[[], Any]) -> Any:
        key = self.key(space, kind, params)
        hit = self.load(key)
        if hit is not MISS:
            self.last_status = "hit"
            return hit
        payload = compute()
        # round-trip through JSON so hit and miss return identical structures
        payload = json.loads(_canonical(payload))
        self.store(key, payload)
        self.last_status = "miss" if self.enabled else "off"
        return payload
