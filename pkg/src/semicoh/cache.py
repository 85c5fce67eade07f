"""Content-addressed result cache for computed tables.

Keys hash the exact inputs (group data, engine, variant, max degree), so
a hit is byte-for-byte the same answer as recomputation.  Writes are
write-once per key: a temp file is renamed into place, and identical
content makes last-writer-wins harmless.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .groups import GroupSpec
from .iojson import group_to_json_dict

ENV_CACHE_DIR = "SEMICOH_CACHE_DIR"


def cache_dir() -> Path:
    override = os.environ.get(ENV_CACHE_DIR)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "semicoh"


def cache_key(spec: GroupSpec, engine: str, max_degree: int) -> str:
    doc = group_to_json_dict(spec)
    doc.pop("name", None)
    payload = json.dumps(
        {"group": doc, "engine": engine, "max_degree": max_degree, "v": 1},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def cache_get(key: str) -> str | None:
    path = cache_dir() / f"{key}.json"
    try:
        return path.read_text(encoding="utf-8")
    except OSError:
        return None


def cache_put(key: str, text: str) -> None:
    directory = cache_dir()
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, directory / f"{key}.json")
    except OSError:
        pass  # caching is best effort; results are recomputed on miss
