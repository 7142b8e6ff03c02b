"""On-disk cache of dominant weight multiplicities.

One JSON file per (algebra, highest weight). The directory comes from
:func:`set_cache_dir` or the ``LIEFUSION_CACHE_DIR`` environment variable;
with neither set, nothing touches the disk.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

FORMAT_VERSION = 1
ENV_VAR = "LIEFUSION_CACHE_DIR"

_cache_dir: Path | None = None


def set_cache_dir(path) -> None:
    global _cache_dir
    _cache_dir = Path(path) if path is not None else None


def cache_dir() -> Path | None:
    if _cache_dir is not None:
        return _cache_dir
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def content_key(data) -> str:
    blob = json.dumps({"alg": data.alg.name, "cartan": data.cartan}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _path(data, hw) -> Path | None:
    root = cache_dir()
    if root is None:
        return None
    label = "_".join(str(x) for x in hw)
    return root / f"v{FORMAT_VERSION}" / data.alg.name / f"{label}-{content_key(data)}.json"


def load_dominant(data, hw):
    path = _path(data, hw)
    if path is None or not path.exists():
        return None
    try:
        blob = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if blob.get("format") != FORMAT_VERSION or blob.get("key") != content_key(data):
        return None
    return {tuple(w): m for w, m in blob["dominant"]}


def store_dominant(data, hw, dominant: dict) -> None:
    path = _path(data, hw)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    blob = {
        "format": FORMAT_VERSION,
        "key": content_key(data),
        "algebra": data.alg.name,
        "hw": list(hw),
        "dominant": [[list(w), m] for w, m in sorted(dominant.items())],
    }
    # write-then-rename so concurrent readers never see a partial file
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(blob, fh)
    os.replace(tmp, path)
