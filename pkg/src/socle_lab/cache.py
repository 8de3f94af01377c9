"""Content-addressed cache for Groebner bases.

Results are always memoized in process.  An optional on-disk layer can be
pointed at a directory (CLI wiring reads SOCLE_LAB_CACHE_DIR); entries are
plain text files named by the SHA-256 of the problem key, holding a header
with a body hash followed by the canonical text of the basis, one
polynomial per line.  Corrupt or unreadable entries are ignored and the
basis is recomputed.  Writes go through a temporary file and an atomic
rename so concurrent processes can share a directory.
"""

from __future__ import annotations

import hashlib
import os
import tempfile

_HEADER = "socle-lab-gb/1"

_memory: dict = {}
_cache_dir: str | None = None


def default_cache_dir() -> str:
    base = os.environ.get("XDG_CACHE_HOME", os.path.expanduser("~/.cache"))
    return os.path.join(base, "socle-lab")


def set_cache_dir(path: str | None):
    """Enable (or disable, with None) the on-disk layer."""
    global _cache_dir
    _cache_dir = path
    if path is not None:
        os.makedirs(path, exist_ok=True)


def get_cache_dir() -> str | None:
    return _cache_dir


def clear_memory():
    _memory.clear()


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _entry_path(key: str) -> str:
    return os.path.join(_cache_dir, _digest(key) + ".gb")


def lookup(key: str):
    """Return the cached basis lines for the key, or None."""
    hit = _memory.get(key)
    if hit is not None:
        return hit
    if _cache_dir is None:
        return None
    path = _entry_path(key)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n").split(" ")
            lines = [line.rstrip("\n") for line in fh]
    except OSError:
        return None
    body = "\n".join(lines)
    if len(header) != 2 or header[0] != _HEADER or header[1] != _digest(body):
        return None  # corrupted entry: recompute
    _memory[key] = lines
    return lines


def store(key: str, lines):
    lines = list(lines)
    _memory.setdefault(key, lines)
    if _cache_dir is None:
        return
    body = "\n".join(lines)
    payload = f"{_HEADER} {_digest(body)}\n{body}"
    path = _entry_path(key)
    fd, tmp = tempfile.mkstemp(dir=_cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass
