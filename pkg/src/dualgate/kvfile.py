"""Flat key=value text files with # comments and dotted section keys.

The format is deliberately primitive: one `key = value` pair per line,
`#` starts a comment, keys are dotted paths like `noise.tau_s_ms`.
Unknown keys and bad values are hard errors that name the key and the
line number, so a typo in a preset can never silently change a run.
"""

from __future__ import annotations


class KVError(ValueError):
    """Parse or validation failure in a key=value file."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        loc = ""
        if path is not None:
            loc = f"{path}:"
        if line is not None:
            loc += f"{line}:"
        super().__init__(f"{loc} {message}" if loc else message)
        self.path = path
        self.line = line


def parse_kv_text(text: str, path: str = "<string>") -> dict[str, tuple[str, int]]:
    """Parse key=value text into {key: (raw_value, line_number)}."""
    out: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise KVError(f"expected 'key = value', got {raw.strip()!r}", path, lineno)
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if not key:
            raise KVError("empty key", path, lineno)
        if key in out:
            raise KVError(f"duplicate key {key!r}", path, lineno)
        out[key] = (value, lineno)
    return out


def coerce(key: str, raw: str, typ, path: str, line: int):
    """Convert a raw string to typ (float, int, bool or str) with a located error."""
    try:
        if typ is bool:
            low = raw.lower()
            if low in ("true", "on", "yes", "1"):
                return True
            if low in ("false", "off", "no", "0"):
                return False
            raise ValueError(raw)
        return typ(raw)
    except ValueError:
        raise KVError(
            f"value {raw!r} for key {key!r} is not a valid {typ.__name__}", path, line
        ) from None
