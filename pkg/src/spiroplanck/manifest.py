"""Flat key=value run manifests.

Every command writes one next to its outputs; feeding it back through
--from-manifest reproduces the run byte for byte.  Floats are serialized
with repr so they round-trip exactly through float().
"""

from __future__ import annotations

from pathlib import Path


class ManifestError(ValueError):
    """Raised for unreadable or malformed manifest content."""


def format_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(item) for item in value)
    return str(value)


def render(entries: dict[str, object]) -> str:
    lines = []
    for key, value in entries.items():
        if not key or any(ch in key for ch in "=\n"):
            raise ManifestError(f"bad manifest key: {key!r}")
        text = format_value(value)
        if "\n" in text:
            raise ManifestError(f"manifest value for {key!r} contains a newline")
        lines.append(f"{key}={text}")
    return "\n".join(lines) + "\n"


def write_manifest(path: Path, entries: dict[str, object]) -> None:
    path.write_text(render(entries), encoding="utf-8")


def parse(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep or not key:
            raise ManifestError(f"malformed manifest line {lineno}: {line!r}")
        entries[key] = value
    return entries


def read_manifest(path: Path) -> dict[str, str]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from exc
    return parse(text)
