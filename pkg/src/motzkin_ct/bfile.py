"""Reader for OEIS b-files (``index value`` per line, ``#`` comments)."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


class BFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = ""):
        where = f"{source}:{line}: " if line is not None else (f"{source}: " if source else "")
        super().__init__(where + message)
        self.line = line


@dataclass
class BFile:
    name: str
    entries: list[tuple[int, int]] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def parse_bfile(text: str, name: str = "") -> BFile:
    entries = []
    last = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"expected 'index value', got {raw!r}", lineno, name)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"non-integer field in {raw!r}", lineno, name) from None
        if last is not None and index <= last:
            raise BFileError(f"index {index} does not increase (previous {last})", lineno, name)
        entries.append((index, value))
        last = index
    return BFile(name, entries)


def read_bfile(path) -> BFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise BFileError(f"cannot read b-file: {exc.strerror}", source=str(path)) from None
    name = path.stem
    if name.startswith("b") and name[1:].isdigit():
        name = "A" + name[1:]
    return parse_bfile(text, name)


def format_bfile(values, start: int = 0, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"{i} {v}" for i, v in enumerate(values, start=start)]
    return "\n".join(lines) + "\n"
