"""UTF-8, tab-separated file helpers. Every written line ends in ``\\n``."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from tagrec.model import Dataset, Provenance, Triple


class InputError(ValueError):
    """Unparseable input file; carries the file name and 1-based line."""

    def __init__(self, path, lineno, message):
        self.path = str(path)
        self.lineno = lineno
        super().__init__(f"{self.path}:{lineno}: {message}")


def read_rows(path) -> list[tuple[int, list[str]]]:
    """Non-blank lines of *path* split on tabs, with line numbers."""
    rows = []
    try:
        fh = open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise InputError(path, 0, f"cannot open: {exc.strerror}") from None
    with fh:
        try:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\r\n")
                if line.strip():
                    rows.append((lineno, line.split("\t")))
        except UnicodeDecodeError:
            raise InputError(path, len(rows) + 1, "not valid UTF-8") from None
    return rows


def write_lines(path, lines: Iterable[str]) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line)
            fh.write("\n")


def read_triples(path) -> tuple[str, list]:
    """Load a triples file.

    Three columns (``user, url, tag``) mean raw input and return
    ``("raw", rows)`` with rows as plain tuples. Four columns, the last a
    provenance name, mean already-cleaned data and return
    ``("clean", triples)``. Mixing the two layouts is an error.
    """
    rows = read_rows(path)
    if not rows:
        return "raw", []
    kind = "clean" if len(rows[0][1]) == 4 else "raw"
    out = []
    for lineno, cols in rows:
        if kind == "raw":
            if len(cols) != 3:
                raise InputError(path, lineno, f"expected 3 columns, got {len(cols)}")
            out.append(tuple(cols))
            continue
        if len(cols) != 4:
            raise InputError(path, lineno, f"expected 4 columns, got {len(cols)}")
        user, site, tag, prov = cols
        try:
            out.append(Triple(user, site, tag, Provenance(prov)))
        except ValueError as exc:
            raise InputError(path, lineno, str(exc)) from None
    return kind, out


def triple_lines(d: Dataset) -> list[str]:
    return [f"{t.user}\t{t.site}\t{t.tag}\t{t.provenance.value}" for t in d.sorted_triples()]
