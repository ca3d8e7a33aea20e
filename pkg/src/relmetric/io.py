"""Reading and writing relations.

Two input formats are supported:

``dense-csv``
    Header row holds a corner cell followed by the observation labels; each
    following row holds a feature label followed by 0/1 cells.

``pattern-log``
    A patterns file with one regular expression per line (line order is
    feature order) and a directory of text files, one per observation.  A
    cell is 1 when the pattern matches anywhere in the file.  Files are
    taken in bytewise order of their names.
"""
from __future__ import annotations

import csv
import io as _io
import os
import re
from pathlib import Path

import numpy as np

from .relation import Relation, RelationError

FORMATS = ("dense-csv", "pattern-log")

# Constructs outside the pinned regex subset: backreferences, lookarounds,
# conditionals.
_FORBIDDEN = [
    (re.compile(r"\\[1-9]"), "numeric backreference"),
    (re.compile(r"\\g<"), "backreference"),
    (re.compile(r"\(\?P="), "named backreference"),
    (re.compile(r"\(\?<?[=!]"), "lookaround"),
    (re.compile(r"\(\?\("), "conditional"),
]


class RelationFileError(RelationError):
    """A relation file could not be parsed; the message carries its location."""

    def __init__(self, path, message, line=None, column=None):
        where = str(path)
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
        self.path = str(path)
        self.line = line
        self.column = column


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RelationFileError(path, exc.strerror or str(exc)) from exc
    except UnicodeDecodeError as exc:
        raise RelationFileError(path, f"not valid UTF-8: {exc.reason}") from exc


def parse_dense_csv(text: str, path="<string>") -> Relation:
    rows = list(csv.reader(_io.StringIO(text)))
    # Trailing blank lines are not rows; a blank header still is.
    while len(rows) > 1 and not any(cell.strip() for cell in rows[-1]):
        rows.pop()
    if not rows:
        raise RelationFileError(path, "empty file, expected a header row", 1)
    header = [c.strip() for c in rows[0]]
    y_labels = header[1:]
    x_labels: list[str] = []
    matrix = np.zeros((len(rows) - 1, len(y_labels)), dtype=bool)
    for i, row in enumerate(rows[1:]):
        line = i + 2
        if len(row) != len(header):
            raise RelationFileError(
                path, f"expected {len(header)} cells, found {len(row)}", line
            )
        x_labels.append(row[0].strip())
        cells = np.array(row[1:], dtype=str)
        if cells.size and not np.isin(cells, ("0", "1")).all():
            cells = np.char.strip(cells)
            bad = np.flatnonzero(~np.isin(cells, ("0", "1")))
            if bad.size:
                j = int(bad[0])
                raise RelationFileError(path, f"cell {cells[j]!r} is not 0 or 1", line, j + 2)
        matrix[i] = cells == "1"
    _check_labels(path, x_labels, "feature", first_line=2)
    _check_labels(path, y_labels, "observation", first_line=None)
    return Relation.from_array(matrix, x_labels, y_labels)


def _check_labels(path, labels, kind, first_line):
    seen: dict[str, int] = {}
    for k, lab in enumerate(labels):
        if lab in seen:
            if first_line is None:
                raise RelationFileError(path, f"duplicate {kind} label {lab!r}", 1, k + 2)
            raise RelationFileError(path, f"duplicate {kind} label {lab!r}", first_line + k, 1)
        seen[lab] = k


def check_pattern(pattern: str) -> None:
    """Reject constructs outside the supported regex subset."""
    for probe, what in _FORBIDDEN:
        m = probe.search(pattern)
        if m and not _escaped(pattern, m.start()):
            raise ValueError(f"{what} at offset {m.start()} is not supported")


def _escaped(s: str, pos: int) -> bool:
    # A match starting at pos is literal if preceded by an odd run of backslashes.
    k = pos - 1
    while k >= 0 and s[k] == "\\":
        k -= 1
    return (pos - 1 - k) % 2 == 1


def load_patterns(path) -> list[tuple[str, re.Pattern]]:
    """Compile a patterns file; blank lines are skipped."""
    path = Path(path)
    out = []
    for n, line in enumerate(_read_text(path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            check_pattern(line)
            out.append((line, re.compile(line)))
        except (ValueError, re.error) as exc:
            col = getattr(exc, "pos", None)
            raise RelationFileError(path, f"bad pattern: {exc}", n, None if col is None else col + 1) from exc
    _check_labels(path, [p for p, _ in out], "pattern", first_line=1)
    return out


def load_pattern_log(directory, patterns) -> Relation:
    """Relation of pattern matches over the files of ``directory``."""
    directory = Path(directory)
    if not directory.is_dir():
        raise RelationFileError(directory, "not a directory")
    compiled = load_patterns(patterns)
    files = sorted(
        (p for p in directory.iterdir() if p.is_file()), key=lambda p: os.fsencode(p.name)
    )
    matrix = np.zeros((len(compiled), len(files)), dtype=bool)
    for j, f in enumerate(files):
        try:
            # surrogateescape keeps arbitrary bytes matchable and deterministic.
            text = f.read_bytes().decode("utf-8", errors="surrogateescape")
        except OSError as exc:
            raise RelationFileError(f, exc.strerror or str(exc)) from exc
        for i, (_, rx) in enumerate(compiled):
            matrix[i, j] = rx.search(text) is not None
    return Relation.from_array(matrix, [p for p, _ in compiled], [f.name for f in files])


def load_relation(path, format: str = "dense-csv", patterns=None) -> Relation:
    """Load a relation from ``path`` in one of :data:`FORMATS`."""
    if format == "dense-csv":
        return parse_dense_csv(_read_text(Path(path)), path)
    if format == "pattern-log":
        if patterns is None:
            raise RelationFileError(path, "pattern-log input needs a patterns file")
        return load_pattern_log(path, patterns)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def dumps_dense_csv(r: Relation) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["", *r.y_labels])
    for label, row in zip(r.x_labels, r.rows()):
        w.writerow([label, *row])
    return buf.getvalue()


def save_relation(r: Relation, path) -> None:
    """Write ``r`` as dense-csv."""
    Path(path).write_text(dumps_dense_csv(r), encoding="utf-8")
