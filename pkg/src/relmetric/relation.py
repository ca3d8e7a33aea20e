"""Labeled boolean relations over a shared feature set.

A relation is stored column-wise: each observation ``y`` carries the set of
features ``x`` it is related to, packed into a Python ``int`` used as a
bitset (bit ``i`` set means ``(x_i, y)`` is in the relation).  Column order
follows ``y_labels`` and is the total order every algorithm in the package
relies on.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class RelationError(ValueError):
    """Malformed relation input or incompatible relations."""


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def bit_indices(bits: int) -> list[int]:
    """Indices of the set bits of ``bits`` in increasing order."""
    out = []
    i = 0
    while bits:
        low = bits & -bits
        i = low.bit_length() - 1
        out.append(i)
        bits ^= low
    return out


def bits_from_indices(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << i
    return bits


def _columns_from_bool(matrix: np.ndarray) -> tuple[int, ...]:
    if matrix.shape[0] == 0:
        return (0,) * matrix.shape[1]
    packed = np.packbits(matrix.T, axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


@dataclass(frozen=True, eq=False)
class Relation:
    """A relation ``R ⊆ X × Y`` with labeled rows (features) and columns.

    Instances are immutable.  Use :func:`relation_from_matrix` or
    :meth:`from_array` to build one with validation.
    """

    x_labels: tuple[str, ...]
    y_labels: tuple[str, ...]
    columns: tuple[int, ...]

    def __post_init__(self):
        if len(self.columns) != len(self.y_labels):
            raise RelationError(
                f"{len(self.columns)} columns but {len(self.y_labels)} y labels"
            )
        _check_unique(self.x_labels, "x")
        _check_unique(self.y_labels, "y")
        limit = 1 << len(self.x_labels)
        for j, col in enumerate(self.columns):
            if col < 0 or col >= limit:
                raise RelationError(
                    f"column {j} has bits outside the {len(self.x_labels)} features"
                )

    @classmethod
    def from_array(cls, matrix, x_labels=None, y_labels=None) -> "Relation":
        """Build from a 2-D 0/1 (or boolean) array shaped ``(#X, #Y)``."""
        arr = np.asarray(matrix)
        if arr.ndim != 2:
            raise RelationError(f"expected a 2-D matrix, got shape {arr.shape}")
        if arr.dtype != bool:
            if arr.size and not np.isin(arr, (0, 1)).all():
                bad = np.argwhere(~np.isin(arr, (0, 1)))[0]
                raise RelationError(
                    f"entry at row {bad[0]}, column {bad[1]} is {arr[tuple(bad)]!r}, not 0/1"
                )
            arr = arr.astype(bool)
        n_x, n_y = arr.shape
        xs = tuple(x_labels) if x_labels is not None else _default_labels("x", n_x)
        ys = tuple(y_labels) if y_labels is not None else _default_labels("y", n_y)
        if len(xs) != n_x or len(ys) != n_y:
            raise RelationError(
                f"matrix is {n_x}x{n_y} but got {len(xs)} x labels and {len(ys)} y labels"
            )
        return cls(tuple(map(str, xs)), tuple(map(str, ys)), _columns_from_bool(arr))

    @property
    def n_x(self) -> int:
        return len(self.x_labels)

    @property
    def n_y(self) -> int:
        return len(self.y_labels)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_x, self.n_y)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Read-only boolean matrix, rows = features, columns = observations."""
        out = np.zeros((self.n_x, self.n_y), dtype=bool)
        if self.n_x and self.n_y:
            nbytes = (self.n_x + 7) // 8
            buf = b"".join(c.to_bytes(nbytes, "little") for c in self.columns)
            packed = np.frombuffer(buf, dtype=np.uint8).reshape(self.n_y, nbytes)
            out = np.unpackbits(packed, axis=1, count=self.n_x, bitorder="little").T
            out = out.astype(bool)
        out.flags.writeable = False
        return out

    def rows(self) -> list[list[int]]:
        """The relation as nested 0/1 lists, row-major."""
        return self.matrix.astype(int).tolist()

    def column(self, j: int) -> int:
        return self.columns[j]

    def column_labels(self, j: int) -> list[str]:
        """Feature labels related to observation ``j``."""
        return [self.x_labels[i] for i in bit_indices(self.columns[j])]

    def subrelation(self, column_indices: Sequence[int]) -> "Relation":
        """Keep only the given columns, in the given order."""
        idx = list(column_indices)
        return Relation(
            self.x_labels,
            tuple(self.y_labels[j] for j in idx),
            tuple(self.columns[j] for j in idx),
        )

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return (self.x_labels, self.y_labels, self.columns) == (
            other.x_labels,
            other.y_labels,
            other.columns,
        )

    def __hash__(self):
        return hash((self.x_labels, self.y_labels, self.columns))

    def __repr__(self):
        return f"Relation({self.n_x}x{self.n_y}, x={list(self.x_labels)[:6]}...)"


def _default_labels(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


def _check_unique(labels: Sequence[str], axis: str) -> None:
    if len(set(labels)) != len(labels):
        seen = set()
        for lab in labels:
            if lab in seen:
                raise RelationError(f"duplicate {axis} label {lab!r}")
            seen.add(lab)


def relation_from_matrix(rows, x_labels=None, y_labels=None) -> Relation:
    """Build a relation from row-major 0/1 lists.

    ``rows[i][j] == 1`` relates feature ``x_labels[i]`` to observation
    ``y_labels[j]``.  Ragged rows, entries other than 0/1 and duplicate
    labels raise :class:`RelationError`.  When ``rows`` is empty the column
    count is taken from ``y_labels``.
    """
    rows = [list(r) for r in rows]
    if rows:
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise RelationError(f"row {i} has {len(r)} entries, expected {width}")
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise RelationError(f"entry at row {i}, column {j} is {v!r}, not 0/1")
        arr = np.array(rows, dtype=bool).reshape(len(rows), width)
    else:
        width = len(y_labels) if y_labels is not None else 0
        arr = np.zeros((0, width), dtype=bool)
    return Relation.from_array(arr, x_labels, y_labels)


@dataclass(frozen=True)
class ColumnMapping:
    """A total function from columns ``0..source_size-1`` to target columns."""

    source_size: int
    target_size: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(v) for v in self.image))
        if len(self.image) != self.source_size:
            raise RelationError(
                f"mapping has {len(self.image)} entries for {self.source_size} source columns"
            )
        for j, t in enumerate(self.image):
            if not 0 <= t < self.target_size:
                raise RelationError(
                    f"column {j} maps to {t}, outside 0..{self.target_size - 1}"
                )

    @classmethod
    def identity(cls, n: int) -> "ColumnMapping":
        return cls(n, n, tuple(range(n)))

    def __call__(self, j: int) -> int:
        return self.image[j]

    def compose(self, then: "ColumnMapping") -> "ColumnMapping":
        """``then ∘ self``: apply this mapping first."""
        if then.source_size != self.target_size:
            raise RelationError("mappings are not composable")
        return ColumnMapping(
            self.source_size, then.target_size, tuple(then.image[t] for t in self.image)
        )

    def is_bijection(self) -> bool:
        return self.source_size == self.target_size and len(set(self.image)) == self.source_size


def check_same_features(r1: Relation, r2: Relation) -> None:
    if r1.x_labels != r2.x_labels:
        raise RelationError("relations do not share the same x labels")


def is_rel_plus(r: Relation) -> bool:
    """True iff the matrix has no all-zero row and no all-zero column."""
    if any(c == 0 for c in r.columns):
        return False
    union = 0
    for c in r.columns:
        union |= c
    return union == (1 << r.n_x) - 1


def morphism_exists(r1: Relation, r2: Relation) -> bool:
    """True iff some column map ``g`` sends every column of ``r1`` into a
    superset column of ``r2`` (a morphism with the identity on features)."""
    check_same_features(r1, r2)
    targets = _maximal_patterns(set(r2.columns))
    for col in set(r1.columns):
        if not any(col & t == col for t in targets):
            return False
    return True


def _maximal_patterns(patterns: set[int]) -> list[int]:
    ordered = sorted(patterns, key=popcount, reverse=True)
    kept: list[int] = []
    for p in ordered:
        if not any(p & k == p for k in kept):
            kept.append(p)
    return kept


def is_morphism(g: ColumnMapping, r1: Relation, r2: Relation) -> bool:
    """True iff ``column(r1, j) ⊆ column(r2, g(j))`` for every ``j``."""
    check_same_features(r1, r2)
    _check_mapping(g, r1, r2)
    return all(c & r2.columns[t] == c for c, t in zip(r1.columns, g.image))


def _check_mapping(g: ColumnMapping, r1: Relation, r2: Relation) -> None:
    if g.source_size != r1.n_y or g.target_size != r2.n_y:
        raise RelationError(
            f"mapping is {g.source_size}->{g.target_size} but relations have "
            f"{r1.n_y} and {r2.n_y} columns"
        )


def all_mappings(n_source: int, n_target: int):
    """Every column mapping, in lexicographic order of the image tuple."""
    for image in itertools.product(range(n_target), repeat=n_source):
        yield ColumnMapping(n_source, n_target, image)
