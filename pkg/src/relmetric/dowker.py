"""Dowker complexes of relations, with total and differential weights.

Simplices are feature bitsets.  A complex is stored through its maximal
simplices and the pattern multiplicities of the underlying relation;
weights are computed on demand, so wide feature sets never force a full
enumeration of the face poset.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .multiset import partition
from .relation import (
    Relation,
    RelationError,
    bit_indices,
    bits_from_indices,
    check_same_features,
    popcount,
)

# Faces are enumerated exhaustively up to this many features; beyond it the
# default dimension cap applies.
EXHAUSTIVE_MAX_FEATURES = 20
DEFAULT_MAX_DIM = 3


@dataclass(frozen=True)
class DowkerComplex:
    vertex_labels: tuple[str, ...]
    maximal_simplices: tuple[int, ...]
    pattern_counts: dict

    def __contains__(self, sigma: int) -> bool:
        return any(sigma & m == sigma for m in self.maximal_simplices)

    def total_weight(self, sigma: int) -> int:
        return total_weight(self, sigma)

    def differential_weight(self, sigma: int) -> int:
        return differential_weight(self, sigma)

    def faces(self, max_dim: int | None = None) -> list[int]:
        """Nonempty simplices, deduplicated, sorted by (dimension, bits)."""
        if max_dim is None:
            max_dim = default_max_dim(len(self.vertex_labels))
        seen: set[int] = set()
        for m in self.maximal_simplices:
            verts = bit_indices(m)
            top = len(verts) if max_dim < 0 else min(len(verts), max_dim + 1)
            for k in range(1, top + 1):
                for combo in itertools.combinations(verts, k):
                    seen.add(bits_from_indices(combo))
        return sorted(seen, key=lambda s: (popcount(s), bit_indices(s)))

    def weights(self, max_dim: int | None = None) -> dict[int, tuple[int, int]]:
        """``{simplex: (total weight, differential weight)}`` over :meth:`faces`."""
        return {
            s: (self.total_weight(s), self.differential_weight(s))
            for s in self.faces(max_dim)
        }

    def simplex_labels(self, sigma: int) -> list[str]:
        return [self.vertex_labels[i] for i in bit_indices(sigma)]

    def maximal_labels(self) -> list[list[str]]:
        return sorted(self.simplex_labels(m) for m in self.maximal_simplices)


def default_max_dim(n_x: int) -> int:
    """-1 (no cap) for narrow feature sets, otherwise :data:`DEFAULT_MAX_DIM`."""
    return -1 if n_x <= EXHAUSTIVE_MAX_FEATURES else DEFAULT_MAX_DIM


def maximal_elements(patterns) -> list[int]:
    """Inclusion-maximal elements among nonempty bitsets."""
    ordered = sorted({p for p in patterns if p}, key=popcount, reverse=True)
    kept: list[int] = []
    for p in ordered:
        if not any(p & k == p for k in kept):
            kept.append(p)
    return kept


def dowker(r: Relation) -> DowkerComplex:
    counts = partition(r).multiplicities()
    maxi = maximal_elements(counts)
    maxi.sort(key=lambda s: (popcount(s), bit_indices(s)))
    return DowkerComplex(r.x_labels, tuple(maxi), counts)


def total_weight(c: DowkerComplex, sigma: int) -> int:
    """Number of columns whose pattern contains ``sigma``; 0 off the complex."""
    return sum(n for tau, n in c.pattern_counts.items() if tau & sigma == sigma)


def differential_weight(c: DowkerComplex, sigma: int) -> int:
    """Number of columns whose pattern equals ``sigma`` exactly."""
    return c.pattern_counts.get(sigma, 0)


@dataclass(frozen=True)
class VertexMap:
    image: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "VertexMap":
        return cls(tuple(range(n)))

    @classmethod
    def from_labels(cls, mapping: dict, source: Sequence[str], target: Sequence[str]):
        pos = {lab: i for i, lab in enumerate(target)}
        return cls(tuple(pos[mapping[lab]] for lab in source))

    def apply(self, sigma: int) -> int:
        return bits_from_indices(self.image[i] for i in bit_indices(sigma))


def is_simplicial_map(m: VertexMap, c1: DowkerComplex, c2: DowkerComplex) -> bool:
    """True iff every simplex of ``c1`` lands on a simplex of ``c2``.

    Checking maximal simplices suffices: images of faces are faces of images.
    """
    if len(m.image) != len(c1.vertex_labels):
        raise RelationError("vertex map is not total on the source vertices")
    if any(not 0 <= v < len(c2.vertex_labels) for v in m.image):
        raise RelationError("vertex map points outside the target vertices")
    return all(m.apply(s) in c2 for s in c1.maximal_simplices)


@dataclass(frozen=True)
class WeightDifference:
    sigma: int
    total: int
    differential: int

    @property
    def size(self) -> int:
        return popcount(self.sigma)


def weight_differences(
    r1: Relation, r2: Relation, max_dim: int | None = None
) -> list[WeightDifference]:
    """Absolute weight differences on every simplex of either complex."""
    check_same_features(r1, r2)
    c1, c2 = dowker(r1), dowker(r2)
    if max_dim is None:
        max_dim = default_max_dim(r1.n_x)
    simplices = sorted(
        set(c1.faces(max_dim)) | set(c2.faces(max_dim)),
        key=lambda s: (popcount(s), bit_indices(s)),
    )
    return [
        WeightDifference(
            s,
            abs(total_weight(c1, s) - total_weight(c2, s)),
            abs(differential_weight(c1, s) - differential_weight(c2, s)),
        )
        for s in simplices
    ]


def weight_bound_violations(
    r1: Relation, r2: Relation, d_value: int, max_dim: int | None = None
) -> list[WeightDifference]:
    if r1.n_y != r2.n_y:
        raise RelationError("weight bound compares relations on the same observations")
    return [
        w
        for w in weight_differences(r1, r2, max_dim)
        if w.total > d_value * w.size or w.differential > d_value * w.size
    ]


def weight_bound_check(
    r1: Relation, r2: Relation, d_value: int, max_dim: int | None = None
) -> bool:
    """Check ``|t_R(σ) - t_R'(σ)| <= d·(dim σ + 1)`` and the same for the
    differential weight, for every simplex of either complex."""
    return not weight_bound_violations(r1, r2, d_value, max_dim)

