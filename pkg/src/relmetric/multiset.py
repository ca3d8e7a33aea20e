"""Relations viewed as multisets of column patterns.

Every column ``y`` is classified by its pattern ``σ = {x : (x, y) ∈ R}``;
columns sharing a pattern form the partition ``Y^σ`` whose size is the
multiplicity of ``σ``.  The empty pattern is an ordinary class.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .relation import Relation, bit_indices, check_same_features


def sigma_key(sigma: int, n_x: int) -> str:
    """The pattern as a bit string with feature 0 first.

    Sorting these strings ascending is the canonical order on patterns.
    """
    if n_x == 0:
        return ""
    return format(sigma, f"0{n_x}b")[::-1]


@dataclass(frozen=True)
class Partition:
    sigma: int
    members: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class PartitionedRelation:
    """The multiset view of a relation.

    ``partitions`` are sorted by multiplicity ascending, then by
    :func:`sigma_key` ascending.
    """

    base: Relation
    partitions: tuple[Partition, ...]
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {p.sigma: p for p in self.partitions}
        )

    @property
    def n_x(self) -> int:
        return self.base.n_x

    @property
    def sigmas(self) -> list[int]:
        return [p.sigma for p in self.partitions]

    def multiplicity(self, sigma: int) -> int:
        p = self._index.get(sigma)
        return 0 if p is None else p.multiplicity

    def multiplicities(self) -> dict[int, int]:
        return {p.sigma: p.multiplicity for p in self.partitions}

    def members(self, sigma: int) -> tuple[int, ...]:
        p = self._index.get(sigma)
        return () if p is None else p.members

    def __contains__(self, sigma: int) -> bool:
        return sigma in self._index

    def __len__(self) -> int:
        return len(self.partitions)

    def labeled(self) -> dict[tuple[str, ...], int]:
        """Multiplicities keyed by the tuple of feature labels in each pattern."""
        xs = self.base.x_labels
        return {
            tuple(xs[i] for i in bit_indices(p.sigma)): p.multiplicity
            for p in self.partitions
        }


def canonical_order(counts: dict[int, int], n_x: int) -> list[int]:
    """Patterns sorted by (multiplicity, bit string)."""
    return sorted(counts, key=lambda s: (counts[s], sigma_key(s, n_x)))


def partition(r: Relation) -> PartitionedRelation:
    """Classify the columns of ``r`` by pattern."""
    groups: dict[int, list[int]] = {}
    for j, col in enumerate(r.columns):
        groups.setdefault(col, []).append(j)
    counts = {s: len(m) for s, m in groups.items()}
    order = canonical_order(counts, r.n_x)
    return PartitionedRelation(
        r, tuple(Partition(s, tuple(groups[s])) for s in order)
    )


def height(p: PartitionedRelation) -> int:
    """Largest multiplicity; 0 for a relation without columns."""
    return max((q.multiplicity for q in p.partitions), default=0)


def expand(p: PartitionedRelation) -> list[int]:
    """Column patterns rebuilt from the partitions, in column order."""
    out = [0] * p.base.n_y
    for q in p.partitions:
        for j in q.members:
            out[j] = q.sigma
    return out


@dataclass(frozen=True)
class AgreementSplit:
    """Agreeing and disagreeing columns of two relations on the same features.

    A pattern present in both relations is shared.  Shared columns are paired
    one-for-one, so ``min(m1, m2)`` columns of each side agree; surplus
    columns of a shared pattern join the disagreeing side of the relation
    holding them.  ``disagreeing_1`` / ``disagreeing_2`` map each pattern to
    its disagreeing multiplicity.
    """

    shared: tuple[int, ...]
    only_1: tuple[int, ...]
    only_2: tuple[int, ...]
    agree_1: int
    agree_2: int
    disagree_1: int
    disagree_2: int
    disagreeing_1: dict[int, int]
    disagreeing_2: dict[int, int]


def agreement_split(p1: PartitionedRelation, p2: PartitionedRelation) -> AgreementSplit:
    check_same_features(p1.base, p2.base)
    m1, m2 = p1.multiplicities(), p2.multiplicities()
    shared = [s for s in p1.sigmas if s in m2]
    only_1 = [s for s in p1.sigmas if s not in m2]
    only_2 = [s for s in p2.sigmas if s not in m1]
    dis1 = Counter({s: m1[s] for s in only_1})
    dis2 = Counter({s: m2[s] for s in only_2})
    agree = 0
    for s in shared:
        k = min(m1[s], m2[s])
        agree += k
        if m1[s] > k:
            dis1[s] = m1[s] - k
        if m2[s] > k:
            dis2[s] = m2[s] - k
    return AgreementSplit(
        shared=tuple(shared),
        only_1=tuple(only_1),
        only_2=tuple(only_2),
        agree_1=agree,
        agree_2=agree,
        disagree_1=p1.base.n_y - agree,
        disagree_2=p2.base.n_y - agree,
        disagreeing_1=dict(dis1),
        disagreeing_2=dict(dis2),
    )
