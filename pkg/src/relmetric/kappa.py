"""Upper bounds on minimum weight and distance from column patterns alone.

Only the disagreeing columns matter: patterns common to both relations are
paired off one-for-one first.  The target's disagreeing patterns are split
into x-groups (connected components under shared features), the groups are
ordered by size, and κ counts how many source columns a size-ordered
one-for-one assignment can keep away from the worst feature's group.

All steps are linear in the matrix size: pattern classes come from hashing
column bitsets and groups from a union-find over feature rows.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .multiset import PartitionedRelation, agreement_split, partition, sigma_key
from .relation import ColumnMapping, Relation, check_same_features


@dataclass(frozen=True)
class XGroup:
    tau: int
    member_sigmas: tuple[int, ...]
    total_cardinality: int


@dataclass(frozen=True)
class XGrouping:
    groups: tuple[XGroup, ...]

    @property
    def cardinalities(self) -> list[int]:
        return [g.total_cardinality for g in self.groups]

    def __len__(self) -> int:
        return len(self.groups)


def _set_rows(sigma: int, n_x: int) -> np.ndarray:
    nbytes = (n_x + 7) // 8
    raw = np.frombuffer(sigma.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, count=n_x, bitorder="little"))


def _group_counts(counts: dict[int, int], n_x: int) -> XGrouping:
    """Group patterns into support-disjoint x-groups, ordered for κ.

    Groups are sorted by total cardinality ascending; ties go to the group
    whose first member comes first canonically.  Members within a group
    are in canonical order (multiplicity, then bit string).
    """
    parent = list(range(n_x))

    def find(i: int) -> int:
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    rows_of: dict[int, int] = {}
    for sigma in counts:
        if not sigma:
            continue
        rows = _set_rows(sigma, n_x)
        first = find(int(rows[0]))
        for i in rows[1:].tolist():
            ri = find(i)
            if ri != first:
                parent[ri] = first
        rows_of[sigma] = int(rows[0])

    members: dict[int, list[int]] = {}
    if 0 in counts:
        members[-1] = [0]
    for sigma, row in rows_of.items():
        members.setdefault(find(row), []).append(sigma)

    keyed = {s: (counts[s], int(sigma_key(s, n_x) or "0", 2)) for s in counts}
    groups = []
    for sigmas in members.values():
        sigmas.sort(key=keyed.__getitem__)
        tau = 0
        for s in sigmas:
            tau |= s
        groups.append(
            (XGroup(tau, tuple(sigmas), sum(counts[s] for s in sigmas)), keyed[sigmas[0]])
        )
    groups.sort(key=lambda pair: (pair[0].total_cardinality, pair[1]))
    return XGrouping(tuple(g for g, _ in groups))


def x_grouping(p: PartitionedRelation, restrict_to=None) -> XGrouping:
    """x-grouping of the partitions of ``p``.

    ``restrict_to`` limits the grouping to some patterns: either a set of
    patterns (keeping their full multiplicity) or a mapping from pattern to
    the multiplicity to use.
    """
    counts = p.multiplicities()
    if restrict_to is not None:
        if hasattr(restrict_to, "items"):
            counts = {s: n for s, n in restrict_to.items() if n > 0}
        else:
            counts = {s: counts[s] for s in restrict_to if s in counts}
    return _group_counts(counts, p.n_x)


@dataclass(frozen=True)
class KappaPlan:
    """κ together with everything used to compute it.

    ``mapping`` is a full column mapping ``r1 -> r2`` (None when ``r2`` has
    no columns): agreeing columns go to their paired partners, disagreeing
    columns follow the κ assignment.
    """

    ordered_groups: tuple[XGroup, ...]
    partial_sums: tuple[int, ...]
    m: int
    kappa: int
    mapping: ColumnMapping | None
    agree: int
    disagree_1: int
    disagree_2: int
    disagreeing_source: tuple[int, ...]
    disagreeing_target: tuple[int, ...]

    @property
    def n_groups(self) -> int:
        return len(self.ordered_groups)


def kappa_value(cardinalities: list[int], n_source: int) -> tuple[int, int, list[int]]:
    """κ from the size-sorted group cardinalities and the source count.

    Returns ``(kappa, m, partial_sums)``.  ``m`` is the largest index with
    ``s_m <= n_source`` (0 when even the first group is larger), ``s_0 = 0``.
    """
    sums = np.cumsum(cardinalities, dtype=np.int64).tolist() if cardinalities else []
    n = len(sums)
    m = int(np.searchsorted(sums, n_source, side="right")) if sums else 0
    s = [0] + sums
    if n <= 1 or m == 0:
        return 0, m, sums
    if n_source >= sums[-1]:
        return s[m - 1], m, sums
    spill = n_source - s[m]
    if spill < cardinalities[m - 1]:
        return s[m - 1], m, sums
    return s[m], m, sums


def _split_columns(r1: Relation, r2: Relation, p1, p2, split):
    """Pair agreeing columns and list the disagreeing ones on each side."""
    pairs: list[tuple[int, int]] = []
    dis1: list[int] = []
    dis2: list[int] = []
    shared = set(split.shared)
    for q in p1.partitions:
        if q.sigma in shared:
            partner = p2.members(q.sigma)
            k = min(len(q.members), len(partner))
            pairs.extend(zip(q.members[:k], partner[:k]))
            dis1.extend(q.members[k:])
        else:
            dis1.extend(q.members)
    for q in p2.partitions:
        if q.sigma in shared:
            k = min(len(q.members), p1.multiplicity(q.sigma))
            dis2.extend(q.members[k:])
        else:
            dis2.extend(q.members)
    return sorted(pairs), sorted(dis1), dis2


def kappa(r1: Relation, r2: Relation) -> KappaPlan:
    """κ(r1, r2) with its x-grouping and a witness κ mapping."""
    check_same_features(r1, r2)
    p1, p2 = partition(r1), partition(r2)
    split = agreement_split(p1, p2)
    pairs, dis1, dis2 = _split_columns(r1, r2, p1, p2, split)
    d1, d2 = split.disagree_1, split.disagree_2

    grouping = _group_counts(split.disagreeing_2, r2.n_x) if d2 else XGrouping(())
    cards = grouping.cardinalities
    if d1 == 0 or d2 == 0:
        value, m, sums = 0, 0, np.cumsum(cards).tolist() if cards else []
    else:
        value, m, sums = kappa_value(cards, d1)

    # Target disagreeing columns in assignment order: group, then pattern
    # within the group, then column order.
    surplus_cols: dict[int, list[int]] = {}
    for j in dis2:
        surplus_cols.setdefault(r2.columns[j], []).append(j)
    target_order = [
        j for g in grouping.groups for s in g.member_sigmas for j in surplus_cols[s]
    ]

    mapping = None
    if r2.n_y:
        image = [0] * r1.n_y
        for a, b in pairs:
            image[a] = b
        # Source columns past the target count pile onto the last target,
        # i.e. into the largest group.
        fallback = target_order[-1] if target_order else pairs[0][1] if pairs else 0
        for i, j in enumerate(dis1):
            image[j] = target_order[i] if i < len(target_order) else fallback
        mapping = ColumnMapping(r1.n_y, r2.n_y, tuple(image))

    return KappaPlan(
        ordered_groups=grouping.groups,
        partial_sums=tuple(int(v) for v in sums),
        m=m,
        kappa=int(value),
        mapping=mapping,
        agree=split.agree_1,
        disagree_1=d1,
        disagree_2=d2,
        disagreeing_source=tuple(dis1),
        disagreeing_target=tuple(target_order),
    )


def kappa_oracle(r1: Relation, r2: Relation) -> int:
    """The reduction a κ mapping achieves, measured on the mapping itself.

    Rebuilds the κ mapping without the optimized pipeline (pairing by
    brute-force column comparison, x-groups by repeated union-closure,
    plain sorting), counts how many disagreeing source columns land in each
    target x-group, and returns the number of disagreeing source columns
    minus the largest such load.
    """
    check_same_features(r1, r2)
    free = list(range(r2.n_y))
    dis1: list[int] = []
    for j, c in enumerate(r1.columns):
        hit = next((t for t in free if r2.columns[t] == c), None)
        if hit is None:
            dis1.append(j)
        else:
            free.remove(hit)
    dis2 = free
    if not dis1 or not dis2:
        return 0

    counts: dict[int, int] = {}
    for t in dis2:
        counts[r2.columns[t]] = counts.get(r2.columns[t], 0) + 1
    groups: list[list[int]] = []
    if 0 in counts:
        groups.append([0])
    pending = [s for s in counts if s]
    while pending:
        group = [pending.pop(0)]
        support = group[0]
        grew = True
        while grew:
            grew = False
            for s in list(pending):
                if s & support:
                    group.append(s)
                    support |= s
                    pending.remove(s)
                    grew = True
        groups.append(group)

    def canon(s: int):
        return (counts[s], sigma_key(s, r1.n_x))

    for g in groups:
        g.sort(key=canon)
    groups.sort(key=lambda g: (sum(counts[s] for s in g), canon(g[0])))
    slots = [k for k, g in enumerate(groups) for s in g for _ in range(counts[s])]

    loads = [0] * len(groups)
    for i in range(len(dis1)):
        loads[slots[min(i, len(slots) - 1)]] += 1
    return len(dis1) - max(loads)


def min_weight_bound(r1: Relation, r2: Relation) -> int:
    """Upper bound ``max(#Y1, #Y2) - (#Y1 agreeing + κ(r1, r2))`` on the
    minimum weight of any mapping ``r1 -> r2``."""
    plan = kappa(r1, r2)
    bound = max(r1.n_y, r2.n_y) - (plan.agree + plan.kappa)
    assert bound >= max(r1.n_y, r2.n_y) - r1.n_y
    return bound


def distance_bound(r1: Relation, r2: Relation) -> int:
    """Upper bound on the distance from pattern counts and κ in both directions."""
    k12, k21 = kappa(r1, r2), kappa(r2, r1)
    return max(r1.n_y, r2.n_y) - min(k12.agree + k12.kappa, k21.agree + k21.kappa)


def sample_columns(r: Relation, sample_size: int, rng: np.random.Generator) -> Relation:
    """Up to ``sample_size`` columns drawn without replacement, kept in order."""
    k = min(sample_size, r.n_y)
    idx = np.sort(rng.choice(r.n_y, size=k, replace=False)) if k else []
    return r.subrelation([int(j) for j in idx])


def distance_bound_sampled(r1: Relation, r2: Relation, sample_size: int, seed=None) -> int:
    """:func:`distance_bound` on random column samples of both relations.

    ``seed`` is anything :func:`numpy.random.default_rng` accepts.  The
    first relation is sampled first, so equal seeds give equal results.
    """
    if sample_size < 1:
        raise ValueError("sample_size must be at least 1")
    check_same_features(r1, r2)
    rng = np.random.default_rng(seed)
    s1 = sample_columns(r1, sample_size, rng)
    s2 = sample_columns(r2, sample_size, rng)
    return distance_bound(s1, s2)
