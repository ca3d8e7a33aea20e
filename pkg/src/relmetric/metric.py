"""Weight of column mappings and the exact relation distance.

The weight of ``g: Y1 -> Y2`` is the number of target columns ``g`` never
reaches, plus the worst feature's count of columns whose membership flips
under ``g``.  The distance is the larger of the two directional minimum
weights, found here by exhaustive branch-and-bound search.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .multiset import partition
from .relation import (
    ColumnMapping,
    Relation,
    RelationError,
    _check_mapping,
    bit_indices,
    check_same_features,
    morphism_exists,
)

DEFAULT_BUDGET = 10**7


class SearchBudgetExceeded(RuntimeError):
    """The exact search space is larger than the configured budget.

    Use :func:`relmetric.kappa.distance_bound` for relations of this size.
    """


@dataclass(frozen=True)
class WeightBreakdown:
    term_a: int
    per_x_disagreements: tuple[int, ...]
    term_b: int
    x_hat: int | None
    weight: int


def _breakdown(term_a: int, per_x) -> WeightBreakdown:
    per_x = tuple(int(v) for v in per_x)
    if per_x:
        x_hat = max(range(len(per_x)), key=lambda i: (per_x[i], -i))
        term_b = per_x[x_hat]
    else:
        x_hat, term_b = None, 0
    return WeightBreakdown(term_a, per_x, term_b, x_hat, term_a + term_b)


def weight(g: ColumnMapping, r1: Relation, r2: Relation) -> WeightBreakdown:
    """Weight of ``g`` from ``r1`` to ``r2``, straight from the matrices."""
    check_same_features(r1, r2)
    _check_mapping(g, r1, r2)
    term_a = r2.n_y - len(set(g.image))
    if r1.n_y == 0:
        per_x = np.zeros(r1.n_x, dtype=int)
    else:
        image = np.asarray(g.image, dtype=np.intp)
        per_x = (r1.matrix != r2.matrix[:, image]).sum(axis=1)
    return _breakdown(term_a, per_x)


def weight_partition_form(g: ColumnMapping, r1: Relation, r2: Relation) -> WeightBreakdown:
    """Weight of ``g`` computed from pattern classes instead of matrices.

    Columns are aggregated into transfers between a source class ``Y1^σ``
    and a target class ``Y2^σ'``.  A transfer only costs anything when
    ``σ != σ'``, and then costs one per column for each feature in the
    symmetric difference ``σ Δ σ'``.
    """
    check_same_features(r1, r2)
    _check_mapping(g, r1, r2)
    term_a = r2.n_y - len(set(g.image))
    transfers: Counter = Counter()
    for q in partition(r1).partitions:
        for j in q.members:
            transfers[q.sigma, r2.columns[g.image[j]]] += 1
    per_x = [0] * r1.n_x
    for (s1, s2), n in transfers.items():
        if s1 != s2:
            for i in bit_indices(s1 ^ s2):
                per_x[i] += n
    return _breakdown(term_a, per_x)


def search_space_size(n_source: int, n_target: int) -> int:
    """Mappings enumerated by :func:`min_weight_exact` for these sizes."""
    if n_source == n_target:
        return math.factorial(n_source)
    return n_target**n_source


def min_weight_exact(
    r1: Relation, r2: Relation, budget: int = DEFAULT_BUDGET
) -> tuple[int, ColumnMapping]:
    """Minimum weight over all mappings ``r1 -> r2`` and a minimizing mapping.

    Equal column counts restrict the search to bijections, which reach the
    same minimum.  Mappings are explored depth-first in lexicographic order
    of their image, pruning any branch whose lower bound cannot beat the
    incumbent, so the returned witness is the lexicographically smallest
    minimizer.

    Raises :class:`SearchBudgetExceeded` when the search space is larger
    than ``budget``, and :class:`RelationError` when ``r1`` has columns but
    ``r2`` has none (no mapping exists).
    """
    check_same_features(r1, r2)
    n1, n2 = r1.n_y, r2.n_y
    if n1 and not n2:
        raise RelationError("no column mapping into a relation without columns")
    size = search_space_size(n1, n2)
    if size > budget:
        raise SearchBudgetExceeded(
            f"exact search over {size} mappings exceeds the budget of {budget}; "
            "use kappa.distance_bound for relations this large"
        )
    bijective = n1 == n2
    flips = [[bit_indices(c1 ^ c2) for c2 in r2.columns] for c1 in r1.columns]
    counts = [0] * r1.n_x
    image = [0] * n1
    used = [0] * n2
    best_w = math.inf
    best_img: list[int] | None = None

    def descend(j: int, n_used: int, cur_max: int) -> None:
        nonlocal best_w, best_img
        if j == n1:
            w = (n2 - n_used) + cur_max
            if w < best_w:
                best_w, best_img = w, image.copy()
            return
        remaining = n1 - j
        for t in range(n2):
            if bijective and used[t]:
                continue
            fresh = used[t] == 0
            reach = n_used + fresh
            bits = flips[j][t]
            new_max = cur_max
            for i in bits:
                counts[i] += 1
                if counts[i] > new_max:
                    new_max = counts[i]
            unreached_lb = max(0, n2 - reach - (remaining - 1))
            if new_max + unreached_lb < best_w:
                used[t] += 1
                image[j] = t
                descend(j + 1, reach, new_max)
                used[t] -= 1
            for i in bits:
                counts[i] -= 1

    descend(0, 0, 0)
    return int(best_w), ColumnMapping(n1, n2, tuple(best_img))


def distance_exact(r1: Relation, r2: Relation, budget: int = DEFAULT_BUDGET) -> int:
    """The relation distance: max of the two directional minimum weights."""
    w12, _ = min_weight_exact(r1, r2, budget)
    w21, _ = min_weight_exact(r2, r1, budget)
    return max(w12, w21)


def min_morphism_weight(r1: Relation, r2: Relation) -> int | None:
    """``max(#Y1, #Y2) - #Y1`` when a morphism ``r1 -> r2`` exists, else None.

    No morphism can weigh less than this (it never reaches at least
    ``#Y2 - #Y1`` target columns), but the value is not always attained:
    morphisms only require each column to land on a superset pattern, and
    the features gained still count as flips.
    """
    if not morphism_exists(r1, r2):
        return None
    return max(r1.n_y, r2.n_y) - r1.n_y
