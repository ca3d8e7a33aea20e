import numpy as np
import pytest
from hypothesis import given

from conftest import random_relation, relation_tuples
from fixtures import (
    FIVE_SOURCE,
    FOUR_SOURCE,
    GROUPED_TARGET,
    NEAR_1,
    NEAR_2,
    ONE_GROUP_TARGET,
    SINGLE_ONE,
    SINGLE_ZERO,
    TWO_GROUP_TARGET,
    WIDE_1,
    WIDE_2,
)
from relmetric.kappa import (
    distance_bound,
    distance_bound_sampled,
    kappa,
    kappa_oracle,
    kappa_value,
    min_weight_bound,
    x_grouping,
)
from relmetric.metric import distance_exact, min_weight_exact, weight
from relmetric.multiset import partition
from relmetric.relation import RelationError, relation_from_matrix


def labeled_groups(r, grouping):
    xs = r.x_labels
    return [
        [tuple(xs[i] for i in range(r.n_x) if s >> i & 1) for s in g.member_sigmas]
        for g in grouping.groups
    ]


def test_grouping_of_four_groups():
    g = x_grouping(partition(GROUPED_TARGET))
    assert labeled_groups(GROUPED_TARGET, g) == [
        [()],
        [("c",)],
        [("a",), ("a", "b")],
        [("d",)],
    ]
    assert g.cardinalities == [1, 2, 3, 4]
    assert [grp.tau for grp in g.groups] == [0, 0b0100, 0b0011, 0b1000]


def test_single_group():
    g = x_grouping(partition(ONE_GROUP_TARGET))
    assert len(g) == 1 and g.cardinalities == [3]
    one = x_grouping(partition(relation_from_matrix([[1, 1], [1, 1]])))
    assert len(one) == 1


def test_grouping_restrictions():
    p = partition(GROUPED_TARGET)
    assert x_grouping(p, restrict_to={0b1000}).cardinalities == [4]
    assert x_grouping(p, restrict_to={0b1000: 2, 0b0001: 1}).cardinalities == [1, 2]


@pytest.mark.parametrize(
    "source, target, value, m",
    [
        (FIVE_SOURCE, GROUPED_TARGET, 3, 2),
        (FIVE_SOURCE, ONE_GROUP_TARGET, 0, 1),
        (FIVE_SOURCE, TWO_GROUP_TARGET, 1, 2),
        (FOUR_SOURCE, GROUPED_TARGET, 1, 2),
    ],
)
def test_kappa_values(source, target, value, m):
    plan = kappa(source, target)
    assert plan.kappa == value
    assert plan.m == m


def test_kappa_plan_for_four_groups():
    plan = kappa(FIVE_SOURCE, GROUPED_TARGET)
    assert plan.partial_sums == (1, 3, 6, 10)
    assert plan.n_groups == 4
    # 11->1, 12->5, 13->6, 14->2, 15->3 in one-based labels.
    assert [GROUPED_TARGET.y_labels[t] for t in plan.mapping.image] == ["1", "5", "6", "2", "3"]
    assert [GROUPED_TARGET.y_labels[t] for t in plan.disagreeing_target] == [
        "1", "5", "6", "2", "3", "4", "7", "8", "9", "10"
    ]


def test_surplus_source_columns_pile_onto_last_target():
    plan = kappa(FIVE_SOURCE, TWO_GROUP_TARGET)
    assert plan.mapping.image == (0, 1, 2, 3, 3)


def test_ten_column_pairs():
    near_12, near_21 = kappa(NEAR_1, NEAR_2), kappa(NEAR_2, NEAR_1)
    assert (near_12.kappa, near_21.kappa) == (2, 2)
    assert near_12.agree == 6
    assert min_weight_bound(NEAR_1, NEAR_2) == 2
    assert distance_bound(NEAR_1, NEAR_2) == 2
    assert distance_exact(NEAR_1, NEAR_2) == 2

    wide_12, wide_21 = kappa(WIDE_1, WIDE_2), kappa(WIDE_2, WIDE_1)
    assert (wide_12.kappa, wide_21.kappa) == (0, 1)
    # Two column patterns are shared, not one.
    assert wide_12.agree == 2
    assert distance_bound(WIDE_1, WIDE_2) == 8


@pytest.mark.slow
def test_ten_column_pair_exact_distance_is_below_bound():
    assert distance_exact(WIDE_1, WIDE_2) == 6


def test_trivial_bounds():
    assert min_weight_bound(SINGLE_ONE, SINGLE_ZERO) == 1
    assert min_weight_bound(NEAR_1, NEAR_1) == 0
    assert distance_bound(WIDE_1, WIDE_1) == 0


def test_oracle_examples():
    assert kappa_oracle(FIVE_SOURCE, GROUPED_TARGET) == 3
    assert kappa_oracle(FIVE_SOURCE, ONE_GROUP_TARGET) == 0
    assert kappa_oracle(FIVE_SOURCE, TWO_GROUP_TARGET) == 1


def test_oracle_exceeds_kappa_when_a_partial_group_spills():
    # Group [c] gets 2 columns and [a],[a,b] gets 1: the largest load is 2,
    # so the mapping keeps 2 columns away from it while kappa reports 1.
    assert kappa(FOUR_SOURCE, GROUPED_TARGET).kappa == 1
    assert kappa_oracle(FOUR_SOURCE, GROUPED_TARGET) == 2


def test_kappa_value_cases():
    assert kappa_value([5], 3)[0] == 0
    assert kappa_value([1, 2], 5)[0] == 1
    assert kappa_value([1, 2, 3, 4], 5)[:2] == (3, 2)
    assert kappa_value([1, 2, 3, 4], 4)[:2] == (1, 2)
    assert kappa_value([3, 4], 2)[:2] == (0, 0)


def test_min_weight_bound_can_undershoot():
    # Two {z} columns against {a} and {b}: kappa is 1 but every mapping
    # flips z twice.
    r1 = relation_from_matrix([[0, 0], [0, 0], [1, 1]], "abz")
    r2 = relation_from_matrix([[1, 0], [0, 1], [0, 0]], "abz")
    assert kappa(r1, r2).kappa == 1
    assert min_weight_bound(r1, r2) == 1
    assert min_weight_exact(r1, r2)[0] == 2


def test_sampled_bound():
    full = distance_bound(WIDE_1, WIDE_2)
    assert distance_bound_sampled(WIDE_1, WIDE_2, 10, seed=0) == full
    assert distance_bound_sampled(WIDE_1, WIDE_2, 50, seed=1) == full
    a = distance_bound_sampled(WIDE_1, WIDE_2, 4, seed=7)
    assert a == distance_bound_sampled(WIDE_1, WIDE_2, 4, seed=7)
    assert a <= 4
    with pytest.raises(ValueError):
        distance_bound_sampled(WIDE_1, WIDE_2, 0)


def test_mismatched_features():
    with pytest.raises(RelationError):
        kappa(FIVE_SOURCE, WIDE_1)


@given(relation_tuples(k=2, max_x=5, max_y=6))
def test_plan_invariants(pair):
    r1, r2 = pair
    plan = kappa(r1, r2)
    assert 0 <= plan.kappa <= plan.disagree_1
    assert plan.kappa <= plan.disagree_2
    assert plan.agree + plan.disagree_1 == r1.n_y
    assert plan.agree + plan.disagree_2 == r2.n_y
    cards = [g.total_cardinality for g in plan.ordered_groups]
    assert cards == sorted(cards)
    assert list(plan.partial_sums) == list(np.cumsum(cards)) if cards else plan.partial_sums == ()
    if cards:
        assert plan.partial_sums[-1] == plan.disagree_2
    taus = [g.tau for g in plan.ordered_groups]
    for i, t in enumerate(taus):
        for u in taus[i + 1:]:
            assert t & u == 0
    if plan.mapping is not None:
        image = plan.mapping.image
        assert len(image) == r1.n_y
        k = min(plan.disagree_1, plan.disagree_2)
        firsts = [image[j] for j in plan.disagreeing_source[:k]]
        assert firsts == list(plan.disagreeing_target[:k])
        # Agreeing columns keep their pattern.
        dis = set(plan.disagreeing_source)
        for j in range(r1.n_y):
            if j not in dis:
                assert r1.columns[j] == r2.columns[image[j]]


@given(relation_tuples(k=2, max_x=5, max_y=6))
def test_grouping_covers_disagreeing_patterns(pair):
    r1, r2 = pair
    plan = kappa(r1, r2)
    members = [s for g in plan.ordered_groups for s in g.member_sigmas]
    assert len(members) == len(set(members))
    assert sorted(members) == sorted({r2.columns[j] for j in plan.disagreeing_target})


@given(relation_tuples(k=2, max_x=5, max_y=6))
def test_kappa_never_exceeds_the_oracle(pair):
    r1, r2 = pair
    assert kappa(r1, r2).kappa <= kappa_oracle(r1, r2)


@given(relation_tuples(k=2, max_x=4, max_y=4))
def test_distance_bound_never_below_column_difference(pair):
    r1, r2 = pair
    assert distance_bound(r1, r2) >= abs(r1.n_y - r2.n_y)


def test_bound_scales_to_thousands_of_features():
    rng = np.random.default_rng(3)
    r1 = random_relation(rng, 3000, 400, density=0.002)
    r2 = random_relation(rng, 3000, 400, density=0.002)
    b = distance_bound(r1, r2)
    assert 0 <= b <= 400
    plan = kappa(r1, r2)
    assert weight(plan.mapping, r1, r2).term_a == 0
