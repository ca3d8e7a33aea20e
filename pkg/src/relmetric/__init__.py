"""Distances between boolean relations that share a feature set.

A relation is a 0/1 matrix with features as rows and observations as
columns.  The package computes the exact distance between two relations
by search over column mappings, a fast upper bound from column-pattern
counts, and the Dowker complex view of each relation.
"""
from .dowker import DowkerComplex, VertexMap, dowker, is_simplicial_map, weight_bound_check
from .io import load_relation, save_relation
from .kappa import (
    KappaPlan,
    XGrouping,
    distance_bound,
    distance_bound_sampled,
    kappa,
    kappa_oracle,
    min_weight_bound,
    x_grouping,
)
from .metric import (
    SearchBudgetExceeded,
    WeightBreakdown,
    distance_exact,
    min_morphism_weight,
    min_weight_exact,
    weight,
    weight_partition_form,
)
from .multiset import AgreementSplit, PartitionedRelation, agreement_split, height, partition
from .relation import (
    ColumnMapping,
    Relation,
    RelationError,
    is_morphism,
    morphism_exists,
    relation_from_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "DowkerComplex",
    "VertexMap",
    "dowker",
    "is_simplicial_map",
    "weight_bound_check",
    "load_relation",
    "save_relation",
    "KappaPlan",
    "XGrouping",
    "distance_bound",
    "distance_bound_sampled",
    "kappa",
    "kappa_oracle",
    "min_weight_bound",
    "x_grouping",
    "SearchBudgetExceeded",
    "WeightBreakdown",
    "distance_exact",
    "min_morphism_weight",
    "min_weight_exact",
    "weight",
    "weight_partition_form",
    "AgreementSplit",
    "PartitionedRelation",
    "agreement_split",
    "height",
    "partition",
    "ColumnMapping",
    "Relation",
    "RelationError",
    "is_morphism",
    "morphism_exists",
    "relation_from_matrix",
]
