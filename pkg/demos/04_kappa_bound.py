"""The kappa upper bound versus the exact distance.

Run: python demos/04_kappa_bound.py
"""
import time

import numpy as np

from relmetric import Relation, distance_bound, distance_exact, kappa, relation_from_matrix, x_grouping
from relmetric.multiset import partition

target = relation_from_matrix(
    [
        [0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    ],
    "abcd",
)
source = relation_from_matrix(
    [[0, 1, 1, 1, 1], [1, 0, 1, 0, 1], [0, 1, 1, 0, 0], [0, 0, 0, 1, 1]], "abcd"
)

# Patterns sharing a feature fall in one group; groups sort by size.
g = x_grouping(partition(target))
print("group sizes:", g.cardinalities)

plan = kappa(source, target)
print(f"kappa={plan.kappa} partial sums={plan.partial_sums} mapping={plan.mapping.image}")

# On small random pairs the bound usually sits at or above the distance.
rng = np.random.default_rng(0)
for _ in range(5):
    a = Relation.from_array(rng.random((4, 4)) < 0.5)
    b = Relation.from_array(rng.random((4, 4)) < 0.5)
    print(f"exact {distance_exact(a, b)}  bound {distance_bound(a, b)}")

# The bound stays cheap where exact search is hopeless.
big1 = Relation.from_array(rng.random((2000, 1000)) < 0.01)
big2 = Relation.from_array(rng.random((2000, 1000)) < 0.01)
t = time.perf_counter()
b = distance_bound(big1, big2)
print(f"\n2000x1000 bound {b} in {time.perf_counter() - t:.2f}s")
