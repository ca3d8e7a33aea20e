"""Two small relations, the weight of a column mapping, and their distance.

Run: python demos/01_relations_and_distance.py
"""
from relmetric import ColumnMapping, distance_exact, min_weight_exact, relation_from_matrix, weight

# Rows are features a..d; columns are observations.
r1 = relation_from_matrix(
    [[1, 1, 1, 0], [1, 0, 0, 0], [0, 1, 1, 1], [0, 0, 1, 1]], "abcd", ["1", "2", "3", "4"]
)
r2 = relation_from_matrix([[1, 1, 0], [1, 0, 1], [0, 1, 0], [0, 1, 1]], "abcd", ["5", "6", "7"])
print("r1 columns:", r1.rows())
print("r2 columns:", r2.rows())

# A mapping sends each column of r1 to a column of r2.  Its weight counts
# target columns it never reaches plus the worst per-feature flip count.
g = ColumnMapping(4, 3, (0, 1, 1, 2))
w = weight(g, r1, r2)
print(f"\nmapping {g.image}: unreached={w.term_a} worst flips={w.term_b} "
      f"(feature {r1.x_labels[w.x_hat]}) weight={w.weight}")

# The exact search finds the lightest mapping in each direction.
fwd, best_fwd = min_weight_exact(r1, r2)
back, best_back = min_weight_exact(r2, r1)
print(f"lightest r1->r2: {best_fwd.image} weight {fwd}")
print(f"lightest r2->r1: {best_back.image} weight {back}")
print("distance:", distance_exact(r1, r2))
