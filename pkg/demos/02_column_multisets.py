"""Relations as multisets of column patterns.

Run: python demos/02_column_multisets.py
"""
from relmetric import agreement_split, height, partition, relation_from_matrix

r1 = relation_from_matrix(
    [[1, 1, 1, 0, 1], [1, 0, 0, 0, 1], [0, 1, 1, 1, 0], [0, 0, 1, 1, 0]], "abcd"
)
r2 = relation_from_matrix([[1, 1, 0], [1, 0, 1], [0, 1, 0], [0, 1, 1]], "abcd")

# Columns with identical patterns collapse into one class with a multiplicity.
p1, p2 = partition(r1), partition(r2)
print("r1 patterns:", p1.labeled(), "height", height(p1))
print("r2 patterns:", p2.labeled(), "height", height(p2))

# Patterns present on both sides can be matched at no cost; the rest disagree.
s = agreement_split(p1, p2)
print(f"\nagreeing columns: {s.agree_1} in r1, {s.agree_2} in r2")
print(f"disagreeing columns: {s.disagree_1} in r1, {s.disagree_2} in r2")
