"""Dowker complexes and their weight functions.

Run: python demos/03_dowker_complexes.py
"""
from relmetric import distance_exact, dowker, relation_from_matrix
from relmetric.dowker import weight_bound_violations, weight_differences

full = relation_from_matrix([[1, 1], [1, 1]], "ab")
diag = relation_from_matrix([[1, 0], [0, 1]], "ab")

for name, r in (("all ones", full), ("identity", diag)):
    c = dowker(r)
    print(f"{name}: maximal simplices {c.maximal_labels()}")
    for sigma, (total, diff) in c.weights().items():
        print(f"  {c.simplex_labels(sigma)}: total {total}, differential {diff}")

# Weight differences stay within distance times simplex size here.
d = distance_exact(full, diag)
print(f"\ndistance {d}")
for w in weight_differences(full, diag):
    print(f"  sigma={w.sigma:b} |dt|={w.total} |dd|={w.differential} limit={d * w.size}")

# The differential weight can break that limit: one flip per feature row
# turns three [a] columns into three distinct patterns.
r1 = relation_from_matrix([[1, 1, 1], [0, 0, 0], [0, 0, 0], [0, 0, 0]], "abcd")
r2 = relation_from_matrix([[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]], "abcd")
d = distance_exact(r1, r2)
print(f"\ndistance {d}, violations:",
      [(w.sigma, w.total, w.differential) for w in weight_bound_violations(r1, r2, d)])
