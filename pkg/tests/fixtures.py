"""Worked relations used as exact-value fixtures.

Rows are features, columns are observations.  Names describe the role each
relation plays in the checks that use it.
"""
from relmetric.relation import relation_from_matrix

ABCD = ("a", "b", "c", "d")
ABCDE = ("a", "b", "c", "d", "e")


def rel(rows, xs=None, ys=None):
    return relation_from_matrix(rows, x_labels=xs, y_labels=ys)


# Single related cell against the empty 1x1 relation.
SINGLE_ONE = rel([[1]], ("1",), ("a",))
SINGLE_ZERO = rel([[0]], ("1",), ("a",))

# Four columns against three, no morphism from the second to the first.
FOUR_COLS = rel(
    [[1, 1, 1, 0], [1, 0, 0, 0], [0, 1, 1, 1], [0, 0, 1, 1]], ABCD, ("1", "2", "3", "4")
)
THREE_COLS = rel([[1, 1, 0], [1, 0, 1], [0, 1, 0], [0, 1, 1]], ABCD, ("5", "6", "7"))
# Both of the above side by side.
SEVEN_COLS = rel(
    [
        [1, 1, 1, 0, 1, 1, 0],
        [1, 0, 0, 0, 1, 0, 1],
        [0, 1, 1, 1, 0, 1, 0],
        [0, 0, 1, 1, 0, 1, 1],
    ],
    ABCD,
)

# No morphism either way, yet a simplicial map exists.
AB_C = rel([[1, 0], [1, 0], [0, 1]], ("a", "b", "c"), ("1", "2"))
A_BC = rel([[1, 0], [0, 1], [0, 1]], ("a", "b", "c"), ("1", "2"))

# Pair attaining the weight-difference bound with equality at [a,b].
ALL_ONES_2x2 = rel([[1, 1], [1, 1]], ("a", "b"), ("1", "2"))
IDENTITY_2x2 = rel([[1, 0], [0, 1]], ("a", "b"), ("1", "2"))

# Five-column pair at distance one; also the morphism-weight pair.
FIVE_COL_1 = rel(
    [[1, 1, 1, 1, 0], [1, 1, 0, 0, 0], [0, 0, 1, 1, 1], [0, 0, 1, 1, 1]], ABCD
)
FIVE_COL_2 = rel(
    [[1, 1, 1, 1, 1], [1, 1, 0, 0, 0], [0, 0, 1, 1, 1], [0, 0, 0, 1, 1]], ABCD
)
TWO_COL_TARGET = rel([[1, 1], [1, 0], [1, 1], [0, 1]], ABCD)
MORPHISM_F = (0, 0, 3, 3, 3)
MORPHISM_G = (0, 0, 1, 1, 1)

# Remark target: all-ones 3x1 has constant total weight.
ALL_ONES_3x1 = rel([[1], [1], [1]], ("A", "B", "C"), ("a",))

# Target with four x-groups of sizes 1, 3, 2, 4.
GROUPED_TARGET = rel(
    [
        [0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    ],
    ABCD,
    tuple(str(i) for i in range(1, 11)),
)
FIVE_SOURCE = rel(
    [[0, 1, 1, 1, 1], [1, 0, 1, 0, 1], [0, 1, 1, 0, 0], [0, 0, 0, 1, 1]],
    ABCD,
    ("11", "12", "13", "14", "15"),
)
ONE_GROUP_TARGET = rel(
    [[1, 1, 1], [0, 1, 1], [0, 0, 0], [0, 0, 0]], ABCD, ("2", "3", "4")
)
TWO_GROUP_TARGET = rel(
    [[0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0]], ABCD, ("1", "2", "3", "4")
)
FOUR_SOURCE = rel(
    [[0, 1, 1, 1], [1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]],
    ABCD,
    ("11", "12", "13", "14"),
)

# Ten-column pair with a loose bound.
WIDE_1 = rel(
    [
        [1, 0, 1, 1, 0, 0, 1, 1, 0, 1],
        [0, 1, 0, 1, 0, 0, 0, 1, 1, 1],
        [1, 1, 1, 0, 1, 0, 0, 0, 0, 1],
        [1, 1, 1, 0, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 1, 1, 0, 1, 1, 1, 1],
    ],
    ABCDE,
)
WIDE_2 = rel(
    [
        [0, 0, 1, 1, 0, 1, 1, 1, 0, 1],
        [0, 0, 1, 1, 1, 1, 0, 1, 1, 0],
        [1, 0, 1, 1, 0, 1, 1, 0, 1, 1],
        [0, 1, 0, 1, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 1, 1],
    ],
    ABCDE,
)

# Ten-column pair differing in four columns, bound 2.
NEAR_1 = rel(
    [
        [0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
        [0, 0, 1, 0, 1, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 1, 0, 0, 0],
    ],
    ABCDE,
)
NEAR_2 = rel(
    [
        [0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
        [0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 0, 1, 1, 0, 0],
    ],
    ABCDE,
)
