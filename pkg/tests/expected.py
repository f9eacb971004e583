"""Frozen reference values for the path example and the matrix algebras."""

CELLS = ("l0", "l1", "l2", "l3", "l4", "l5")
HEADS = ("l1", "l2", "l3", "l4", "l5")

DECOMP_A = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
]

LEVI_ROWS = (("l0", 1), ("l1", 0), ("l2", 0), ("l3", 0), ("l3", 1), ("l4", 0), ("l5", 0))
LEVI_COLS = tuple((c, 0) for c in HEADS)
DECOMP_LEVI = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
]

DECOMP_QUOTIENT = [
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
]

# derived: parabolic standard modules computed independently; row (l3,1)
# picks up the (l3,0) factor that the levi row loses
DECOMP_PARABOLIC = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
]

PATH_DIMS = {"A": 18, "levi": 16, "parabolic": 17, "parabolic-star": 17, "quotient": 14}


def matrix_dims(n, b):
    return {"A": n * n, "levi": (b - 1) ** 2 + (n - b + 1) ** 2,
            "parabolic": (b - 1) * n + (n - b + 1) ** 2, "quotient": (n - b + 1) ** 2}
