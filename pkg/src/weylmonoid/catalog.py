"""Named generalized Cartan matrices used for examples and acceptance runs."""

CATALOG = {
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -2], [-1, 2]],
    "G2": [[2, -1], [-3, 2]],
    "affine_A1": [[2, -2], [-2, 2]],
    "affine_A2": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
    "indefinite_2": [[2, -3], [-2, 2]],
    "mixed_3": [[2, -2, 0], [-2, 2, 0], [0, 0, 2]],
}

FINITE = ("A2", "B2", "G2")
