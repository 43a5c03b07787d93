"""Golden data transcribed from the published tables.

PREPROJ_DIMS: per projective vertex, the dimension vectors of rho, Phi- rho
and (Phi-)^2 rho in the display order (x1, y1, x0, y2, x2, y3, x3).  The
(Phi-)^2 entries for y2/y3 correct print errors in the source table: the
printed values contradict linearity of the Coxeter transformation on
dimension vectors and the arm-permutation symmetry of the quiver.

H0_GENERATOR_SIGS / H1_GENERATOR_SIGS: characteristic-function rows of the
generators; the remaining rows of both tables are defined by the product rule
(the characteristic function of a meet is the bitwise product), which is how
the published tables themselves are generated.
"""

PREPROJ_DIMS = {
    "x0": ((0, 0, 1, 0, 0, 0, 0), (0, 1, 2, 1, 0, 1, 0), (1, 2, 4, 2, 1, 2, 1)),
    "y1": ((0, 1, 1, 0, 0, 0, 0), (1, 1, 2, 1, 0, 1, 0), (0, 1, 3, 2, 1, 2, 1)),
    "y2": ((0, 0, 1, 1, 0, 0, 0), (0, 1, 2, 1, 1, 1, 0), (1, 2, 3, 1, 0, 2, 1)),
    "y3": ((0, 0, 1, 0, 0, 1, 0), (0, 1, 2, 1, 0, 1, 1), (1, 2, 3, 2, 1, 1, 0)),
    "x1": ((1, 1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 1, 0), (0, 1, 2, 1, 1, 1, 1)),
    "x2": ((0, 0, 1, 1, 1, 0, 0), (0, 1, 1, 0, 0, 1, 0), (1, 1, 2, 1, 0, 1, 1)),
    "x3": ((0, 0, 1, 0, 0, 1, 1), (0, 1, 1, 1, 0, 0, 0), (1, 1, 2, 1, 1, 1, 0)),
}

# H+(0): element factors (one of a/b/I per arm) in published row order, and
# the generator signatures over (rho_y1, rho_y2, rho_y3, rho_x1, rho_x2, rho_x3).
H0_ROWS = (
    ("a", "I", "I"), ("I", "a", "I"), ("I", "I", "a"),
    ("b", "I", "I"), ("I", "b", "I"), ("I", "I", "b"),
    ("a", "a", "I"), ("a", "I", "a"), ("I", "a", "a"),
    ("b", "b", "I"), ("b", "I", "b"), ("I", "b", "b"),
    ("a", "b", "I"), ("a", "I", "b"), ("b", "a", "I"),
    ("I", "a", "b"), ("b", "I", "a"), ("I", "b", "a"),
    ("a", "a", "b"), ("a", "b", "a"), ("b", "a", "a"),
    ("a", "b", "b"), ("b", "a", "b"), ("b", "b", "a"),
    ("a", "a", "a"), ("b", "b", "b"), ("I", "I", "I"),
)

H0_GENERATOR_SIGS = {
    ("a", 1): (0, 1, 1, 0, 1, 1),
    ("a", 2): (1, 0, 1, 1, 0, 1),
    ("a", 3): (1, 1, 0, 1, 1, 0),
    ("b", 1): (0, 1, 1, 1, 1, 1),
    ("b", 2): (1, 0, 1, 1, 1, 1),
    ("b", 3): (1, 1, 0, 1, 1, 1),
    ("I", 0): (1, 1, 1, 1, 1, 1),
}

# H+(n), n >= 1: element factors (a/b/c/I per arm) in published row order, and
# generator signatures over
# (rho_x1, rho_x2, rho_x3, Phi- rho_y1..y3, Phi- rho_x1..x3).
H1_ROWS = (
    ("a", "I", "I"), ("I", "a", "I"), ("I", "I", "a"),
    ("b", "I", "I"), ("I", "b", "I"), ("I", "I", "b"),
    ("c", "I", "I"), ("I", "c", "I"), ("I", "I", "c"),
    ("a", "a", "I"), ("a", "I", "a"), ("I", "a", "a"),
    ("b", "b", "I"), ("b", "I", "b"), ("I", "b", "b"),
    ("c", "c", "I"), ("c", "I", "c"), ("I", "c", "c"),
    ("a", "b", "I"), ("a", "I", "b"), ("b", "a", "I"),
    ("I", "a", "b"), ("b", "I", "a"), ("I", "b", "a"),
    ("a", "c", "I"), ("a", "I", "c"), ("c", "a", "I"),
    ("I", "a", "c"), ("c", "I", "a"), ("I", "c", "a"),
    ("b", "c", "I"), ("b", "I", "c"), ("c", "b", "I"),
    ("I", "b", "c"), ("c", "I", "b"), ("I", "c", "b"),
    ("a", "a", "b"), ("a", "b", "a"), ("b", "a", "a"),
    ("a", "a", "c"), ("a", "c", "a"), ("c", "a", "a"),
    ("b", "b", "a"), ("b", "a", "b"), ("a", "b", "b"),
    ("b", "b", "c"), ("b", "c", "b"), ("c", "b", "b"),
    ("c", "c", "a"), ("c", "a", "c"), ("a", "c", "c"),
    ("c", "c", "b"), ("c", "b", "c"), ("b", "c", "c"),
    ("a", "b", "c"), ("a", "c", "b"), ("b", "a", "c"),
    ("c", "a", "b"), ("b", "c", "a"), ("c", "b", "a"),
    ("a", "a", "a"), ("b", "b", "b"), ("c", "c", "c"),
    ("I", "I", "I"),
)

H1_GENERATOR_SIGS = {
    ("a", 1): (0, 1, 1, 0, 1, 1, 0, 1, 1),
    ("a", 2): (1, 0, 1, 1, 0, 1, 1, 0, 1),
    ("a", 3): (1, 1, 0, 1, 1, 0, 1, 1, 0),
    ("b", 1): (0, 1, 1, 0, 1, 1, 1, 1, 1),
    ("b", 2): (1, 0, 1, 1, 0, 1, 1, 1, 1),
    ("b", 3): (1, 1, 0, 1, 1, 0, 1, 1, 1),
    ("c", 1): (0, 1, 1, 1, 1, 1, 1, 1, 1),
    ("c", 2): (1, 0, 1, 1, 1, 1, 1, 1, 1),
    ("c", 3): (1, 1, 0, 1, 1, 1, 1, 1, 1),
    ("I", 0): (1, 1, 1, 1, 1, 1, 1, 1, 1),
}


def _product_sig(factors, gens, width):
    bits = [1] * width
    for arm, letter in enumerate(factors, start=1):
        sig = gens[("I", 0)] if letter == "I" else gens[(letter, arm)]
        bits = [b & s for b, s in zip(bits, sig)]
    return tuple(bits)


H0_TABLE = tuple((factors, _product_sig(factors, H0_GENERATOR_SIGS, 6))
                 for factors in H0_ROWS)
H1_TABLE = tuple((factors, _product_sig(factors, H1_GENERATOR_SIGS, 9))
                 for factors in H1_ROWS)
