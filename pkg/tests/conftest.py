"""Shared reference data and the random instance builder."""

import random

from permgen import ConstraintSet, allow, forbid

# The golden instance: "abacb" with position 1 limited to a or b and
# position 3 barring c. The expected stream is fixed byte for byte.
GOLDEN_STRING = "abacb"
GOLDEN_CLAUSES = ["pos 1 in {a,b}", "pos 3 not in {c}"]
GOLDEN_MATRIX_ROWS = ("ab", "abc", "ab", "abc", "abc")
GOLDEN_OUTPUTS = [
    "aabbc", "aabcb", "ababc", "abacb", "abbac", "abbca",
    "acabb", "acbab", "acbba", "baabc", "baacb", "babac",
    "babca", "bbaac", "bbaca", "bcaab", "bcaba", "bcbaa",
]

INPUT_POOL = "abcdefgh"
FOREIGN_POOL = "xyz"  # never drawn into inputs, exercises empty rows


def random_instance(rng: random.Random, max_n: int = 8):
    """Random (string, ConstraintSet) pair without allow/forbid conflicts.

    Multiplicities, constraint density, and symbol sets are all randomized.
    Constraint symbols may fall outside the string's alphabet, so some
    instances are unsatisfiable on purpose.
    """
    n = rng.randint(0, max_n)
    if n == 0:
        s = ""
    elif rng.random() < 0.15:
        s = "".join(rng.sample(INPUT_POOL, n))  # all distinct
    else:
        live = rng.sample(INPUT_POOL, rng.randint(1, min(n, len(INPUT_POOL))))
        s = "".join(rng.choice(live) for _ in range(n))

    clause_pool = INPUT_POOL + FOREIGN_POOL
    clauses = []
    for pos in range(1, n + 1):
        roll = rng.random()
        if roll < 0.45:
            continue
        make = allow if roll < 0.75 else forbid
        repeats = 1 if rng.random() < 0.85 else 2  # same-kind repeats union
        for _ in range(repeats):
            clauses.append(make(pos, rng.sample(clause_pool, rng.randint(1, 3))))
    return s, ConstraintSet(tuple(clauses), n)
