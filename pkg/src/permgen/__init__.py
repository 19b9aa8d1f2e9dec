"""Constraint-pruned enumeration of multiset string permutations.

Typical use::

    from permgen import alphabet_of, allow, forbid, ConstraintSet
    from permgen import validate, normalize, generate

    s = "abacb"
    cs = ConstraintSet((allow(1, "ab"), forbid(3, "c")), n=len(s))
    validate(cs)
    pm = normalize(cs, alphabet_of(s))
    for perm in generate(s, pm):
        print(perm)
"""

from .constraints import (
    ConstraintSet,
    InvalidConstraintsError,
    Kind,
    PermittedMatrix,
    PositionConstraint,
    allow,
    alphabet_of,
    forbid,
    normalize,
    validate,
)
from .dsl import ParseError, parse_constraints, render_constraints
from .generator import GenStats, PermutationStream, count, generate
from .oracle import OracleResult, distinct_permutations, filter_permutations

__version__ = "0.1.0"

__all__ = [
    "ConstraintSet",
    "GenStats",
    "InvalidConstraintsError",
    "Kind",
    "OracleResult",
    "ParseError",
    "PermittedMatrix",
    "PermutationStream",
    "PositionConstraint",
    "allow",
    "alphabet_of",
    "count",
    "distinct_permutations",
    "filter_permutations",
    "forbid",
    "generate",
    "normalize",
    "parse_constraints",
    "render_constraints",
    "validate",
]
