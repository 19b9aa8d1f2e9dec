"""Constraint types and their normalization into a single permitted matrix.

Users state constraints as allow/forbid clauses per 1-indexed position.
Before generation they are collapsed into one structure, the permitted
matrix: for each position, the set of symbols that may appear there.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable


class Kind(enum.Enum):
    """Whether a clause allows or forbids its symbols at a position."""

    ALLOWED = "allowed"
    FORBIDDEN = "forbidden"


def alphabet_of(s: str) -> str:
    """Distinct symbols of s, sorted ascending by code point."""
    return "".join(sorted(set(s)))


@dataclass(frozen=True)
class PositionConstraint:
    """One allow or forbid clause for a single 1-indexed position."""

    position: int
    kind: Kind
    symbols: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "symbols", frozenset(self.symbols))
        if not self.symbols:
            raise ValueError("constraint symbol set must be nonempty")
        bad = sorted(c for c in self.symbols if len(c) != 1)
        if bad:
            raise ValueError(f"symbols must be single characters, got {bad!r}")


def allow(position: int, symbols: Iterable[str]) -> PositionConstraint:
    """The given position may hold only these symbols."""
    return PositionConstraint(position, Kind.ALLOWED, frozenset(symbols))


def forbid(position: int, symbols: Iterable[str]) -> PositionConstraint:
    """The given position may hold anything except these symbols."""
    return PositionConstraint(position, Kind.FORBIDDEN, frozenset(symbols))


@dataclass(frozen=True)
class ConstraintSet:
    """All clauses for one input string of length n.

    May hold not-yet-validated clauses; validate() rejects positions that
    both allow and forbid, and positions outside [1, n]. Several clauses of
    the same kind on one position are fine (their sets union on normalize).
    """

    constraints: tuple[PositionConstraint, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.n < 0:
            raise ValueError("n must be nonnegative")


class InvalidConstraintsError(ValueError):
    """A position carries both kinds of clause, or lies outside [1, n]."""

    def __init__(self, conflicts: tuple[int, ...], out_of_bounds: tuple[int, ...], n: int):
        self.conflicts = conflicts
        self.out_of_bounds = out_of_bounds
        self.n = n
        parts = []
        if conflicts:
            where = ", ".join(map(str, conflicts))
            parts.append(
                f"position(s) {where} both allow and forbid symbols; a position "
                "may allow certain symbols or forbid certain symbols, not both"
            )
        if out_of_bounds:
            where = ", ".join(map(str, out_of_bounds))
            parts.append(f"position(s) {where} outside the valid range 1..{n}")
        super().__init__("; ".join(parts))


def validate(cs: ConstraintSet) -> None:
    """Raise InvalidConstraintsError listing every offending position."""
    kinds: dict[int, set[Kind]] = {}
    bounds: set[int] = set()
    for c in cs.constraints:
        if not 1 <= c.position <= cs.n:
            bounds.add(c.position)
        kinds.setdefault(c.position, set()).add(c.kind)
    conflicts = tuple(sorted(p for p, ks in kinds.items() if len(ks) == 2))
    if conflicts or bounds:
        raise InvalidConstraintsError(conflicts, tuple(sorted(bounds)), cs.n)


@dataclass(frozen=True)
class PermittedMatrix:
    """Per-position permitted symbols.

    rows[i - 1] holds the symbols permitted at position i as a string of
    distinct characters in ascending order. An empty row is legal and makes
    the instance unsatisfiable.
    """

    rows: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for i, row in enumerate(self.rows, start=1):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i} must be strictly ascending, got {row!r}")

    def row_sets(self) -> tuple[frozenset[str], ...]:
        """The rows as sets, for membership tests."""
        return tuple(frozenset(row) for row in self.rows)


def normalize(cs: ConstraintSet, alphabet: str) -> PermittedMatrix:
    """Collapse a validated ConstraintSet into a PermittedMatrix.

    Row i is the union of the allowed sets at position i, intersected with
    the alphabet, when any allow clause exists there; otherwise the alphabet
    minus the union of the forbidden sets, when any forbid clause exists;
    otherwise the whole alphabet. Allowed symbols outside the alphabet are
    intersected away rather than rejected, so a row may come out empty.
    """
    alpha = set(alphabet)
    allowed: dict[int, set[str]] = {}
    forbidden: dict[int, set[str]] = {}
    for c in cs.constraints:
        bucket = allowed if c.kind is Kind.ALLOWED else forbidden
        bucket.setdefault(c.position, set()).update(c.symbols)

    rows = []
    for pos in range(1, cs.n + 1):
        if pos in allowed:
            row = allowed[pos] & alpha
        elif pos in forbidden:
            row = alpha - forbidden[pos]
        else:
            row = alpha
        rows.append("".join(sorted(row)))
    return PermittedMatrix(tuple(rows))
