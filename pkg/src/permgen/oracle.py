"""Brute-force reference: enumerate every distinct permutation, then filter.

Deliberately shares no enumeration code with the generator module; the two
paths exist to check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .constraints import PermittedMatrix


@dataclass(frozen=True)
class OracleResult:
    """Filtered outputs plus the distinct-permutation count before filtering."""

    outputs: tuple[str, ...]
    total_distinct: int


def distinct_permutations(s: str) -> list[str]:
    """Every distinct rearrangement of s exactly once, ascending.

    Steps from the sorted string with the classic next-lexicographic
    rearrangement (rightmost ascent, swap with its ceiling, reverse the
    tail), which visits each distinct rearrangement once by construction.
    """
    chars = sorted(s)
    out = ["".join(chars)]
    while _advance(chars):
        out.append("".join(chars))
    return out


def _advance(chars: list[str]) -> bool:
    i = len(chars) - 2
    while i >= 0 and chars[i] >= chars[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(chars) - 1
    while chars[j] <= chars[i]:
        j -= 1
    chars[i], chars[j] = chars[j], chars[i]
    chars[i + 1:] = reversed(chars[i + 1:])
    return True


def filter_permutations(perms: Iterable[str], permitted: PermittedMatrix) -> OracleResult:
    """Keep the strings whose every position is admitted by the matrix.

    Order-preserving, so ascending distinct input yields ascending distinct
    output. Strings whose length differs from the row count are a usage
    error.
    """
    rows = permitted.row_sets()
    n = len(rows)
    items = list(perms)
    for t in items:
        if len(t) != n:
            raise ValueError(f"permutation {t!r} has length {len(t)}, expected {n}")
    kept = tuple(t for t in items if all(t[i] in rows[i] for i in range(n)))
    return OracleResult(kept, len(items))
