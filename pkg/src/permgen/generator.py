"""Constraint-pruned streaming of multiset permutations.

The walk fills positions left to right. At position p it branches once per
distinct remaining symbol admitted by row p of the permitted matrix, in the
multiset's symbol order, so repeated input symbols never produce repeated
outputs and no prefix violating a constraint is ever extended. When the
input is sorted first, branch order is ascending and the whole stream is
strictly increasing lexicographic.

A level is the 1-indexed position being filled; reaching level n + 1 means
the prefix is complete and is emitted. Remaining symbols are kept as a
counted multiset rather than a shrinking sequence, which is what makes the
duplicate skip a single decrement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .constraints import PermittedMatrix


@dataclass(frozen=True)
class GenStats:
    """Counter snapshot for one stream.

    calls counts every node visit, including the root and the base-case
    visits that emit an output. dead_ends counts visits to nodes at level
    <= n whose candidate set is empty. partial is True when the snapshot
    was taken before the stream was exhausted.
    """

    calls: int
    emitted: int
    dead_ends: int
    partial: bool


class PermutationStream:
    """Lazy, single-consumer iterator over the admitted permutations.

    Nothing is computed until the first item is requested. The stream may
    be handed to another thread between next() calls but must not be
    consumed concurrently.
    """

    def __init__(self, s: str, permitted: PermittedMatrix, sort_input: bool = True):
        n = len(s)
        if len(permitted.rows) != n:
            raise ValueError(
                f"permitted matrix has {len(permitted.rows)} rows; "
                f"expected {n} for input {s!r}"
            )
        order = sorted(s) if sort_input else s
        # counted multiset; symbol order fixes the branch order
        symbols: list[str] = []
        counts: list[int] = []
        index: dict[str, int] = {}
        for ch in order:
            i = index.get(ch)
            if i is None:
                index[ch] = len(symbols)
                symbols.append(ch)
                counts.append(1)
            else:
                counts[i] += 1
        self._n = n
        self._symbols = symbols
        self._counts = counts
        self._rows = permitted.row_sets()
        self._calls = 0
        self._emitted = 0
        self._dead_ends = 0
        self._exhausted = False
        self._walk = self._run()

    def __iter__(self) -> "PermutationStream":
        return self

    def __next__(self) -> str:
        try:
            return next(self._walk)
        except StopIteration:
            self._exhausted = True
            raise

    def stats(self) -> GenStats:
        """Current counters; partial unless the stream has been exhausted."""
        return GenStats(self._calls, self._emitted, self._dead_ends,
                        partial=not self._exhausted)

    def _run(self) -> Iterator[str]:
        self._calls += 1  # root visit
        n = self._n
        if n == 0:
            self._emitted += 1
            yield ""
            return

        symbols = self._symbols
        counts = self._counts
        rows = self._rows
        k = len(symbols)
        prefix: list[str] = []
        # Explicit stack, one frame per node above the base case, so depth
        # is bounded by memory rather than the interpreter recursion limit.
        cursor = [0]      # next multiset index to try at each depth
        entered = [-1]    # multiset index consumed to enter each node
        expanded = [False]

        while cursor:
            depth = len(cursor) - 1
            row = rows[depth]
            i = cursor[depth]
            while i < k and (counts[i] == 0 or symbols[i] not in row):
                i += 1
            if i < k:
                cursor[depth] = i + 1
                expanded[depth] = True
                counts[i] -= 1
                prefix.append(symbols[i])
                self._calls += 1
                if depth + 1 == n:
                    self._emitted += 1
                    yield "".join(prefix)
                    counts[i] += 1
                    prefix.pop()
                else:
                    cursor.append(0)
                    entered.append(i)
                    expanded.append(False)
            else:
                if not expanded[depth]:
                    self._dead_ends += 1
                cursor.pop()
                expanded.pop()
                via = entered.pop()
                if via >= 0:
                    counts[via] += 1
                    prefix.pop()


def generate(s: str, permitted: PermittedMatrix, sort_input: bool = True) -> PermutationStream:
    """Stream the permutations of s admitted by the permitted matrix.

    With sort_input (the default) the input is sorted ascending first and
    the output is strictly increasing lexicographic. Without it, branches
    follow the first-occurrence order of the input's distinct symbols.
    """
    return PermutationStream(s, permitted, sort_input)


def count(s: str, permitted: PermittedMatrix) -> int:
    """How many permutations generate() yields, without keeping them."""
    total = 0
    for _ in generate(s, permitted):
        total += 1
    return total
