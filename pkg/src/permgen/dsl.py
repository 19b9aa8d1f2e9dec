"""Line-oriented constraint text format.

One clause per line, e.g.::

    pos 1 in {a,c}      # position 1 must be a or c
    pos 3 not in {d,e}  # position 3 must not be d or e

Blank lines and lines starting with '#' are ignored; a comment may follow a
clause. Spaces and tabs may surround any token (and must separate the
"pos"/"not"/"in" words from their neighbours). Set elements are single
characters; '{', '}', ',', '#', '\\' and whitespace are written with a
backslash escape, e.g. {\\,} for a literal comma. Input accepts CRLF line
endings; output never emits them.
"""

from __future__ import annotations

from .constraints import ConstraintSet, Kind, PositionConstraint

_WS = " \t"
_NEEDS_ESCAPE = "{},#\\"


class ParseError(ValueError):
    """Grammar violation, located by 1-indexed line and column."""

    def __init__(self, line: int, column: int, message: str, snippet: str):
        self.line = line
        self.column = column
        self.message = message
        self.snippet = snippet
        super().__init__(f"line {line}, column {column}: {message}")


def parse_constraints(text: str, n: int) -> ConstraintSet:
    """Parse clause text into a ConstraintSet for a string of length n.

    Stops at the first grammar violation. Conflict and bounds checking is
    validate()'s job, not the parser's; duplicate symbols inside one set
    are deduplicated.
    """
    constraints = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        parsed = _parse_line(line, lineno)
        if parsed is not None:
            constraints.append(parsed)
    return ConstraintSet(tuple(constraints), n)


def render_constraints(cs: ConstraintSet) -> str:
    """Canonical clause text for a ConstraintSet.

    One clause per position per kind, positions ascending, symbols
    ascending, single spaces. parse_constraints() on the result reproduces
    the set up to symbol ordering and same-kind unioning.
    """
    merged: dict[tuple[int, Kind], set[str]] = {}
    for c in cs.constraints:
        merged.setdefault((c.position, c.kind), set()).update(c.symbols)
    lines = []
    for pos, kind in sorted(merged, key=lambda pk: (pk[0], pk[1] is Kind.FORBIDDEN)):
        body = ",".join(_escape(ch) for ch in sorted(merged[pos, kind]))
        word = "in" if kind is Kind.ALLOWED else "not in"
        lines.append(f"pos {pos} {word} {{{body}}}")
    return "\n".join(lines)


def _escape(ch: str) -> str:
    if ch in _NEEDS_ESCAPE or ch.isspace():
        return "\\" + ch
    return ch


def _skip_ws(line: str, i: int) -> int:
    while i < len(line) and line[i] in _WS:
        i += 1
    return i


def _parse_line(line: str, lineno: int) -> PositionConstraint | None:
    i = _skip_ws(line, 0)
    if i == len(line) or line[i] == "#":
        return None

    if not line.startswith("pos", i):
        raise ParseError(lineno, i + 1, "expected 'pos'", line)
    i = _require_ws(line, lineno, i + 3, "'pos'")

    start = i
    while i < len(line) and "0" <= line[i] <= "9":
        i += 1
    if i == start:
        raise ParseError(lineno, start + 1, "expected a position number", line)
    position = int(line[start:i])
    if position < 1:
        raise ParseError(lineno, start + 1, "position must be at least 1", line)
    i = _require_ws(line, lineno, i, "the position")

    kind = Kind.ALLOWED
    if line.startswith("not", i):
        kind = Kind.FORBIDDEN
        i = _require_ws(line, lineno, i + 3, "'not'")
    if not line.startswith("in", i):
        raise ParseError(lineno, i + 1, "expected 'in' or 'not in'", line)
    i = _skip_ws(line, i + 2)

    if i == len(line) or line[i] != "{":
        raise ParseError(lineno, i + 1, "expected '{'", line)
    i += 1
    symbols: set[str] = set()
    while True:
        i = _skip_ws(line, i)
        sym, i = _read_symbol(line, lineno, i)
        symbols.add(sym)
        i = _skip_ws(line, i)
        if i < len(line) and line[i] == ",":
            i += 1
            continue
        if i < len(line) and line[i] == "}":
            i += 1
            break
        raise ParseError(lineno, i + 1, "expected ',' or '}'", line)

    i = _skip_ws(line, i)
    if i < len(line) and line[i] != "#":
        raise ParseError(lineno, i + 1, "unexpected text after clause", line)
    return PositionConstraint(position, kind, frozenset(symbols))


def _require_ws(line: str, lineno: int, i: int, after: str) -> int:
    j = _skip_ws(line, i)
    if j == i:
        raise ParseError(lineno, i + 1, f"expected whitespace after {after}", line)
    return j


def _read_symbol(line: str, lineno: int, i: int) -> tuple[str, int]:
    if i == len(line):
        raise ParseError(lineno, i + 1, "unterminated set", line)
    ch = line[i]
    if ch == "\\":
        if i + 1 == len(line):
            raise ParseError(lineno, i + 1, "incomplete escape", line)
        return line[i + 1], i + 2
    if ch == "}":
        raise ParseError(lineno, i + 1, "expected a symbol before '}'", line)
    if ch in _NEEDS_ESCAPE or ch.isspace():
        raise ParseError(lineno, i + 1, f"character {ch!r} must be escaped inside a set", line)
    return ch, i + 1
