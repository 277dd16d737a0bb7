"""Generator-matrix text format.

One row per line; digits only, with optional whitespace between blocks so
matrices can be pasted exactly as printed. ``#`` starts a comment that runs
to the end of the line. Binary matrices use '0'/'1', Z4 matrices '0'-'3'.
"""

from __future__ import annotations

from .errors import ParseError


def _parse_rows(text: str, alphabet: str) -> list[list[int]]:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        digits = []
        for col, ch in enumerate(line, start=1):
            if ch.isspace():
                continue
            if ch not in alphabet:
                raise ParseError(f"unexpected character {ch!r}", lineno, col)
            digits.append(int(ch))
        if not digits:
            continue
        if width is None:
            width = len(digits)
        elif len(digits) != width:
            raise ParseError(
                f"row has {len(digits)} entries, expected {width}", lineno, len(line)
            )
        rows.append(digits)
    if not rows:
        raise ParseError("no matrix rows found", 1, 1)
    return rows


def parse_binary_matrix(text: str) -> tuple[int, list[int]]:
    """Parse a 0/1 matrix; returns (length, rows as little-endian bitmasks)."""
    rows = _parse_rows(text, "01")
    n = len(rows[0])
    masks = [sum(bit << i for i, bit in enumerate(row)) for row in rows]
    return n, masks


def parse_z4_matrix(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Parse a matrix over Z4; returns (length, rows as digit tuples)."""
    rows = _parse_rows(text, "0123")
    return len(rows[0]), [tuple(row) for row in rows]
