"""Plain-text vertex lists.

One vertex per line, coordinates as whitespace-separated base-10 integers.
Lines whose first non-whitespace character is '#' are comments.  A line with
no tokens at all is a zero-length vertex row, which is how the one polytope
living in R^0 is written; it also means blank separator lines are rejected
(as a row-length mismatch) rather than silently skipped, keeping parse and
serialize exact inverses byte for byte.
"""

from __future__ import annotations

import re

from .polytope import Polytope

__all__ = ["PolytopeParseError", "parse", "serialize"]

_INT_RE = re.compile(r"^[+-]?\d+$")


class PolytopeParseError(ValueError):
    """Malformed vertex file; str(err) names the offending line."""


def parse(text: str) -> Polytope:
    rows: list[tuple[int, ...]] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        tokens = stripped.split()
        for tok in tokens:
            # int() would also swallow "1_0"; insist on plain digit runs
            if not _INT_RE.match(tok):
                raise PolytopeParseError(f"line {lineno}: {tok!r} is not an integer")
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise PolytopeParseError(
                f"line {lineno}: expected {width} coordinates, got {len(tokens)}")
        rows.append(tuple(int(tok) for tok in tokens))
    if not rows:
        raise PolytopeParseError("no vertex rows in input")
    return Polytope.from_vertices(rows)


def serialize(p: Polytope) -> str:
    return "".join(" ".join(str(x) for x in v) + "\n" for v in p.vertices)
