"""Partitions and skew diagrams.

A partition is a weakly decreasing tuple of positive integers; ``()`` is the
zero partition.  The Young diagram of ``lam`` has ``lam[i]`` cells in row
``i + 1``, rows growing downward.  A skew diagram ``outer/inner`` keeps the
cells of ``outer`` not in ``inner``; cell coordinates are 1-based
``(row, col)`` pairs.

Partitions are always stored with trailing zeros stripped.  The textual
syntax is comma-separated parts (``"4,2,2,1"``), with ``"-"`` or ``""`` for
the zero partition and optional exponent shorthand (``"2^3,1"``) accepted on
input only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Partition",
    "SkewShape",
    "basic_form",
    "cells",
    "cells_to_shape",
    "complement",
    "conjugate",
    "contains",
    "format_partition",
    "format_skew",
    "parse_partition",
    "parse_skew",
    "rotate_pi",
    "shape_class",
    "shortness",
]

Partition = tuple[int, ...]


def is_partition(parts: tuple[int, ...]) -> bool:
    """True iff parts is weakly decreasing with all entries positive."""
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def _strip(parts: tuple[int, ...]) -> Partition:
    end = len(parts)
    while end > 0 and parts[end - 1] == 0:
        end -= 1
    return tuple(parts[:end])


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff mu fits inside lam, i.e. mu_i <= lam_i for every row."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self) -> None:
        outer = _strip(tuple(self.outer))
        inner = _strip(tuple(self.inner))
        if not is_partition(outer) or not is_partition(inner):
            raise ValueError(f"not a partition pair: {outer!r}, {inner!r}")
        if not contains(outer, inner):
            raise ValueError(f"inner shape {inner!r} not contained in {outer!r}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        """Number of cells."""
        return sum(self.outer) - sum(self.inner)

    def __str__(self) -> str:
        return format_skew(self)


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram.

    >>> conjugate((4, 2, 2, 1))
    (4, 3, 1, 1)
    """
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def complement(lam: Partition, m: int, n: int) -> Partition:
    """Complement of lam inside the m x n box, read upside down.

    Pads lam with zeros to n rows and returns (m - lam_n, ..., m - lam_1),
    trailing zeros stripped.  Applying it twice gives lam back.
    """
    if m < 1 or n < 1:
        raise ValueError("box dimensions must be positive")
    if len(lam) > n or (lam and lam[0] > m):
        raise ValueError(f"{lam!r} does not fit in a {m}x{n} box")
    padded = lam + (0,) * (n - len(lam))
    return _strip(tuple(m - p for p in reversed(padded)))


def shortness(lam: Partition, m: int, n: int) -> int:
    """Minimum run length on the boundary path of lam in the m x n box.

    The path runs from the box's SW corner to its NE corner along the edge
    of lam, one unit step at a time; it is encoded bottom-to-top (a run of
    lam_i - lam_{i+1} right-steps before the up-step of row i, then a final
    m - lam_1 right-steps), and the shortest maximal run of equal steps is
    returned.
    """
    if m < 1 or n < 1:
        raise ValueError("box dimensions must be positive")
    if len(lam) > n or (lam and lam[0] > m):
        raise ValueError(f"{lam!r} does not fit in a {m}x{n} box")
    padded = lam + (0,) * (n - len(lam))
    runs: list[int] = []
    up_run = 0
    for i in range(n, 0, -1):
        below = padded[i] if i < n else 0
        rights = padded[i - 1] - below
        if rights:
            if up_run:
                runs.append(up_run)
                up_run = 0
            runs.append(rights)
        up_run += 1
    runs.append(up_run)
    final = m - (lam[0] if lam else 0)
    if final:
        runs.append(final)
    return min(runs)


def cells(shape: SkewShape) -> list[tuple[int, int]]:
    """All cells of the shape as 1-based (row, col) pairs, row-major."""
    inner = shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    return [
        (i + 1, j)
        for i, (lo, hi) in enumerate(zip(inner, shape.outer))
        for j in range(lo + 1, hi + 1)
    ]


def cells_to_shape(cell_set) -> SkewShape:
    """Rebuild the basic skew shape with the given cell pattern.

    Empty rows and columns are discarded and the remaining indices
    compressed.  Raises ValueError if the compressed pattern is not a skew
    diagram (a row not contiguous, or the row intervals not nested the way
    partitions require).
    """
    cell_list = sorted(set(cell_set))
    if not cell_list:
        return SkewShape((), ())
    row_index = {r: i for i, r in enumerate(sorted({r for r, _ in cell_list}))}
    col_index = {c: j for j, c in enumerate(sorted({c for _, c in cell_list}))}
    by_row: list[list[int]] = [[] for _ in row_index]
    for r, c in cell_list:
        by_row[row_index[r]].append(col_index[c] + 1)
    outer = []
    inner = []
    for row in by_row:
        lo, hi = row[0], row[-1]
        if hi - lo + 1 != len(row):
            raise ValueError("cell pattern has a non-contiguous row")
        outer.append(hi)
        inner.append(lo - 1)
    if not (is_partition(tuple(outer)) and is_partition(_strip(tuple(inner)))):
        raise ValueError("cell pattern is not a skew diagram")
    return SkewShape(tuple(outer), _strip(tuple(inner)))


def basic_form(shape: SkewShape) -> SkewShape:
    """Delete all empty rows and columns.  Idempotent.

    >>> basic_form(SkewShape((4, 2, 2, 1), (2, 2)))
    SkewShape(outer=(4, 2, 1), inner=(2,))
    """
    return cells_to_shape(cells(shape))


def rotate_pi(shape: SkewShape) -> SkewShape:
    """Rotate the skew diagram half a turn.

    With m the widest row and n the number of rows of ``outer``, row i of the
    result is the reversed complement of row n + 1 - i.  On basic shapes this
    is an involution; in general repeating it lands on the basic form.
    """
    outer, inner = shape.outer, shape.inner
    if not outer:
        return SkewShape((), ())
    m, n = outer[0], len(outer)
    padded = inner + (0,) * (n - len(inner))
    new_outer = tuple(m - padded[n - i] for i in range(1, n + 1))
    new_inner = tuple(m - outer[n - i] for i in range(1, n + 1))
    return SkewShape(_strip(new_outer), _strip(new_inner))


def shape_class(lam: Partition) -> str:
    """Classify lam as zero, rectangle, hook, fat_hook, or other.

    The most specific label wins: a rectangle is never reported as a
    fat_hook even though every rectangle is one.  A fat hook is any
    partition with at most two distinct part sizes.
    """
    if not lam:
        return "zero"
    distinct = set(lam)
    if len(distinct) == 1:
        return "rectangle"
    if all(p == 1 for p in lam[1:]):
        return "hook"
    if len(distinct) == 2:
        return "fat_hook"
    return "other"


_EXPONENT = re.compile(r"^(\d+)\^(\d+)$")


def parse_partition(text: str) -> Partition:
    """Parse "4,2,2,1" (or "2^3,1"; "-" or "" for the zero partition)."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        m = _EXPONENT.match(token)
        if m:
            parts.extend([int(m.group(1))] * int(m.group(2)))
        elif token.isdigit():
            parts.append(int(token))
        else:
            raise ValueError(f"bad partition entry {token!r} in {text!r}")
    stripped = _strip(tuple(parts))
    if not is_partition(stripped):
        raise ValueError(f"parts not weakly decreasing: {text!r}")
    return stripped


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def parse_skew(text: str) -> SkewShape:
    """Parse "4,2,2,1/2,2"; the "/inner" half may be omitted."""
    outer_text, sep, inner_text = text.partition("/")
    outer = parse_partition(outer_text)
    inner = parse_partition(inner_text) if sep else ()
    return SkewShape(outer, inner)


def format_skew(shape: SkewShape) -> str:
    if not shape.inner:
        return format_partition(shape.outer)
    return f"{format_partition(shape.outer)}/{format_partition(shape.inner)}"
