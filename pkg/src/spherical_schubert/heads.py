"""Heads of a stable reduced quadruple and their block data.

A degree-1 head is a word below w whose intersection with every Levi block
is a top segment of that block; it is encoded by the vector m of segment
lengths, written Theta(m).  Standard degree-r heads are weakly decreasing
chains of degree-1 heads.  Each standard head yields a column tableau, and
slicing that tableau along the blocks produces one basic skew shape per
block; those shapes drive the coordinate-ring decomposition.
"""

from __future__ import annotations

from itertools import accumulate
from math import prod

from .grassmann import Quadruple, h_vector
from .lr import Tableau, ssyt_count
from .shapes import SkewShape, cells_to_shape

__all__ = [
    "HeadVector",
    "StandardHead",
    "block_shapes",
    "enumerate_heads",
    "enumerate_standard_heads",
    "head_leq",
    "head_module_dim",
    "head_tableau",
    "is_head",
    "theta_word",
]

HeadVector = tuple[int, ...]
StandardHead = tuple[HeadVector, ...]
Blocks = tuple[int, ...]


def theta_word(m: HeadVector, blocks: Blocks) -> tuple[int, ...]:
    """The word Theta(m): the top m_k values of block k, concatenated.

    No validation beyond the vector length: for m outside the head range
    the result can repeat values or leave {1..N}, exactly as the defining
    formula does.

    >>> theta_word((2, 1, 0), (2, 5, 2))
    (1, 2, 7)
    >>> theta_word((3, 2, 3), (2, 5, 2))
    (0, 1, 2, 6, 7, 7, 8, 9)
    """
    if len(m) != len(blocks):
        raise ValueError("vector and blocks must have the same length")
    out: list[int] = []
    for mk, j in zip(m, accumulate(blocks)):
        out.extend(range(j - mk + 1, j + 1))
    return tuple(out)


def is_head(m: HeadVector, q: Quadruple) -> bool:
    """Do the segment lengths m encode a degree-1 head of q?

    Requires the full budget d, per-block room, and prefix sums dominating
    those of the h-vector.
    """
    if len(m) != len(q.blocks):
        raise ValueError("vector and blocks must have the same length")
    if any(x < 0 for x in m):
        raise ValueError("segment lengths must be nonnegative")
    if sum(m) != q.d or any(mk > nk for mk, nk in zip(m, q.blocks)):
        return False
    hpre = accumulate(h_vector(q))
    return all(pm >= ph for pm, ph in zip(accumulate(m), hpre))


def enumerate_heads(q: Quadruple) -> list[HeadVector]:
    """All degree-1 head vectors of q, lexicographically.

    Nonempty for stable reduced q: the h-vector itself always qualifies.
    For w=(2,7,9) with blocks (2,5,2) this returns four vectors, with
    (2,0,1) among them; the README explains why four is the right count.
    """
    blocks, d = q.blocks, q.d
    hpre = list(accumulate(h_vector(q)))
    room_after = list(accumulate(reversed(blocks)))[::-1] + [0]
    out: list[HeadVector] = []

    def grow(prefix: list[int], total: int) -> None:
        k = len(prefix)
        if k == len(blocks):
            out.append(tuple(prefix))
            return
        lo = max(0, hpre[k] - total, d - total - room_after[k + 1])
        hi = min(blocks[k], d - total)
        for mk in range(lo, hi + 1):
            prefix.append(mk)
            grow(prefix, total + mk)
            prefix.pop()

    grow([], 0)
    return out


def head_leq(m: HeadVector, mp: HeadVector) -> bool:
    """Theta(m) <= Theta(mp) in Bruhat order: prefix sums of m dominate.

    >>> head_leq((2, 1, 0), (1, 1, 1))
    True
    >>> head_leq((1, 1, 1), (2, 1, 0))
    False
    """
    if len(m) != len(mp):
        raise ValueError("vectors must have the same length")
    return all(a >= b for a, b in zip(accumulate(m), accumulate(mp)))


def enumerate_standard_heads(q: Quadruple, r: int) -> list[StandardHead]:
    """All weakly decreasing r-chains of degree-1 heads, lexicographically.

    Depth-first over the head poset; r = 0 gives the single empty chain.
    """
    if r < 0:
        raise ValueError("degree must be nonnegative")
    if r == 0:
        return [()]
    heads = enumerate_heads(q)
    out: list[StandardHead] = []

    def extend(chain: list[HeadVector]) -> None:
        if len(chain) == r:
            out.append(tuple(chain))
            return
        for m in heads:
            if not chain or head_leq(m, chain[-1]):
                chain.append(m)
                extend(chain)
                chain.pop()

    extend([])
    return out


def head_tableau(s: StandardHead, blocks: Blocks) -> Tableau:
    """Rectangular tableau with the chain's words as columns, last first.

    Column c of the (r^d)-shaped result reads the word of the (r-c+1)-th
    chain entry top to bottom; for standard heads the result is
    semistandard.
    """
    if not s:
        return Tableau(SkewShape(()), ())
    words = [theta_word(m, blocks) for m in reversed(s)]
    d = len(words[0])
    if any(len(w) != d for w in words):
        raise ValueError("chain entries must have equal length")
    rows = tuple(tuple(w[i] for w in words) for i in range(d))
    return Tableau(SkewShape((len(s),) * d), rows)


def block_shapes(s: StandardHead, blocks: Blocks) -> list[SkewShape]:
    """Basic skew shape cut out of the head tableau by each block's values.

    Deleting the cells whose value lies outside block k and compressing
    away empty rows and columns leaves the k-th shape; blocks hit by no
    cell yield the empty shape.
    """
    t = head_tableau(s, blocks)
    bounds = (0,) + tuple(accumulate(blocks))
    shapes = []
    for lo, hi in zip(bounds, bounds[1:]):
        cells = {
            (i, c)
            for i, row in enumerate(t.rows, start=1)
            for c, v in enumerate(row, start=1)
            if lo < v <= hi
        }
        shapes.append(cells_to_shape(cells))
    return shapes


def head_module_dim(s: StandardHead, blocks: Blocks) -> int:
    """Dimension of the tensor product of the per-block skew Weyl modules."""
    return prod(
        ssyt_count(shape, nk)
        for shape, nk in zip(block_shapes(s, blocks), blocks)
    )
