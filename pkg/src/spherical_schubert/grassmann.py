"""Grassmannian words, Levi blocks, stability, reduction, monomial counts.

A Schubert variety in the Grassmannian of d-planes in C^N is indexed by a
strictly increasing d-tuple from {1..N}, ordered componentwise (Bruhat
order).  A Levi subgroup is recorded by its block composition of N; the
quadruple bundling word, dimensions, and blocks is the unit the
classification operates on.  Words are plain tuples; the ambient N travels
alongside as an explicit argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import accumulate, combinations

__all__ = [
    "Quadruple",
    "bruhat_interval",
    "bruhat_leq",
    "count_standard_monomials",
    "h_vector",
    "is_reduced",
    "is_stable",
    "maximal_levi",
    "missing_boundary_roots",
    "reduce",
    "stabilizer_roots",
]

Word = tuple[int, ...]
Blocks = tuple[int, ...]


def _check_word(w: Word, n: int) -> None:
    if not w:
        raise ValueError("word must be nonempty")
    if any(a >= b for a, b in zip(w, w[1:])):
        raise ValueError(f"word {w} is not strictly increasing")
    if w[0] < 1 or w[-1] > n:
        raise ValueError(f"word {w} does not fit in 1..{n}")


def bruhat_leq(tau: Word, w: Word) -> bool:
    """Componentwise comparison of two words of the same length.

    >>> bruhat_leq((1, 2, 9), (2, 7, 9))
    True
    >>> bruhat_leq((7, 8, 9), (2, 7, 9))
    False
    """
    if len(tau) != len(w):
        raise ValueError("words must have the same length")
    return all(a <= b for a, b in zip(tau, w))


def bruhat_interval(w: Word, n: int) -> list[Word]:
    """All words tau <= w, in lexicographic order."""
    _check_word(w, n)
    out: list[Word] = []

    def grow(prefix: list[int], pos: int) -> None:
        if pos == len(w):
            out.append(tuple(prefix))
            return
        lo = prefix[-1] + 1 if prefix else 1
        for v in range(lo, w[pos] + 1):
            prefix.append(v)
            grow(prefix, pos + 1)
            prefix.pop()

    grow([], 0)
    return out


def stabilizer_roots(w: Word, n: int) -> set[int]:
    """Simple-root indices cut out by the largest standard parabolic
    stabilizing the Schubert variety of w.

    An interior entry contributes when the next entry is not its successor;
    the last entry contributes unless it equals n.
    """
    _check_word(w, n)
    roots = {a for a, b in zip(w, w[1:]) if a + 1 != b}
    if w[-1] < n:
        roots.add(w[-1])
    return roots


def _boundaries(blocks: Blocks) -> tuple[int, ...]:
    return tuple(accumulate(blocks))


@dataclass(frozen=True)
class Quadruple:
    """A Schubert word with its ambient Grassmannian and a Levi action."""

    word: Word
    n: int
    blocks: Blocks

    def __post_init__(self) -> None:
        _check_word(self.word, self.n)
        if len(self.word) >= self.n:
            raise ValueError("need d < N")
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ValueError("block sizes must be positive")
        if sum(self.blocks) != self.n:
            raise ValueError(
                f"blocks {self.blocks} do not sum to {self.n}"
            )

    @property
    def d(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        w = ",".join(map(str, self.word))
        bl = ",".join(map(str, self.blocks))
        return f"w=({w}) in G({self.d},{self.n}) blocks ({bl})"


def missing_boundary_roots(q: Quadruple) -> set[int]:
    """Stabilizer roots not among the block boundaries; empty iff stable."""
    proper = set(_boundaries(q.blocks)[:-1])
    return stabilizer_roots(q.word, q.n) - proper


def is_stable(q: Quadruple) -> bool:
    """Does the Levi of q act on the Schubert variety of q.word?"""
    return not missing_boundary_roots(q)


def maximal_levi(w: Word, n: int) -> Blocks:
    """Block composition of the largest Levi acting on the variety of w.

    Its proper boundaries are exactly stabilizer_roots(w, n), making it the
    coarsest stable choice; every stable composition refines it.
    """
    cuts = sorted(stabilizer_roots(w, n)) + [n]
    return tuple(b - a for a, b in zip([0] + cuts, cuts))


def h_vector(q: Quadruple) -> tuple[int, ...]:
    """Per-block entry counts of the word; sums to d.

    >>> h_vector(Quadruple((4, 7, 8, 9), 9, (4, 3, 2)))
    (1, 1, 2)
    """
    bounds = _boundaries(q.blocks)
    h = [0] * len(q.blocks)
    k = 0
    for entry in q.word:
        while entry > bounds[k]:
            k += 1
        h[k] += 1
    return tuple(h)


def is_reduced(q: Quadruple) -> bool:
    """True iff the word starts past 1 and ends at n."""
    return q.word[0] != 1 and q.word[-1] == q.n


def reduce(q: Quadruple) -> Quadruple:
    """Strip the forced prefix and the unreachable tail of a stable quadruple.

    With p the longest prefix fixed pointwise, the word restricts to the
    window {p+1, .., last entry} and shifts down by p; the blocks restrict
    to the same window.  Stability puts block boundaries at both window
    edges, so the restricted composition is well defined.  The result is
    reduced, and reduced input comes back unchanged.
    """
    missing = missing_boundary_roots(q)
    if missing:
        raise ValueError(
            f"not stable: boundaries miss roots {sorted(missing)}"
        )
    p = 0
    while p < q.d and q.word[p] == p + 1:
        p += 1
    if p == q.d:
        raise ValueError("identity word has no reduction")
    top = q.word[-1]
    word = tuple(e - p for e in q.word[p:])
    cuts = [j - p for j in _boundaries(q.blocks) if p < j <= top]
    blocks = tuple(b - a for a, b in zip([0] + cuts, cuts))
    return Quadruple(word, top - p, blocks)


@cache
def _interval_chain_counts(w: Word, n: int, r: int) -> tuple[int, ...]:
    """counts[i] = weakly decreasing length-r chains topped by interval[i]."""
    interval = bruhat_interval(w, n)
    below = [
        [j for j, tau in enumerate(interval) if bruhat_leq(tau, sigma)]
        for sigma in interval
    ]
    counts = [1] * len(interval)
    for _ in range(r - 1):
        counts = [sum(counts[j] for j in below[i]) for i in range(len(interval))]
    return tuple(counts)


def count_standard_monomials(w: Word, n: int, r: int) -> int:
    """Dimension of the degree-r piece of the coordinate ring of the
    Schubert variety of w.

    Counts weakly decreasing r-chains in the Bruhat interval below w by
    dynamic programming; r = 0 gives 1 for the empty monomial.
    """
    _check_word(w, n)
    if r < 0:
        raise ValueError("degree must be nonnegative")
    if r == 0:
        return 1
    return sum(_interval_chain_counts(w, n, r))
