"""Sphericity classification of Levi-Schubert quadruples.

The coordinate ring of a Schubert variety decomposes over the Levi blocks
degree by degree; the quadruple is spherical exactly when that
decomposition is multiplicity free in every degree.  This module provides
the decomposition itself, a brute-force multiplicity check over bounded
degrees, the closed-form criteria that decide multiplicity-freeness from
the h-vector alone, the resulting classification (general, maximal-Levi,
and toric forms), and an exhaustive sweep that cross-validates all of
them on small Grassmannians.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import accumulate, combinations

from .grassmann import (
    Quadruple,
    _check_word,
    count_standard_monomials,
    h_vector,
    is_reduced,
    maximal_levi,
    missing_boundary_roots,
    reduce,
    stabilizer_roots,
)
from .heads import enumerate_standard_heads
from .lr import _poly_items, ssyt_count
from .shapes import Partition, SkewShape, cells_to_shape

__all__ = [
    "ClassificationResult",
    "Decomposition",
    "SweepReport",
    "brute_force_multfree",
    "check_MC_fast",
    "check_MCC_fast",
    "classify",
    "classify_max_levi",
    "decompose_degree",
    "is_toric",
    "verify_sweep",
]

IrrLabel = tuple[Partition, ...]
Word = tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """Multiset of irreducible labels in one degree of the coordinate ring.

    Labels are b-tuples of partitions, one per block, naming the
    un-dualized highest weights; multiplicities are positive.
    """

    degree: int
    terms: dict[IrrLabel, int]


@dataclass(frozen=True)
class ClassificationResult:
    spherical: bool
    route: str
    reduced: bool = False
    condition: int | None = None
    p_w: int | None = None

    @property
    def verdict(self) -> str:
        return "spherical" if self.spherical else "not_spherical"


def _require_stable_reduced(q: Quadruple) -> None:
    missing = missing_boundary_roots(q)
    if missing:
        raise ValueError(
            f"not stable: boundaries miss roots {sorted(missing)}"
        )
    if not is_reduced(q):
        raise ValueError("quadruple must be reduced")


@cache
def _span_shape(spans: tuple[tuple[int, int], ...]) -> SkewShape:
    cells = {
        (i, c)
        for c, (lo, hi) in enumerate(spans, start=1)
        for i in range(lo, hi + 1)
    }
    return cells_to_shape(cells)


def _chain_shapes(s, blocks) -> list[SkewShape]:
    """Block shapes of the chain's head tableau, via prefix spans.

    Column c of the tableau holds the word of the c-th smallest head, so
    its block-k rows run over one interval of that head's prefix sums;
    agrees with reading the shapes off the tableau cell by cell.
    """
    prefixes = [(0,) + tuple(accumulate(m)) for m in reversed(s)]
    return [
        _span_shape(tuple((p[k - 1] + 1, p[k]) for p in prefixes))
        for k in range(1, len(blocks) + 1)
    ]


def _head_terms(s, blocks):
    """Label -> multiplicity pairs contributed by one standard head."""
    partial: dict[IrrLabel, int] = {(): 1}
    for shape, nk in zip(_chain_shapes(s, blocks), blocks):
        partial = {
            label + (nu,): c * cc
            for label, c in partial.items()
            for nu, cc in _poly_items(shape, nk)
        }
    return partial


def decompose_degree(q: Quadruple, r: int) -> Decomposition:
    """Decompose degree r of the coordinate ring into labeled irreducibles.

    Aggregates, over all standard degree-r heads, the product of the
    per-block Schur expansions of the head's block shapes.
    """
    _require_stable_reduced(q)
    if r < 0:
        raise ValueError("degree must be nonnegative")
    terms: dict[IrrLabel, int] = {}
    for s in enumerate_standard_heads(q, r):
        for label, c in _head_terms(s, q.blocks).items():
            terms[label] = terms.get(label, 0) + c
    return Decomposition(r, terms)


def brute_force_multfree(
    q: Quadruple, r_max: int
) -> tuple[bool, tuple[int, IrrLabel] | None]:
    """Is every degree up to r_max multiplicity free?  Checks by direct
    decomposition, stopping at the first label that reaches two.

    Returns (verdict, witness); the witness is a (degree, label) pair.
    """
    _require_stable_reduced(q)
    if r_max < 1:
        raise ValueError("need at least degree one")
    for r in range(1, r_max + 1):
        terms: dict[IrrLabel, int] = {}
        for s in enumerate_standard_heads(q, r):
            for label, c in _head_terms(s, q.blocks).items():
                total = terms.get(label, 0) + c
                if total > 1:
                    return False, (r, label)
                terms[label] = total
    return True, None


def check_MC_fast(q: Quadruple) -> tuple[bool, int | None]:
    """Closed-form test that every block's skew Weyl module stays
    multiplicity free in every degree.

    For each interior block index k one of five arithmetic conditions on
    the h-vector and block sizes must hold; returns the first failing k.
    """
    h = h_vector(q)
    sizes = q.blocks
    b = len(sizes)
    hpre = [0] + list(accumulate(h))
    npre = [0] + list(accumulate(sizes))
    for k in range(2, b):
        suffix = hpre[b] - hpre[k]
        ok = (
            sizes[k - 1] == 1
            or hpre[k - 1] + 1 >= npre[k - 1]
            or (h[k - 1] == sizes[k - 1] and hpre[k - 1] + 2 >= npre[k - 1])
            or (h[k - 1] > 0 and suffix < 2)
            or (h[k - 1] == 0 and suffix <= 2)
        )
        if not ok:
            return False, k
    return True, None


def check_MCC_fast(q: Quadruple) -> tuple[bool, int | None]:
    """Closed-form test that distinct standard heads never share an
    irreducible constituent.

    For each k strictly between 1 and b-1, either the length-k prefix of
    the h-vector nearly fills the first k blocks or the tail of the
    h-vector carries at most one entry; returns the first failing k.
    """
    h = h_vector(q)
    b = len(q.blocks)
    hpre = [0] + list(accumulate(h))
    npre = [0] + list(accumulate(q.blocks))
    for k in range(2, b - 1):
        if hpre[k] + 1 >= npre[k] or hpre[b] - hpre[k] < 2:
            continue
        return False, k
    return True, None


def classify(q: Quadruple) -> ClassificationResult:
    """Decide sphericity of a stable quadruple from the h-vector alone.

    The identity word is spherical outright; anything else is reduced
    first.  Two blocks or fewer is always spherical; three blocks follow
    the five-condition test at the middle block; four or more hinge on
    p_w, the first interior index whose h-tail drops below two.
    """
    missing = missing_boundary_roots(q)
    if missing:
        raise ValueError(
            f"not stable: boundaries miss roots {sorted(missing)}"
        )
    if q.word == tuple(range(1, q.d + 1)):
        return ClassificationResult(True, "trivial_identity")
    went = not is_reduced(q)
    rq = reduce(q)
    b = len(rq.blocks)
    if b <= 2:
        return ClassificationResult(True, "few_blocks", reduced=went)
    h = h_vector(rq)
    sizes = rq.blocks
    if b == 3:
        conditions = (
            sizes[1] == 1,
            h[0] + 1 >= sizes[0],
            h[1] == sizes[1] and h[0] + 2 >= sizes[0],
            h[1] > 0 and h[2] < 2,
            h[1] == 0 and h[2] <= 2,
        )
        for index, holds in enumerate(conditions, start=1):
            if holds:
                return ClassificationResult(
                    True, "three_blocks", reduced=went, condition=index
                )
        return ClassificationResult(False, "three_blocks", reduced=went)
    p_w = b - 1
    for k in range(2, b - 1):
        if sum(h[k:]) < 2:
            p_w = k
            break
    if p_w == 2:
        return ClassificationResult(True, "many_blocks", reduced=went, p_w=p_w)
    spherical = sum(h[: p_w - 1]) + 1 >= sum(sizes[: p_w - 1])
    return ClassificationResult(
        spherical, "many_blocks", reduced=went, p_w=p_w
    )


def classify_max_levi(w: Word, n: int) -> ClassificationResult:
    """Sphericity under the largest Levi acting on the variety of w.

    Only defined for reduced words.  At most two blocks is spherical;
    three blocks need h1 + 1 = N1 or h3 = 1; four or more never work.
    """
    _check_word(w, n)
    if w[0] == 1 or w[-1] != n:
        raise ValueError("word must be reduced")
    blocks = maximal_levi(w, n)
    b = len(blocks)
    if b <= 2:
        return ClassificationResult(True, "max_levi")
    if b == 3:
        h = h_vector(Quadruple(w, n, blocks))
        verdict = h[0] + 1 == blocks[0] or h[2] == 1
        return ClassificationResult(verdict, "max_levi")
    return ClassificationResult(False, "max_levi")


def is_toric(w: Word, n: int) -> bool:
    """Is the Schubert variety of w a toric variety for a torus quotient?

    Holds exactly for words of the form (1..p, p+2..d, f) with p < d - 1
    or (1..d-1, f), each with d < f <= n: all entries but the last lie in
    {1..d} and the last exceeds d.

    >>> is_toric((1, 3, 4, 7), 8)
    True
    >>> is_toric((2, 7, 9), 9)
    False
    """
    _check_word(w, n)
    d = len(w)
    if w[-1] <= d:
        return False
    return len(set(range(1, d + 1)) - set(w[:-1])) == 1


@dataclass(frozen=True)
class SweepReport:
    cases: int
    reduced_classes: int
    counterexample: dict | None


def _class_verdict(rq: Quadruple, r_max: int):
    """Brute verdict plus the dimension identity for one reduced class."""
    mf = True
    for r in range(1, r_max + 1):
        terms: dict[IrrLabel, int] = {}
        dim_total = 0
        for s in enumerate_standard_heads(rq, r):
            shapes = _chain_shapes(s, rq.blocks)
            partial: dict[IrrLabel, int] = {(): 1}
            product = 1
            for shape, nk in zip(shapes, rq.blocks):
                product *= ssyt_count(shape, nk)
                if mf:
                    partial = {
                        label + (nu,): c * cc
                        for label, c in partial.items()
                        for nu, cc in _poly_items(shape, nk)
                    }
            dim_total += product
            if mf:
                for label, c in partial.items():
                    total = terms.get(label, 0) + c
                    if total > 1:
                        mf = False
                        break
                    terms[label] = total
        if dim_total != count_standard_monomials(rq.word, rq.n, r):
            return mf, False
    return mf, True


def verify_sweep(n_max: int, r_max: int) -> SweepReport:
    """Cross-validate the classification against brute force everywhere.

    Walks every word in every Grassmannian up to n_max and every stable
    block composition, checking that classify matches the decomposition
    oracle (degrees up to r_max), that head dimensions sum to the
    standard-monomial count, and that reduction preserves monomial
    counts.  Stops at the first counterexample.
    """
    if n_max < 2:
        raise ValueError("need n_max at least 2")
    if r_max < 1:
        raise ValueError("need r_max at least 1")
    cases = 0
    class_cache: dict[Quadruple, tuple[bool, bool]] = {}

    def report(kind: str, q: Quadruple, **extra) -> SweepReport:
        detail = {"kind": kind, "word": q.word, "n": q.n, "blocks": q.blocks}
        detail.update(extra)
        return SweepReport(cases, len(class_cache), detail)

    for n in range(2, n_max + 1):
        for d in range(1, n):
            identity = tuple(range(1, d + 1))
            for w in combinations(range(1, n + 1), d):
                roots = stabilizer_roots(w, n)
                if w != identity:
                    bar = reduce(Quadruple(w, n, maximal_levi(w, n)))
                    for r in range(r_max + 1):
                        if count_standard_monomials(
                            w, n, r
                        ) != count_standard_monomials(bar.word, bar.n, r):
                            return report(
                                "reduction_invariance",
                                Quadruple(w, n, maximal_levi(w, n)),
                                degree=r,
                            )
                free = sorted(set(range(1, n)) - roots)
                for take in range(len(free) + 1):
                    for extra in combinations(free, take):
                        cuts = sorted(set(extra) | roots | {n})
                        blocks = tuple(
                            b - a for a, b in zip([0] + cuts, cuts)
                        )
                        q = Quadruple(w, n, blocks)
                        cases += 1
                        res = classify(q)
                        if w == identity:
                            expected = True
                        else:
                            rq = reduce(q)
                            if rq not in class_cache:
                                class_cache[rq] = _class_verdict(rq, r_max)
                            expected, dims_ok = class_cache[rq]
                            if not dims_ok:
                                return report("dimension_identity", rq)
                        if res.spherical != expected:
                            return report(
                                "verdict_mismatch",
                                q,
                                classify=res.verdict,
                                brute=expected,
                            )
    return SweepReport(cases, len(class_cache), None)
