import doctest

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import spherical_schubert.grassmann
from spherical_schubert.grassmann import (
    Quadruple,
    bruhat_interval,
    bruhat_leq,
    count_standard_monomials,
    h_vector,
    is_reduced,
    is_stable,
    maximal_levi,
    missing_boundary_roots,
    reduce,
    stabilizer_roots,
)

from strategies import grass_words, levi_blocks, reduced_words, stable_quadruples


def test_bruhat_leq_is_componentwise():
    assert bruhat_leq((1, 2, 9), (2, 7, 9))
    assert bruhat_leq((2, 7, 9), (2, 7, 9))
    assert not bruhat_leq((7, 8, 9), (2, 7, 9))
    with pytest.raises(ValueError):
        bruhat_leq((1, 2), (2, 7, 9))


def test_bruhat_interval_size_and_order():
    interval = bruhat_interval((2, 7, 9), 9)
    assert len(interval) == 47
    assert interval == sorted(interval)
    assert interval[0] == (1, 2, 3)
    assert interval[-1] == (2, 7, 9)
    assert all(bruhat_leq(tau, (2, 7, 9)) for tau in interval)


def test_stabilizer_roots_examples():
    assert stabilizer_roots((2, 7, 9), 9) == {2, 7}
    assert stabilizer_roots((4, 7, 8, 9), 9) == {4}
    assert stabilizer_roots((1, 2, 5, 7), 8) == {2, 5, 7}
    assert stabilizer_roots((1, 2, 3), 9) == {3}
    assert stabilizer_roots((5, 6, 7, 8), 8) == set()


def test_quadruple_validation():
    Quadruple((1, 3), 4, (4,))
    with pytest.raises(ValueError):
        Quadruple((1, 4), 3, (3,))
    with pytest.raises(ValueError):
        Quadruple((3, 1), 4, (4,))
    with pytest.raises(ValueError):
        Quadruple((1, 2, 3), 3, (3,))
    with pytest.raises(ValueError):
        Quadruple((1, 3), 4, (2, 1))
    with pytest.raises(ValueError):
        Quadruple((1, 3), 4, (2, 0, 2))


def test_stability_examples():
    assert is_stable(Quadruple((2, 7, 9), 9, (2, 5, 2)))
    bad = Quadruple((2, 7, 9), 9, (2, 7))
    assert not is_stable(bad)
    assert missing_boundary_roots(bad) == {7}
    assert is_stable(Quadruple((2, 7, 9), 9, (1,) * 9))


def test_maximal_levi_examples():
    assert maximal_levi((2, 7, 9), 9) == (2, 5, 2)
    assert maximal_levi((2, 5), 5) == (2, 3)
    assert maximal_levi((5, 6, 7, 8), 8) == (8,)
    assert maximal_levi((1, 2, 3), 5) == (3, 2)


def test_h_vector_examples():
    assert h_vector(Quadruple((2, 7, 9), 9, (2, 5, 2))) == (1, 1, 1)
    assert h_vector(Quadruple((4, 7, 8, 9), 9, (4, 3, 2))) == (1, 1, 2)
    assert h_vector(Quadruple((1, 2, 3), 5, (3, 2))) == (3, 0)


def test_is_reduced_examples():
    assert is_reduced(Quadruple((2, 7, 9), 9, (2, 5, 2)))
    assert not is_reduced(Quadruple((1, 2, 5), 5, (5,)))
    assert not is_reduced(Quadruple((2, 4), 5, (5,)))


def test_reduce_frozen_examples():
    q = Quadruple((1, 2, 5, 7), 8, (2, 3, 2, 1))
    assert reduce(q) == Quadruple((3, 5), 5, (3, 2))
    assert reduce(Quadruple((1, 3), 4, (1, 1, 1, 1))) == Quadruple((2,), 2, (1, 1))


def test_reduce_rejects_unstable_and_identity():
    with pytest.raises(ValueError, match=r"\[7\]"):
        reduce(Quadruple((2, 7, 9), 9, (2, 7)))
    with pytest.raises(ValueError, match="identity"):
        reduce(Quadruple((1, 2, 3), 5, (3, 2)))


def test_count_standard_monomials_frozen_values():
    assert count_standard_monomials((2, 7, 9), 9, 1) == 47
    assert count_standard_monomials((2, 7, 9), 9, 0) == 1
    assert count_standard_monomials((3,), 3, 2) == 6
    with pytest.raises(ValueError):
        count_standard_monomials((2, 7, 9), 9, -1)


@given(grass_words())
def test_interval_members_are_exactly_the_smaller_words(pair):
    word, n = pair
    interval = set(bruhat_interval(word, n))
    assert word in interval
    assert (tuple(range(1, len(word) + 1))) in interval
    for tau in interval:
        assert bruhat_leq(tau, word)


@given(grass_words(max_n=7))
def test_degree_one_count_is_interval_size(pair):
    word, n = pair
    assert count_standard_monomials(word, n, 1) == len(bruhat_interval(word, n))


@given(grass_words(max_n=6))
def test_degree_two_count_matches_pair_enumeration(pair):
    word, n = pair
    interval = bruhat_interval(word, n)
    pairs = sum(
        1 for top in interval for bot in interval if bruhat_leq(bot, top)
    )
    assert count_standard_monomials(word, n, 2) == pairs


@given(stable_quadruples())
def test_h_vector_sums_to_d_and_stays_within_blocks(q):
    h = h_vector(q)
    assert sum(h) == q.d
    assert all(0 <= hk <= nk for hk, nk in zip(h, q.blocks))


@given(grass_words())
def test_maximal_levi_is_the_coarsest_stable_choice(pair):
    word, n = pair
    blocks = maximal_levi(word, n)
    assert sum(blocks) == n
    if len(word) < n:
        q = Quadruple(word, n, blocks)
        assert is_stable(q)
    cuts = set()
    total = 0
    for b in blocks[:-1]:
        total += b
        cuts.add(total)
    assert cuts == stabilizer_roots(word, n)


@settings(max_examples=60)
@given(stable_quadruples(max_n=7))
def test_reduce_output_is_reduced_and_idempotent(q):
    assume(q.word != tuple(range(1, q.d + 1)))
    r = reduce(q)
    assert is_reduced(r)
    assert is_stable(r)
    assert reduce(r) == r


@settings(max_examples=40, deadline=None)
@given(stable_quadruples(max_n=7), st.integers(min_value=0, max_value=3))
def test_reduce_preserves_monomial_counts(q, r):
    assume(q.word != tuple(range(1, q.d + 1)))
    rq = reduce(q)
    assert count_standard_monomials(q.word, q.n, r) == count_standard_monomials(
        rq.word, rq.n, r
    )


@given(reduced_words())
def test_reduced_words_with_maximal_levi_have_interior_h(pair):
    word, n = pair
    assume(len(word) < n)
    q = Quadruple(word, n, maximal_levi(word, n))
    assert is_reduced(q)
    h = h_vector(q)
    assert all(0 < hk < nk for hk, nk in zip(h, q.blocks))
    assert all(nk > 1 for nk in q.blocks)


@given(reduced_words())
def test_reduced_h_vector_bounds(pair):
    word, n = pair
    assume(len(word) < n)
    blocks = maximal_levi(word, n)
    q = Quadruple(word, n, blocks)
    h = h_vector(q)
    assert h[0] < q.blocks[0]
    assert h[-1] >= 1


def test_module_doctests():
    failures, _ = doctest.testmod(spherical_schubert.grassmann)
    assert failures == 0
