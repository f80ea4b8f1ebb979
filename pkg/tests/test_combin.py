from itertools import permutations

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from sqzero.combin import (Involution, NotBlockSupported, NotUpperTriangular, Permutation,
                           RankTooLarge, ReducedWord, all_reduced_words, arc_diagram,
                           block_flag_permutation, block_involutions, conjugate,
                           conjugating_permutations, corner, count_involutions,
                           enumerate_involutions, minimal_involution, n_matrix, orbit_dim,
                           orbit_dim_arcs, pi_w, reduced_word, resolution_chain)


def tangent_dim(w: Involution) -> int:
    """Rank of X -> XN - NX on upper-triangular X: the orbit dimension, computed from scratch."""
    n = w.n
    N = sp.zeros(n, n)
    for i, j in w.pairs:
        N[i - 1, j - 1] = 1
    cols = []
    for a in range(n):
        for b in range(a, n):
            X = sp.zeros(n, n)
            X[a, b] = 1
            cols.append(list(X * N - N * X))
    return sp.Matrix(cols).rank()


def brute_involutions(n):
    return sorted(p for p in permutations(range(1, n + 1))
                  if all(p[p[i] - 1] == i + 1 for i in range(n)))


# -- permutations and words --------------------------------------------------------

def test_composition_convention():
    s1, s2 = Permutation.simple(3, 1), Permutation.simple(3, 2)
    assert (s1 * s2)(1) == s1(s2(1)) == 2
    assert ReducedWord((1, 2)).product(3) == s1 * s2


def test_length_and_longest():
    assert Permutation.longest(4).length() == 6
    assert Permutation.parse("2,4,1,3").length() == 3
    assert Permutation.identity(5).is_identity()


def test_reduced_word_is_lex_smallest():
    p = Permutation.parse("1,3,2,5,7,6,4")
    w = reduced_word(p)
    assert w.letters == (2, 4, 5, 6, 5)
    assert w == min(all_reduced_words(p), key=lambda r: r.letters)
    assert ReducedWord((2, 6, 4, 5, 6)).product(7) == p


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(1, 6))))
def test_reduced_words_multiply_back(p):
    p = Permutation(tuple(p))
    words = all_reduced_words(p)
    assert all(w.product(5) == p and len(w) == p.length() for w in words)
    assert len(set(words)) == len(words)


def test_reduced_word_count_of_longest():
    # the longest element of S_4 has 16 reduced words
    assert len(all_reduced_words(Permutation.longest(4))) == 16


# -- involutions ------------------------------------------------------------------------

def test_involution_parse_and_normalize():
    w = Involution.parse(" (3, 4)(1,6) ", 7)
    assert str(w) == "(1,6)(3,4)" and w.rank == 2 and w.fixed_points() == [2, 5, 7]
    assert str(Involution.parse("id", 3)) == "id"
    with pytest.raises(ValueError):
        Involution.parse("(1,2)(2,3)", 3)
    with pytest.raises(ValueError):
        Involution.parse("(1,4)", 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_matches_brute_force(n):
    invs = enumerate_involutions(n)
    assert sorted(w.as_permutation().one_line for w in invs) == brute_involutions(n)
    assert len(invs) == count_involutions(n)
    assert [w.rank for w in invs] == sorted(w.rank for w in invs)


def test_involution_counts():
    assert [count_involutions(n) for n in range(1, 9)] == [1, 2, 4, 10, 26, 76, 232, 764]


@pytest.mark.parametrize("n", range(1, 7))
def test_dimension_formulas_match_tangent_space(n):
    for w in enumerate_involutions(n):
        m = w.rank
        d = tangent_dim(w)
        assert orbit_dim(w) == orbit_dim_arcs(w) == d
        assert pi_w(w).length() + m * (m + 1) // 2 == d


def test_dimension_of_26_47_in_eight_letters():
    w = Involution.parse("(2,6)(4,7)", 8)
    assert orbit_dim(w) == 8 == tangent_dim(w)
    assert arc_diagram(w) == ".a.b.ab."


def test_matrix_squares_to_zero_and_conjugation():
    w = Involution.parse("(1,3)(2,4)", 5)
    N = n_matrix(w)
    assert N.entries == {(1, 3), (2, 4)} and N.squares_to_zero()
    with pytest.raises(NotUpperTriangular):
        conjugate(Permutation.parse("3,2,1,4,5"), N)


def test_minimal_orbit_and_corner():
    assert str(minimal_involution(4, 2)) == "(1,3)(2,4)"
    assert corner(4, 2) == [(1, 3), (1, 4), (2, 4)]
    assert corner(5, 0) == []
    with pytest.raises(RankTooLarge):
        minimal_involution(3, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_pi_w_conjugates_minimal_orbit(n):
    for w in enumerate_involutions(n):
        base = n_matrix(minimal_involution(n, w.rank))
        assert conjugate(pi_w(w), base) == n_matrix(w)
        assert resolution_chain(reduced_word(pi_w(w)), n, w.rank)[-1] == n_matrix(w)


def test_three_shortest_conjugators():
    w = Involution.parse("(1,5)(2,6)(3,4)", 6)
    got = [str(p) for p in conjugating_permutations(w, shortest=True)]
    assert sorted(got) == ["1,2,3,5,6,4", "1,3,2,5,4,6", "3,1,2,4,5,6"]
    assert all(Permutation.parse(p).length() == 2 for p in got)


def test_pi_w_example():
    assert str(pi_w(Involution.parse("(1,6)(3,4)", 7))) == "1,3,2,5,7,6,4"


def test_block_flag_permutation():
    assert str(block_flag_permutation(Involution.parse("(1,4)(2,6)(3,5)", 6), 3)) == "2,3,1"
    with pytest.raises(NotBlockSupported):
        block_flag_permutation(Involution.parse("(1,2)", 6), 3)
    blocks = block_involutions(3)
    assert len(blocks) == 6
    assert sorted(block_flag_permutation(w, 3).one_line for w in blocks) == sorted(permutations((1, 2, 3)))
