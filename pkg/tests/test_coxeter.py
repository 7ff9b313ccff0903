from itertools import product

import pytest

from wgideals.coxeter import (Dihedral, TypeA, UnsupportedType, bruhat_closure_oracle,
                              coxeter_group_from_matrix, iter_subsets)

S3, S4 = TypeA(3), TypeA(4)


def test_apply_gen():
    assert S3.lmul(1, (1, 2, 3)) == (2, 1, 3)
    assert S3.lmul(1, (2, 1, 3)) == (1, 2, 3)
    assert S3.lmul(2, (2, 1, 3)) == (3, 1, 2)


def test_length():
    assert S3.length((1, 2, 3)) == 0
    assert S3.length((3, 2, 1)) == 3
    assert TypeA(7).length((1, 4, 7, 2, 5, 3, 6)) == 7


def test_length_is_reduced_word_length():
    for w in S4.elements():
        word = S4.reduced_word(w)
        assert len(word) == S4.length(w)
        assert S4.from_word(word) == w


def test_descents():
    assert S3.left_descends(1, (2, 1, 3))
    assert not any(S3.left_descends(s, S3.identity) for s in (1, 2))
    assert not S3.right_descends((2, 1, 3), 2)
    for w in S4.elements():
        for s in S4.generators:
            assert S4.left_descends(s, w) == (S4.length(S4.lmul(s, w)) < S4.length(w))
            assert S4.right_descends(w, s) == (S4.length(S4.rmul(w, s)) < S4.length(w))


@pytest.mark.parametrize("group", [S3, S4, Dihedral(5)])
def test_bruhat_matches_closure(group):
    oracle = bruhat_closure_oracle(group)
    elems = group.elements()
    for u, w in product(elems, repeat=2):
        assert group.bruhat_leq(u, w) == ((u, w) in oracle)


def test_bruhat_examples():
    assert S3.bruhat_leq((2, 1, 3), (3, 1, 2))
    assert all(S4.bruhat_leq(S4.identity, w) for w in S4.elements())


def test_suffix_order():
    elems = S4.elements()
    w0 = S4.longest_element()
    assert S4.suffix_leq(w0, w0)
    assert not S4.suffix_leq(w0, S4.identity)
    for u, w in product(elems, repeat=2):
        if S4.suffix_leq(u, w):
            assert S4.bruhat_leq(u, w)


def test_lifting_property():
    elems = S4.elements()
    for s in S4.generators:
        for u in elems:
            su = S4.lmul(s, u)
            if S4.length(su) < S4.length(u):
                continue
            for w in elems:
                sw = S4.lmul(s, w)
                if S4.length(sw) < S4.length(w):
                    continue
                assert S4.bruhat_leq(u, w) == S4.bruhat_leq(u, sw)


def test_deo1_trichotomy():
    for J in iter_subsets(S4.generators):
        for w in S4.minimal_coset_reps(J):
            for s in S4.generators:
                sw = S4.lmul(s, w)
                up = S4.length(sw) > S4.length(w)
                conj = S4.multiply(S4.inverse(w), sw)
                cases = [
                    not up and S4.in_D(sw, J),
                    up and S4.in_D(sw, J),
                    up and any(conj == S4.generator_element(t) for t in J),
                ]
                assert sum(cases) == 1


def test_coset_decompose():
    for J in iter_subsets(S4.generators):
        for w in S4.elements():
            d, u = S4.coset_decompose(w, J)
            assert S4.multiply(d, u) == w
            assert S4.in_D(d, J) and S4.in_parabolic(u, J)
            assert S4.length(w) == S4.length(d) + S4.length(u)
    w = (2, 1, 3)
    assert S3.coset_decompose(w, {2}) == (w, S3.identity)
    assert S3.coset_decompose(w, {1}) == (S3.identity, w)
    d, u = S3.coset_decompose((3, 2, 1), {1})
    assert S3.length(d) == 2 and u == (2, 1, 3)


def test_pos_set():
    assert S4.pos_set([S4.identity]) == frozenset(S4.generators)
    assert S4.pos_set(S4.elements()) == frozenset()


def test_longest_elements():
    assert S3.longest_element(()) == S3.identity
    assert S3.min_coset_rep_longest(()) == S3.longest_element()
    assert S3.longest_element() == (3, 2, 1)
    assert S3.min_coset_rep_longest(S3.generators) == S3.identity
    d = S3.min_coset_rep_longest({1})
    assert S3.length(d) == 2 and not S3.right_descends(d, 1)
    assert S3.longest_element({1}) == (2, 1, 3)


def test_dihedral():
    m = 5
    g = Dihedral(m)
    lengths = sorted(g.length(w) for w in g.elements())
    assert lengths == [0] + [k for k in range(1, m) for _ in (0, 1)] + [m]
    assert g.length(g.longest_element()) == m
    for u, w in product(g.elements(), repeat=2):
        if 0 < g.length(u) == g.length(w) < m and u != w:
            assert not g.bruhat_leq(u, w)
    assert g.from_word((1, 2, 1, 2, 1)) == g.from_word((2, 1, 2, 1, 2))


def test_from_matrix():
    assert coxeter_group_from_matrix([[1, 3], [3, 1]]) == TypeA(3)
    assert coxeter_group_from_matrix([[1, 6], [6, 1]]) == Dihedral(6)
    with pytest.raises(UnsupportedType):
        coxeter_group_from_matrix([[1, 4, 2], [4, 1, 3], [2, 3, 1]])


def test_coxeter_matrix():
    m = S4.coxeter_matrix
    assert m[0][0] == 1 and m[0][1] == 3 and m[0][2] == 2
