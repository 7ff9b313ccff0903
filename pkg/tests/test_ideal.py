import pytest

from wgideals.coxeter import Dihedral, TypeA, iter_subsets
from wgideals.ideal import (SA, SD, WA, WD, ConjugacyViolation, IdealTable, JNotInPos,
                            build_from_elements, from_parts, induced_ideal, one_dim_ideal,
                            parabolic_ideal, regular_ideal, specht_ideal, validate)
from wgideals.tableaux import classify, partitions, tableau_of, v_lambda

S3, S4 = TypeA(3), TypeA(4)


def kinds_of(table):
    return {k for s in table.gens for k in table.kinds[s]}


def test_build_examples():
    t = build_from_elements(S3, (), [S3.longest_element()])
    assert len(t) == 6 and kinds_of(t) <= {SA, SD}
    t = build_from_elements(S3, {1, 2}, [S3.identity])
    assert len(t) == 1 and t.descents[0] == {1, 2}
    with pytest.raises(JNotInPos):
        build_from_elements(S3, {1}, [(2, 1, 3)])


def test_regular():
    assert len(regular_ideal(S3)) == 6
    t = regular_ideal(S4)
    assert len(t) == 24
    assert all(t.descents[j] for j in range(1, 24))
    assert validate(t)


def test_parabolic():
    for variant in ("psi", "phi"):
        t = parabolic_ideal(S3, (), variant)
        assert t.elements == regular_ideal(S3).elements
        t = parabolic_ideal(S3, (1, 2), variant)
        assert len(t) == 1
        assert kinds_of(t) == ({WA} if variant == "psi" else {WD})
    assert len(parabolic_ideal(S3, {1})) == 3
    for J in iter_subsets(S4.generators):
        psi, phi = parabolic_ideal(S4, J, "psi"), parabolic_ideal(S4, J, "phi")
        assert psi.elements == phi.elements
        assert WD not in kinds_of(psi) and WA not in kinds_of(phi)
        assert validate(psi) and validate(phi)


def test_specht():
    t = specht_ideal((3, 3, 1))
    assert len(t) == 21
    assert max(t.lengths) == 7
    assert t.descents[0] == {1, 2, 4, 6}
    assert t.kinds[3][0] == SA
    assert kinds_of(specht_ideal((4,))) == {WA}
    assert kinds_of(specht_ideal((1, 1, 1))) == {WD}
    assert S4.pos_set(specht_ideal((2, 2)).elements) >= {1, 3}


def test_specht_classification_matches_tableaux():
    for n in range(2, 7):
        for lam in partitions(n):
            t = specht_ideal(lam)
            assert validate(t)
            for j, w in enumerate(t.elements):
                tab = tableau_of(w, lam)
                for s in t.gens:
                    assert t.kinds[s][j] == classify(tab, s)


def test_induced():
    inner = specht_ideal((2, 1), 4)
    t = induced_ideal({1, 2}, inner)
    assert len(t) == 8 and validate(t)
    full = induced_ideal({1, 2, 3}, specht_ideal((2, 2)))
    assert full.elements == specht_ideal((2, 2)).elements
    trivial = build_from_elements(S4, (), [S4.identity], gens=())
    assert induced_ideal((), trivial).elements == regular_ideal(S4).elements
    with pytest.raises(ValueError):
        induced_ideal({1}, inner)


def test_induced_suffix_closed_all_K():
    for K in iter_subsets(S4.generators):
        inner = regular_ideal(S4, gens=K)
        assert validate(induced_ideal(K, inner))


def test_one_dim():
    t = one_dim_ideal(S3, {1, 2}, ())
    assert t.kinds[1] == (WD,) and t.kinds[2] == (WD,)
    t = one_dim_ideal(S3, (), {1, 2})
    assert t.kinds[1] == (WA,)
    with pytest.raises(ConjugacyViolation):
        one_dim_ideal(S3, {1}, {2})
    t = one_dim_ideal(S4, {1}, {3})
    assert t.kinds[1] == (WD,) and t.kinds[3] == (WA,)
    t = one_dim_ideal(Dihedral(4), {1}, {2})
    assert len(t) == 1


def test_validate_negative():
    t = regular_ideal(S3)
    broken = from_parts(S3, (), [w for w in t.elements if w != (2, 1, 3)])
    assert validate(broken).violation == "NotSuffixClosed"
    bad_j = from_parts(S3, {1}, [S3.identity, (2, 1, 3)])
    assert validate(bad_j).violation == "JNotInPos"


def test_tab_array_encoding():
    t = parabolic_ideal(S3, {1}, "phi")
    tab = t.tab_array()
    for s in t.gens:
        for j, v in enumerate(tab[s]):
            kind = t.kinds[s][j]
            if kind == WD:
                assert v == -(j + 1)
            elif kind == WA:
                assert v == j + 1
            else:
                assert v == t.partners[s][j] + 1


def test_json_round_trip():
    for t in (specht_ideal((2, 2, 1)), parabolic_ideal(Dihedral(5), {1}, "phi")):
        back = IdealTable.from_json(t.to_json())
        assert back.elements == t.elements and back.kinds == t.kinds and back.J == t.J


def test_simplerdef():
    for n in range(2, 6):
        g = TypeA(n)
        tables = [regular_ideal(g)] + [specht_ideal(lam) for lam in partitions(n)]
        for t in tables:
            for j, w in enumerate(t.elements):
                for s in t.gens:
                    if t.kinds[s][j] != WA:
                        continue
                    sw = g.lmul(s, w)
                    for y in t.elements:
                        if y != sw and g.bruhat_leq(y, sw):
                            assert g.bruhat_leq(y, w)
