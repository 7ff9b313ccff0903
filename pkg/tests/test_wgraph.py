import pytest

from helpers import fixture_index
from wgideals.coxeter import Dihedral, TypeA, iter_subsets
from wgideals.ideal import (SA, WD, build_from_elements, induced_ideal, one_dim_ideal,
                            parabolic_ideal, regular_ideal, specht_ideal)
from wgideals.laurent import ONE, Q, LaurentPoly
from wgideals.tableaux import partitions
from wgideals.wgraph import (ChoiceDependence, NoStrongDescent, QTable, build_wgraph,
                             cell_decomposition, choice_independence_audit, compute_p_table,
                             compute_q_table, kl_polynomials, mu_of)


def all_tables(max_n=5):
    for n in range(2, max_n + 1):
        g = TypeA(n)
        yield regular_ideal(g)
        for J in iter_subsets(g.generators):
            yield parabolic_ideal(g, J, "psi")
            yield parabolic_ideal(g, J, "phi")
    for n in range(2, 7):
        for lam in partitions(n):
            yield specht_ideal(lam)
    for m in range(3, 8):
        g = Dihedral(m)
        yield regular_ideal(g)
        for J in ({1}, {2}):
            yield parabolic_ideal(g, J, "psi")
            yield parabolic_ideal(g, J, "phi")
    yield induced_ideal({1, 2}, specht_ideal((2, 1), 4))
    yield induced_ideal({1, 2, 3}, specht_ideal((2, 2), 5))
    yield induced_ideal({1, 3}, regular_ideal(TypeA(4), gens={1, 3}))


TABLES = list(all_tables())


def test_regular_s2():
    wg = build_wgraph(regular_ideal(TypeA(2)))
    assert wg.qtable.get(0, 1) == ONE
    assert wg.tau == (frozenset(), frozenset({1}))
    assert wg.mu == {(0, 1): 1}
    assert cell_decomposition(wg) == [[0], [1]]
    assert wg.ptable.get(0, 1) == ONE


def test_specht_values(specht331):
    t = fixture_index(specht331)
    qt = specht331.qtable
    assert qt.get(t[4], t[21]) == Q**2 + 1
    assert qt.get(t[20], t[21]) == ONE
    assert qt.get(t[2], t[21]) == Q
    assert [qt.get(t[i], t[5]) for i in (1, 2, 3, 4)] == [ONE, Q, ONE, ONE]
    assert mu_of(qt, t[4], t[21]) == 1
    assert mu_of(qt, t[21], t[4]) == 1
    assert mu_of(qt, t[2], t[21]) == 0
    assert mu_of(qt, 5, 5) == 0
    assert len(specht331.vertices) == 21
    assert specht331.tau[t[1]] == {1, 2, 4, 6}


def test_single_vertex():
    wg = build_wgraph(one_dim_ideal(TypeA(4), {1}, {3}))
    assert wg.tau == (frozenset({1}),) and not wg.mu
    assert cell_decomposition(wg) == [[0]]
    choice_independence_audit(wg.table)


def test_specht_one_cell(specht331):
    assert cell_decomposition(specht331) == [list(range(21))]


@pytest.mark.parametrize("table", TABLES, ids=lambda t: f"{t.meta.get('family')}-{len(t)}")
def test_structural_invariants(table):
    group = table.group
    qt = compute_q_table(table)
    for j, k, p in qt.items():
        assert p.valuation() >= 0
        assert p.degree() <= table.lengths[k] - table.lengths[j] - 1
        assert j < k and group.bruhat_leq(table.elements[j], table.elements[k])
    for s in table.gens:
        for k in range(len(table)):
            if table.kinds[s][k] == WD:
                assert all(s in table.descents[j] for j in qt.columns[k])
            if table.kinds[s][k] == SA:
                assert qt.get(k, table.partners[s][k]) == ONE
    assert choice_independence_audit(table).identical


@pytest.mark.parametrize("n", [2, 3, 4])
def test_mu_parity_regular(n):
    table = regular_ideal(TypeA(n))
    qt = compute_q_table(table)
    for (j, k), m in qt.mu_pairs.items():
        assert (table.lengths[k] - table.lengths[j] - 1) % 2 == 0


def test_p_table_inverse(specht331):
    qt, pt = specht331.qtable, specht331.ptable
    d = len(qt)
    for (j, k), m in pt.mu_pairs.items():
        assert qt.mu(j, k) == m
    assert pt.mu_pairs == qt.mu_pairs
    # b = (I + qQ) c and c = (I - qP) b, so (I + qQ)(I - qP) = I
    for k in range(d):
        for j in range(k):
            total = qt.get(j, k) - pt.get(j, k)
            for x in range(j + 1, k):
                total = total - Q * qt.get(j, x) * pt.get(x, k)
            assert total == LaurentPoly()


def test_kl_s3():
    wg = build_wgraph(regular_ideal(TypeA(3)))
    kl = kl_polynomials(wg.ptable, wg.table.lengths)
    g = wg.table.group
    els = wg.table.elements
    for j, y in enumerate(els):
        for k, w in enumerate(els):
            if g.bruhat_leq(y, w):
                assert kl.get((j, k)) == ONE


def test_kl_s4(regular_s4):
    g = regular_s4.table.group
    els = regular_s4.table.elements
    idx = regular_s4.table.index
    kl = kl_polynomials(regular_s4.ptable, regular_s4.table.lengths)
    y, w = g.from_word((2,)), g.from_word((2, 1, 3, 2))
    assert kl[idx[y], idx[w]] == 1 + Q
    nontrivial = {(j, k) for (j, k), p in kl.items() if p != ONE}
    for j, k in nontrivial:
        assert kl[j, k] == 1 + Q
    for j, y in enumerate(els):
        for k, w in enumerate(els):
            if g.bruhat_leq(y, w):
                assert (j, k) in kl
            else:
                assert (j, k) not in kl


def test_errors():
    table = regular_ideal(TypeA(3))
    with pytest.raises(ValueError):
        compute_q_table(table, policy="middle")
    qt = compute_q_table(table, keep="mu")
    assert not qt.complete
    assert qt.mu_pairs == compute_q_table(table).mu_pairs
    with pytest.raises(ValueError):
        compute_p_table(qt)
    with pytest.raises(ValueError):
        qt.get(0, 1)


def test_no_strong_descent():
    from wgideals.ideal import from_parts

    g = TypeA(3)
    table = from_parts(g, (), [g.identity, (3, 2, 1)])
    with pytest.raises(NoStrongDescent):
        compute_q_table(table)


def test_kl_rejects_non_polynomial():
    from wgideals.wgraph import NotAPolynomial

    bad = QTable([{}, {0: (0, 1)}], {}, 2)
    with pytest.raises(NotAPolynomial):
        kl_polynomials(bad, (0, 1))
