import pytest

from wgideals.bulk import compute_q_table_bulk
from wgideals.coxeter import Dihedral, TypeA
from wgideals.ideal import parabolic_ideal, regular_ideal, specht_ideal
from wgideals.tableaux import partitions
from wgideals.wgraph import build_wgraph, compute_q_table


def tables():
    yield regular_ideal(TypeA(4))
    yield regular_ideal(Dihedral(7))
    yield parabolic_ideal(TypeA(5), {2, 3}, "phi")
    for lam in partitions(6):
        yield specht_ideal(lam)
    yield specht_ideal((4, 2, 1))


@pytest.mark.parametrize("table", list(tables()), ids=lambda t: str(t.meta))
def test_bulk_matches_reference(table):
    ref = compute_q_table(table)
    bulk = compute_q_table_bulk(table, keep="all")
    assert bulk == ref
    assert bulk.mu_pairs == ref.mu_pairs


def test_mu_only_and_policy():
    table = specht_ideal((3, 2, 2))
    ref = compute_q_table(table)
    for policy in ("first", "last"):
        lean = compute_q_table_bulk(table, policy=policy)
        assert not lean.complete
        assert lean.mu_pairs == ref.mu_pairs


def test_spill_to_disk(tmp_path):
    table = specht_ideal((3, 3, 1))
    spilled = compute_q_table_bulk(table, keep="all", spill=str(tmp_path))
    assert spilled == compute_q_table(table)
    assert list(tmp_path.iterdir()) == []


def test_build_wgraph_engines():
    table = specht_ideal((3, 2))
    assert build_wgraph(table, engine="bulk").mu == build_wgraph(table).mu
    with pytest.raises(ValueError):
        build_wgraph(table, engine="gpu")
    with pytest.raises(ValueError):
        compute_q_table_bulk(table, keep="some")
