from wgideals.export import load_golden
from wgideals.tableaux import StandardTableau, tableau_of


def fixture_index(wg):
    """Fixture label t_k -> engine vertex index, matched by tableau."""
    data = load_golden()
    lam = tuple(data["lambda"])
    ours = {tableau_of(w, lam): j for j, w in enumerate(wg.table.elements)}
    return {k: ours[StandardTableau.from_rows(rows)] for k, rows in enumerate(data["tableaux"], 1)}
