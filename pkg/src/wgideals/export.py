"""Serialization of W-graphs (JSON, DOT, expansion tables) and golden comparison."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .ideal import IdealTable, specht_ideal
from .laurent import LaurentPoly
from .tableaux import StandardTableau, tableau_of
from .wgraph import QTable, WGraphData, build_wgraph, from_laurent


class GoldenMismatch(AssertionError):
    def __init__(self, report: GoldenReport):
        self.report = report
        first = report.mismatches[0]
        super().__init__(f"{len(report.mismatches)} mismatching entries, first at "
                         f"c_{first[0]} / c_{first[1]}: expected {first[2]}, got {first[3]}")


def _tau_list(wg: WGraphData, j: int) -> list[int]:
    return sorted(wg.tau[j])


def _edges(wg: WGraphData) -> list[tuple[int, int, int]]:
    return sorted((i, j, m) for (i, j), m in wg.mu.items())


def export_json(wg: WGraphData, tables: bool = False) -> str:
    """Vertices are numbered from 1. ``tables`` adds the ideal table and q-table."""
    table = wg.table
    group = table.group
    data: dict = {
        "vertices": [
            {"id": j + 1, "word": list(group.reduced_word(w)), "tau": _tau_list(wg, j)}
            for j, w in enumerate(table.elements)
        ],
        "edges": [{"u": i + 1, "v": j + 1, "mu": m} for i, j, m in _edges(wg)],
        "meta": _meta(table),
    }
    if tables:
        data["ideal"] = table.to_json()
        if wg.qtable.complete:
            data["qtable"] = [[j + 1, k + 1, p.to_json()] for j, k, p in wg.qtable.items()]
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def _meta(table: IdealTable) -> dict:
    meta = table.to_json()["meta"]
    meta.setdefault("family", "custom")
    meta["J"] = sorted(table.J)
    meta["gens"] = list(table.gens)
    meta["size"] = len(table)
    return meta


def parse_json(text: str) -> WGraphData:
    """Inverse of ``export_json(wg, tables=True)``."""
    data = json.loads(text)
    if "ideal" not in data:
        raise ValueError("JSON has no ideal table; export with tables=True")
    table = IdealTable.from_json(data["ideal"])
    d = len(table)
    mu = {(e["u"] - 1, e["v"] - 1): e["mu"] for e in data["edges"]}
    if "qtable" in data:
        columns: list[dict] = [{} for _ in range(d)]
        for j, k, p in data["qtable"]:
            columns[k - 1][j - 1] = from_laurent(LaurentPoly.from_json(p))
        qtable = QTable(columns, mu, d)
    else:
        qtable = QTable(None, mu, d)
    tau = tuple(frozenset(v["tau"]) for v in data["vertices"])
    return WGraphData(table, qtable, tau, mu, dict(table.meta))


def export_dot(wg: WGraphData) -> str:
    lines = ["graph wgraph {"]
    for j in wg.vertices:
        tau = ",".join(str(s) for s in _tau_list(wg, j))
        lines.append(f'  {j + 1} [label="{j + 1} {{{tau}}}"];')
    for i, j, m in _edges(wg):
        lines.append(f'  {i + 1} -- {j + 1} [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# c-expansion tables: c_k = b_k - q * sum_j q_{j,k} c_j

def expansion(qtable: QTable, k: int) -> list[tuple[int, LaurentPoly]]:
    """Coefficients of c_j in c_k - b_k, by decreasing j."""
    col = qtable.columns[k]
    return [(j, -(LaurentPoly.q() * qtable.get(j, k))) for j in sorted(col, reverse=True)]


def _term(coeff: LaurentPoly, name: str) -> str:
    terms = coeff.terms
    if len(terms) == 1:
        e, c = terms[0]
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        power = "" if e == 0 else "q" if e == 1 else f"q^{e}"
        body = mag + power or "1"
        return f"{sign} {body}{name}" if body != "1" else f"{sign} {name}"
    if all(c < 0 for _, c in terms):
        return f"- ({-coeff}){name}"
    return f"+ ({coeff}){name}"


def render_table(wg: WGraphData, labels: list[str] | None = None) -> str:
    """One line per vertex, e.g. ``c_5 = b_5 - qc_4 - qc_3 - q^2c_2 - qc_1``."""
    labels = labels or [str(j + 1) for j in wg.vertices]
    lines = []
    for k in wg.vertices:
        parts = [f"c_{labels[k]} = b_{labels[k]}"]
        for j, coeff in expansion(wg.qtable, k):
            parts.append(_term(coeff, f"c_{labels[j]}"))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# golden comparison

GOLDEN_331 = "specht_331_cexpansion.json"


def golden_path(name: str = GOLDEN_331) -> Path:
    return Path(str(resources.files("wgideals") / "data" / name))


@dataclass
class GoldenReport:
    lines: int
    mismatches: list[tuple[int, int, str, str]] = field(default_factory=list)
    errata: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "lines": self.lines,
            "mismatches": [{"j": j, "i": i, "expected": a, "computed": b} for j, i, a, b in self.mismatches],
            "errata_applied": self.errata,
        }


def load_golden(path: str | Path | None = None) -> dict:
    with open(path or golden_path()) as fh:
        return json.load(fh)


def golden_compare(path: str | Path | None = None, apply_errata: bool = True,
                   wg: WGraphData | None = None, strict: bool = True) -> GoldenReport:
    """Compare a Specht c-expansion fixture with the engine, matching vertices by tableau.

    Fixture coefficients are those of c_i in the printed c_j line. Entries
    listed under ``errata`` replace the printed value when ``apply_errata``.
    """
    data = load_golden(path)
    lam = tuple(data["lambda"])
    if wg is None:
        wg = build_wgraph(specht_ideal(lam))
    table = wg.table
    ours = {tableau_of(w, lam): j for j, w in enumerate(table.elements)}
    names = [StandardTableau.from_rows(rows) for rows in data["tableaux"]]
    to_engine = [ours[t] for t in names]
    to_label = {e: n + 1 for n, e in enumerate(to_engine)}

    expected: dict[tuple[int, int], LaurentPoly] = {}
    for line in data["expansions"]:
        for term in line["terms"]:
            expected[line["j"], term["i"]] = LaurentPoly.from_json(term["coeff"])
    applied = []
    if apply_errata:
        for fix in data.get("errata", []):
            expected[fix["j"], fix["i"]] = LaurentPoly.from_json(fix["corrected"])
            applied.append(fix)

    computed: dict[tuple[int, int], LaurentPoly] = {}
    for k in wg.vertices:
        for j, coeff in expansion(wg.qtable, k):
            computed[to_label[k], to_label[j]] = coeff

    report = GoldenReport(len(data["expansions"]), errata=applied)
    for key in sorted(set(expected) | set(computed), key=lambda t: (t[0], -t[1])):
        a = expected.get(key, LaurentPoly())
        b = computed.get(key, LaurentPoly())
        if a != b:
            report.mismatches.append((key[0], key[1], str(a), str(b)))
    if strict and report.mismatches:
        raise GoldenMismatch(report)
    return report
