"""W-graphs from W-graph ideals.

The canonical basis c_w of the ideal's module is related to the given basis
by b_w = c_w + q * sum_{y<w} q_{y,w} c_y. The polynomials q_{y,w} are
computed column by column: to fill column k, pick a strong descent s of w_k
with s*w_k = w_m and combine column m with the edge weights found so far.
The edge weight mu_{y,w} is the constant term of q_{y,w}.

Inside the engine, polynomials in Z[q] are dense coefficient tuples
(constant term first); they are converted to ``LaurentPoly`` at the API
boundary.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

import networkx as nx

from .coxeter import GenSet
from .ideal import SA, SD, WD, IdealTable
from .laurent import LaurentPoly, ONE, ZERO

log = logging.getLogger(__name__)

Dense = tuple  # coefficients of q^0, q^1, ...


class NoStrongDescent(ValueError):
    """A non-identity element has no strong descent (input is not suffix closed)."""


class ChoiceDependence(AssertionError):
    """Two strong-descent selection policies gave different tables."""


class NotAPolynomial(ValueError):
    """A p-polynomial does not convert to a classical polynomial."""


# ---------------------------------------------------------------------------
# dense polynomial helpers

def _add_into(acc: dict, j: int, p: Dense, scale: int = 1) -> None:
    cur = acc.get(j)
    if cur is None:
        acc[j] = [c * scale for c in p] if scale != 1 else list(p)
        return
    if len(cur) < len(p):
        cur.extend([0] * (len(p) - len(cur)))
    for i, c in enumerate(p):
        cur[i] += c * scale


def _freeze(coeffs: list) -> Dense:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _dmul(a: Dense, b: Dense) -> Dense:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _freeze(out)


def to_laurent(p: Dense) -> LaurentPoly:
    return LaurentPoly.from_coeffs(p)


def from_laurent(p: LaurentPoly) -> Dense:
    return p.dense()


# ---------------------------------------------------------------------------

class QTable:
    """Sparse table of q_{w_j, w_k}; column k maps j -> dense polynomial.

    When built with ``keep="mu"`` the polynomial columns are discarded as the
    computation moves on and only the edge weights survive.
    """

    def __init__(self, columns: list[dict[int, Dense]] | None, mu: dict[tuple[int, int], int],
                 size: int):
        self.columns = columns
        self._mu = mu
        self.size = size

    def __len__(self):
        return self.size

    @property
    def complete(self) -> bool:
        return self.columns is not None

    def get(self, j: int, k: int) -> LaurentPoly:
        if self.columns is None:
            raise ValueError("polynomial columns were not retained")
        p = self.columns[k].get(j)
        return to_laurent(p) if p else ZERO

    def dense(self, j: int, k: int) -> Dense:
        return self.columns[k].get(j, ())

    def mu(self, i: int, j: int) -> int:
        """Symmetric edge weight; 0 on the diagonal and for incomparable pairs."""
        if i == j:
            return 0
        return self._mu.get((min(i, j), max(i, j)), 0)

    @property
    def mu_pairs(self) -> dict[tuple[int, int], int]:
        return dict(self._mu)

    def items(self) -> Iterator[tuple[int, int, LaurentPoly]]:
        for k, col in enumerate(self.columns):
            for j in sorted(col):
                yield j, k, to_laurent(col[j])

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def __eq__(self, other):
        if not isinstance(other, QTable):
            return NotImplemented
        return self.size == other.size and self.columns == other.columns and self._mu == other._mu

    def __repr__(self):
        return f"QTable(size={self.size}, edges={len(self._mu)})"


def _descent_partner(table: IdealTable, k: int, policy: str) -> tuple[int, int]:
    found = [s for s in table.gens if table.kinds[s][k] == SD]
    if not found:
        raise NoStrongDescent(f"element {table.elements[k]} has no strong descent")
    s = found[0] if policy == "first" else found[-1]
    m = table.partners[s][k]
    if m < 0:
        raise NoStrongDescent(f"partner of {table.elements[k]} under s{s} is missing")
    return s, m


def compute_q_table(table: IdealTable, policy: str = "first", keep: str = "all",
                    progress: int = 0) -> QTable:
    """Run the recursion for every pair of ideal elements.

    ``policy`` picks the first or last strong descent of each w_k. ``keep``
    is ``"all"`` (retain every column) or ``"mu"`` (retain only the edge
    weights; columns are freed once the next length level is finished).
    """
    if policy not in ("first", "last"):
        raise ValueError("policy must be 'first' or 'last'")
    if keep not in ("all", "mu"):
        raise ValueError("keep must be 'all' or 'mu'")
    d = len(table)
    desc = table.descents
    sa_partner = {s: [p if kind == SA else -1 for kind, p in zip(table.kinds[s], table.partners[s])]
                  for s in table.gens}
    lengths = table.lengths

    columns: list[dict[int, Dense] | None] = [None] * d
    down_mu: list[list[tuple[int, int]]] = [[] for _ in range(d)]
    mu: dict[tuple[int, int], int] = {}
    if d:
        columns[0] = {}
    free_below = 0  # columns [free_below, ...) may still be referenced

    for k in range(1, d):
        if keep == "mu":
            # column m always has length l(w_k) - 1
            while lengths[free_below] < lengths[k] - 1:
                columns[free_below] = None
                free_below += 1
        s, m = _descent_partner(table, k, policy)
        col_m = columns[m]
        acc: dict[int, list[int]] = {m: [1]}
        sap = sa_partner[s]
        for j, p in col_m.items():
            if s not in desc[j]:
                # q * q_{y,w}
                _add_into(acc, j, (0,) + p)
            elif len(p) > 1:
                # -(q_{y,w} - mu_{y,w}) / q
                _add_into(acc, j, p[1:], -1)
        # q_{sy,w}: y = w_j has strong descent s with s*y = w_i
        for i, p in col_m.items():
            j = sap[i]
            if 0 <= j < k:
                _add_into(acc, j, p)
        for x, p in col_m.items():
            if s in desc[x]:
                continue
            for j, weight in down_mu[x]:
                if s in desc[j]:
                    _add_into(acc, j, p, weight)
        col: dict[int, Dense] = {}
        for j, coeffs in acc.items():
            frozen = _freeze(coeffs)
            if frozen:
                col[j] = frozen
        columns[k] = col
        edges = [(j, p[0]) for j, p in col.items() if p[0]]
        edges.sort()
        down_mu[k] = edges
        for j, weight in edges:
            mu[j, k] = weight
        if progress and k % progress == 0:
            log.info("q-table column %d/%d (length %d), %d edges", k, d, lengths[k], len(mu))

    return QTable(columns if keep == "all" else None, mu, d)


def mu_of(qtable: QTable, i: int, j: int) -> int:
    return qtable.mu(i, j)


def compute_p_table(qtable: QTable) -> QTable:
    """Inverse polynomials: c_w = b_w - q * sum_{y<w} p_{y,w} b_y."""
    if not qtable.complete:
        raise ValueError("p-table needs the full q-table")
    pcols: list[dict[int, Dense]] = []
    for k, qcol in enumerate(qtable.columns):
        acc: dict[int, list[int]] = {j: list(p) for j, p in qcol.items()}
        for x, qxw in qcol.items():
            for y, pyx in pcols[x].items():
                _add_into(acc, y, (0,) + _dmul(pyx, qxw), -1)
        col = {}
        for j, coeffs in acc.items():
            frozen = _freeze(coeffs)
            if frozen:
                col[j] = frozen
        pcols.append(col)
    mu = {}
    for k, col in enumerate(pcols):
        for j, p in col.items():
            if p[0]:
                mu[j, k] = p[0]
    return QTable(pcols, mu, qtable.size)


def kl_polynomials(ptable: QTable, lengths: tuple[int, ...]) -> dict[tuple[int, int], LaurentPoly]:
    """Classical polynomials P_{y,w} from p_{y,w} = (-q)^(l(w)-l(y)-1) P_{y,w}(q^-2).

    Keys are (j, k) index pairs with a nonzero p-polynomial plus the diagonal.
    Values are polynomials in the classical variable.
    """
    out: dict[tuple[int, int], LaurentPoly] = {(k, k): ONE for k in range(ptable.size)}
    for k, col in enumerate(ptable.columns):
        for j, p in col.items():
            gap = lengths[k] - lengths[j] - 1
            if gap < 0:
                raise NotAPolynomial(f"p[{j},{k}] nonzero with l(y) >= l(w)")
            sign = -1 if gap % 2 else 1
            terms = {}
            for e, c in enumerate(p):
                if not c:
                    continue
                e_star = e - gap  # exponent of q in P*(q)
                if e_star > 0 or e_star % 2:
                    raise NotAPolynomial(f"p[{j},{k}] = {to_laurent(p)} is not (-q)^{gap} P(q^-2)")
                terms[-e_star // 2] = sign * c
            out[j, k] = LaurentPoly(terms)
    return out


# ---------------------------------------------------------------------------

@dataclass
class WGraphData:
    """Vertices are ideal indices; tau from the descent sets, mu from the q-table."""

    table: IdealTable
    qtable: QTable
    tau: tuple[GenSet, ...]
    mu: dict[tuple[int, int], int]
    meta: dict = field(default_factory=dict)

    @property
    def vertices(self) -> range:
        return range(len(self.tau))

    def mu_of(self, i: int, j: int) -> int:
        if i == j:
            return 0
        return self.mu.get((min(i, j), max(i, j)), 0)

    @cached_property
    def ptable(self) -> QTable:
        return compute_p_table(self.qtable)

    @cached_property
    def neighbours(self) -> list[list[tuple[int, int]]]:
        nb: list[list[tuple[int, int]]] = [[] for _ in self.tau]
        for (i, j), m in sorted(self.mu.items()):
            nb[i].append((j, m))
            nb[j].append((i, m))
        for row in nb:
            row.sort()
        return nb

    def max_abs_mu(self) -> int:
        return max((abs(m) for m in self.mu.values()), default=0)


def build_wgraph(table: IdealTable, policy: str = "first", keep: str = "all",
                 progress: int = 0, engine: str = "reference", spill: str | None = None) -> WGraphData:
    """``engine="bulk"`` runs the numpy backend (``spill`` as in ``compute_q_table_bulk``)."""
    if engine == "bulk":
        from .bulk import compute_q_table_bulk
        qtable = compute_q_table_bulk(table, policy=policy, keep=keep, progress=progress, spill=spill)
    elif engine == "reference":
        qtable = compute_q_table(table, policy=policy, keep=keep, progress=progress)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return WGraphData(table, qtable, table.descents, qtable.mu_pairs, dict(table.meta))


def cell_decomposition(wg: WGraphData) -> list[list[int]]:
    """Strongly connected components under arcs u -> v with mu(u,v) != 0 and tau(u) not inside tau(v)."""
    g = nx.DiGraph()
    g.add_nodes_from(wg.vertices)
    for (i, j) in wg.mu:
        if not wg.tau[i] <= wg.tau[j]:
            g.add_edge(i, j)
        if not wg.tau[j] <= wg.tau[i]:
            g.add_edge(j, i)
    cells = [sorted(c) for c in nx.strongly_connected_components(g)]
    cells.sort(key=lambda c: c[0])
    return cells


@dataclass
class AuditReport:
    identical: bool
    first_difference: tuple[int, int] | None = None


def choice_independence_audit(table: IdealTable) -> AuditReport:
    """Recompute with the last strong descent instead of the first; tables must agree."""
    a = compute_q_table(table, policy="first")
    b = compute_q_table(table, policy="last")
    if a == b:
        return AuditReport(True)
    for k in range(len(table)):
        if a.columns[k] != b.columns[k]:
            j = min(set(a.columns[k]) ^ set(b.columns[k]) or
                    {j for j in a.columns[k] if a.columns[k][j] != b.columns[k].get(j)})
            raise ChoiceDependence(f"tables differ at ({j}, {k})")
    raise ChoiceDependence("edge tables differ")
