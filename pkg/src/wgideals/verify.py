"""Independent checks of the W-graph engine.

* Hecke relations (quadratic and braid) on the c-basis matrices.
* Conformance of every matrix column with the W-graph action.
* The bar-involution construction of the canonical basis, for ideals whose
  b-basis action is explicit (regular and both parabolic modules).
* Trace comparison against the seminormal form of a Specht module.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .ideal import SA, SD, WA, WD, IdealTable
from .laurent import DELTA, ONE, Q, Q_INV, ZERO, LaurentPoly, RationalFn, RF_ZERO
from .tableaux import axial_distance as tableau_axial
from .tableaux import classify, enumerate_syt, swap
from .wgraph import QTable, WGraphData, from_laurent

Vector = dict  # index -> coefficient


class SplitFailure(ArithmeticError):
    """b_w - bar(b_w) has a coefficient that is not of the form qs - bar(qs)."""


class PoleEncountered(ZeroDivisionError):
    """A seminormal coefficient has a vanishing denominator."""


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def __bool__(self):
        return self.ok

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, "pass" if passed else "fail", "" if passed else detail))

    def extend(self, other: Report) -> Report:
        self.checks.extend(other.checks)
        return self

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status != "pass"]

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks]}


# ---------------------------------------------------------------------------
# sparse linear algebra over an arbitrary coefficient ring

def _axpy(acc: Vector, vec: Vector, scale, zero) -> None:
    for i, c in vec.items():
        v = acc.get(i, zero) + c * scale
        if v == zero:
            acc.pop(i, None)
        else:
            acc[i] = v


def apply(columns: Sequence[Vector], vec: Vector, zero=ZERO) -> Vector:
    """Matrix (given by its columns) times a sparse vector."""
    out: Vector = {}
    for j, c in vec.items():
        _axpy(out, columns[j], c, zero)
    return out


@dataclass
class RepMatrices:
    """One matrix per generator, stored as a list of sparse columns."""

    gens: tuple[int, ...]
    coxeter: dict[tuple[int, int], int]
    mats: dict[int, list[Vector]]
    zero: object = ZERO
    one: object = ONE

    @property
    def dim(self) -> int:
        return len(next(iter(self.mats.values()))) if self.mats else 0

    def apply_word(self, word: Iterable[int], vec: Vector) -> Vector:
        """T_{a1} T_{a2} ... T_{ak} v: the last letter acts first."""
        for s in reversed(tuple(word)):
            vec = apply(self.mats[s], vec, self.zero)
        return vec

    def trace(self, word: Sequence[int]):
        total = self.zero
        for j in range(self.dim):
            total = total + self.apply_word(word, {j: self.one}).get(j, self.zero)
        return total


def c_basis_matrices(wg: WGraphData) -> RepMatrices:
    """Action of each T_s on the canonical basis, column by column."""
    table = wg.table
    tau = wg.tau
    d = len(table)
    lower: list[list[tuple[int, int]]] = [[] for _ in range(d)]
    for (i, j), m in wg.mu.items():
        lower[j].append((i, m))
    mats = {}
    for s in table.gens:
        cols = []
        for w in range(d):
            if s in tau[w]:
                cols.append({w: -Q_INV})
                continue
            col: Vector = {w: Q}
            for y, m in lower[w]:
                if s in tau[y]:
                    col[y] = LaurentPoly.const(m)
            if table.kinds[s][w] == SA:
                p = table.partners[s][w]
                col[p] = col.get(p, ZERO) + ONE
            cols.append(col)
        mats[s] = cols
    return RepMatrices(table.gens, _coxeter_entries(table), mats)


def _coxeter_entries(table: IdealTable) -> dict[tuple[int, int], int]:
    return {(s, t): table.group.coxeter_entry(s, t) for s in table.gens for t in table.gens}


def check_quadratic(m: RepMatrices) -> Report:
    """T_s^2 = 1 + (q - q^-1) T_s on every basis vector."""
    report = Report()
    for s in m.gens:
        bad = None
        for j in range(m.dim):
            e = {j: m.one}
            t1 = apply(m.mats[s], e, m.zero)
            lhs = apply(m.mats[s], t1, m.zero)
            rhs = dict(e)
            _axpy(rhs, t1, _delta_like(m), m.zero)
            if lhs != rhs:
                bad = j
                break
        report.add(f"quadratic(s{s})", bad is None, f"fails on basis vector {bad}")
    return report


def _delta_like(m: RepMatrices):
    return DELTA if m.zero == ZERO else RationalFn(DELTA)


def check_braid(m: RepMatrices, coxeter: dict[tuple[int, int], int] | None = None) -> Report:
    """(T_s T_t ...) = (T_t T_s ...) with m(s,t) factors on each side."""
    coxeter = coxeter or m.coxeter
    report = Report()
    for a, s in enumerate(m.gens):
        for t in m.gens[a + 1:]:
            order = coxeter[s, t]
            left = tuple(s if i % 2 == 0 else t for i in range(order))
            right = tuple(t if i % 2 == 0 else s for i in range(order))
            bad = None
            for j in range(m.dim):
                e = {j: m.one}
                if m.apply_word(left, e) != m.apply_word(right, e):
                    bad = j
                    break
            report.add(f"braid(s{s},s{t})", bad is None, f"fails on basis vector {bad}")
    return report


def check_relations(m: RepMatrices) -> Report:
    return check_quadratic(m).extend(check_braid(m))


def wgraphdef_conformance(wg: WGraphData, m: RepMatrices) -> Report:
    """Each column must read -q^-1 v, or q v + sum of mu(u,v) u over u with s in tau(u)."""
    report = Report()
    tau = wg.tau
    nb = wg.neighbours
    for s in m.gens:
        bad = None
        for v in range(len(tau)):
            if s in tau[v]:
                expected = {v: -Q_INV}
            else:
                expected = {v: Q}
                for u, weight in nb[v]:
                    if s in tau[u]:
                        expected[u] = LaurentPoly.const(weight)
            col = m.mats[s][v]
            if col != expected:
                bad = v
                break
            # bar(T_s v) = (T_s - (q - q^-1)) v for a bar-invariant basis vector
            barred = {i: c.bar() for i, c in col.items()}
            shifted = dict(col)
            _axpy(shifted, {v: ONE}, -DELTA, ZERO)
            if barred != shifted:
                bad = v
                break
        report.add(f"wgraphdef(s{s})", bad is None, f"column {bad} does not conform")
    return report


# ---------------------------------------------------------------------------
# bar-involution oracle

FAMILIES = ("regular", "parabolic-psi", "parabolic-phi")


def _b_action(table: IdealTable, s: int, w: int) -> Vector:
    """T_s b_w when every correction polynomial r vanishes."""
    kind = table.kinds[s][w]
    if kind == SA:
        return {table.partners[s][w]: ONE}
    if kind == SD:
        return {table.partners[s][w]: ONE, w: DELTA}
    if kind == WD:
        return {w: -Q_INV}
    return {w: Q}


def _check_family(table: IdealTable, family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    kinds = {k for s in table.gens for k in table.kinds[s]}
    if family == "regular" and (table.J or kinds & {WA, WD}):
        raise ValueError("regular family needs J empty and no weak classes")
    if family == "parabolic-psi" and (table.J or WD in kinds):
        raise ValueError("psi family needs J empty and no weak descents")
    if family == "parabolic-phi" and WA in kinds:
        raise ValueError("phi family has no weak ascents")


def bar_oracle(table: IdealTable, family: str) -> QTable:
    """q-polynomials from the explicit bar involution on the b-basis.

    bar(b_w) is built from bar(b_sw) = (T_s - (q - q^-1)) bar(b_w) along strong
    ascents. Then b_w - bar(b_w) is expanded in the already known c_y, each
    coefficient is split as qs - bar(qs) with s in Z[q], and s is q_{y,w}.
    """
    _check_family(table, family)
    d = len(table)
    barb: list[Vector] = [{0: ONE}] if d else []
    cvec: list[Vector] = [{0: ONE}] if d else []
    columns: list[dict] = [{}] if d else []
    mu: dict[tuple[int, int], int] = {}
    for w in range(1, d):
        s = next(s for s in table.gens if table.kinds[s][w] == SD)
        u = table.partners[s][w]
        img: Vector = {}
        for y, c in barb[u].items():
            _axpy(img, _b_action(table, s, y), c, ZERO)
        _axpy(img, barb[u], -DELTA, ZERO)
        barb.append(img)

        diff: Vector = {w: ONE}
        _axpy(diff, img, -ONE, ZERO)
        qcol: dict[int, LaurentPoly] = {}
        while diff:
            y = max(diff)
            if y >= w:
                raise SplitFailure(f"bar(b_{w}) - b_{w} is not supported below w")
            r = diff[y]
            if r.bar() != -r or r.constant_term():
                raise SplitFailure(f"coefficient {r} at ({y}, {w}) is not qs - bar(qs)")
            pos = LaurentPoly((e, c) for e, c in r.terms if e > 0)
            qcol[y] = pos.exact_div_q()
            _axpy(diff, cvec[y], -r, ZERO)
        c_w: Vector = {w: ONE}
        for y, p in qcol.items():
            _axpy(c_w, cvec[y], -(Q * p), ZERO)
        cvec.append(c_w)
        columns.append({y: from_laurent(p) for y, p in qcol.items()})
        for y, p in qcol.items():
            if p.constant_term():
                mu[y, w] = p.constant_term()
    return QTable(columns, mu, d)


# ---------------------------------------------------------------------------
# seminormal form

def p1(d: int) -> RationalFn:
    """(q^2 - 1) / (q - q^(2d+1))."""
    den = Q - LaurentPoly.monomial(2 * d + 1)
    if den.is_zero():
        raise PoleEncountered(f"axial distance {d}")
    return RationalFn(Q * Q - ONE, den)


def p2(d: int) -> RationalFn:
    """(1 - q^(2d+2)) / (q - q^(2d+1))."""
    den = Q - LaurentPoly.monomial(2 * d + 1)
    if den.is_zero():
        raise PoleEncountered(f"axial distance {d}")
    return RationalFn(ONE - LaurentPoly.monomial(2 * d + 2), den)


def axial_distance(t, i: int) -> int:
    """Axial distance as it enters p1 and p2: (x2 - y2) - (x1 - y1).

    Taken literally, d = (x1 - y1) - (x2 - y2) gives matrices that break the
    braid relation already for (2,1), and the traces disagree with every
    W-graph; the opposite sign yields a representation.
    """
    return -tableau_axial(t, i)


@dataclass
class SeminormalRep(RepMatrices):
    tableaux: list = field(default_factory=list)


def seminormal_matrices(lam: Sequence[int]) -> SeminormalRep:
    tabs = enumerate_syt(lam)
    index = {t: j for j, t in enumerate(tabs)}
    n = sum(lam)
    gens = tuple(range(1, n))
    rf_q, rf_qinv = RationalFn(Q), RationalFn(-Q_INV)
    mats = {}
    for i in gens:
        cols = []
        for t in tabs:
            kind = classify(t, i)
            if kind == WD:
                cols.append({index[t]: rf_qinv})
            elif kind == WA:
                cols.append({index[t]: rf_q})
            else:
                d = axial_distance(t, i)
                cols.append({index[t]: p1(d), index[swap(t, i)]: p2(d)})
        mats[i] = cols
    coxeter = {(s, t): 1 if s == t else 3 if abs(s - t) == 1 else 2 for s in gens for t in gens}
    return SeminormalRep(gens, coxeter, mats, RF_ZERO, RationalFn(ONE), tabs)


def default_words(gens: Sequence[int], max_len: int = 4, n_random: int = 64,
                  random_max_len: int = 10, seed: int = 0) -> list[tuple[int, ...]]:
    words = [w for k in range(max_len + 1) for w in product(gens, repeat=k)]
    rng = random.Random(seed)
    for _ in range(n_random if gens else 0):
        k = rng.randint(1, random_max_len)
        words.append(tuple(rng.choice(gens) for _ in range(k)))
    return words


def _traces(m: RepMatrices, words: Sequence[tuple[int, ...]]) -> list:
    # T_{a} T_{u} e_j is obtained from T_{u} e_j, so cache images by word
    cache: dict[tuple[int, ...], list[Vector]] = {(): [{j: m.one} for j in range(m.dim)]}

    def images(word):
        if word not in cache:
            rest = images(word[1:])
            cache[word] = [apply(m.mats[word[0]], v, m.zero) for v in rest]
        return cache[word]

    out = []
    for word in words:
        imgs = images(tuple(word))
        total = m.zero
        for j, v in enumerate(imgs):
            total = total + v.get(j, m.zero)
        out.append(total)
        if len(word) > 6:
            cache.pop(tuple(word), None)
    return out


def char_compare(a: RepMatrices, b: RepMatrices, words: Sequence[tuple[int, ...]] | None = None) -> Report:
    """Equal traces of T_word in both representations, as rational functions."""
    words = default_words(a.gens) if words is None else [tuple(w) for w in words]
    report = Report()
    ta, tb = _traces(a, words), _traces(b, words)
    bad = [w for w, x, y in zip(words, ta, tb) if _as_rf(x) != _as_rf(y)]
    report.add(f"characters({len(words)} words)", not bad, f"first mismatch on word {bad[:1]}")
    return report


def _as_rf(x) -> RationalFn:
    return x if isinstance(x, RationalFn) else RationalFn(x)


def specht_character_check(wg: WGraphData, lam: Sequence[int], words=None) -> Report:
    return char_compare(c_basis_matrices(wg), seminormal_matrices(lam), words)


def verify_wgraph(wg: WGraphData, level: str = "relations") -> Report:
    """Relations and conformance; ``full`` adds the applicable independent oracle."""
    m = c_basis_matrices(wg)
    report = check_relations(m).extend(wgraphdef_conformance(wg, m))
    if level == "full":
        family = wg.table.meta.get("family")
        if family == "regular":
            report.add("bar_oracle(regular)", bar_oracle(wg.table, "regular") == wg.qtable)
        elif family == "parabolic":
            fam = "parabolic-" + wg.table.meta["variant"]
            report.add(f"bar_oracle({fam})", bar_oracle(wg.table, fam) == wg.qtable)
        elif family == "specht" and len(wg.table.gens) == wg.table.group.rank:
            report.extend(specht_character_check(wg, wg.table.meta["lambda"]))
    return report
