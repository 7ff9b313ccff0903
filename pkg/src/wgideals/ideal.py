"""W-graph ideals and their index tables.

An ``IdealTable`` lists the elements of a suffix-closed set in
length-nondecreasing order and records, for every generator s and element
w_j, one of four classes:

* strong ascent / strong descent: s*w_j = w_k is in the ideal (k > j / k < j)
* weak ascent / weak descent: s*w_j leaves the ideal, and s*w_j is / is not
  in D_J.

The W-graph engine only ever reads this table, never the group itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .coxeter import CoxeterGroup, GenSet, TypeA
from .tableaux import check_partition, j_lambda, v_lambda

SA, SD, WA, WD = "SA", "SD", "WA", "WD"


class JNotInPos(ValueError):
    """Some s in J is a right descent of an ideal element."""


class ConjugacyViolation(ValueError):
    """An element of J1 is conjugate in W_J to an element of J2."""


@dataclass(frozen=True, eq=False)
class IdealTable:
    """Index table of an ideal of (W_gens, <=_L) relative to J.

    ``kinds[s][j]`` is one of SA/SD/WA/WD and ``partners[s][j]`` is the index
    of s*w_j for strong classes, -1 otherwise.
    """

    group: CoxeterGroup
    gens: tuple[int, ...]
    J: GenSet
    elements: tuple
    lengths: tuple[int, ...]
    kinds: dict[int, tuple[str, ...]]
    partners: dict[int, tuple[int, ...]]
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.elements)

    @cached_property
    def index(self) -> dict:
        return {w: j for j, w in enumerate(self.elements)}

    @cached_property
    def descents(self) -> tuple[GenSet, ...]:
        """D(w_j) = SD(w_j) | WD(w_j) for every j."""
        return tuple(
            GenSet(s for s in self.gens if self.kinds[s][j] in (SD, WD))
            for j in range(len(self.elements))
        )

    def classes(self, j: int) -> dict[str, GenSet]:
        out = {k: set() for k in (SA, SD, WA, WD)}
        for s in self.gens:
            out[self.kinds[s][j]].add(s)
        return {k: GenSet(v) for k, v in out.items()}

    def tab_array(self) -> dict[int, list[int]]:
        """Signed 1-based encoding: partner index for strong, +j weak ascent, -j weak descent."""
        out = {}
        for s in self.gens:
            row = []
            for j, kind in enumerate(self.kinds[s]):
                if kind in (SA, SD):
                    row.append(self.partners[s][j] + 1)
                elif kind == WA:
                    row.append(j + 1)
                else:
                    row.append(-(j + 1))
            out[s] = row
        return out

    def to_json(self) -> dict:
        return {
            "group": _group_json(self.group),
            "gens": list(self.gens),
            "J": sorted(self.J),
            "elements": [self.group.to_json(w) for w in self.elements],
            "tab": {str(s): row for s, row in self.tab_array().items()},
            "meta": _jsonable(self.meta),
        }

    @classmethod
    def from_json(cls, data: dict) -> IdealTable:
        group = _group_from_json(data["group"])
        elements = [group.from_json(w) for w in data["elements"]]
        return from_parts(group, data["J"], elements, gens=data["gens"], meta=data.get("meta", {}))


def _group_json(group: CoxeterGroup) -> dict:
    if group.kind == "A":
        return {"type": "A", "n": group.n}
    return {"type": "I2", "m": group.m}


def _group_from_json(data: dict) -> CoxeterGroup:
    from .coxeter import Dihedral

    if data["type"] == "A":
        return TypeA(data["n"])
    if data["type"] == "I2":
        return Dihedral(data["m"])
    raise ValueError(f"unknown group type {data['type']!r}")


def _jsonable(meta: dict) -> dict:
    out = {}
    for k, v in meta.items():
        if isinstance(v, (frozenset, set)):
            v = sorted(v)
        elif isinstance(v, tuple):
            v = list(v)
        out[k] = v
    return out


def from_parts(group: CoxeterGroup, J: Iterable[int], elements: Iterable,
               gens: Iterable[int] | None = None, meta: dict | None = None) -> IdealTable:
    """Classify a given element list without checking any ideal property.

    Elements are sorted by (length, sort key). ``validate`` reports whatever
    is wrong with the result.
    """
    gens = tuple(sorted(group.generators if gens is None else gens))
    J = GenSet(J)
    elems = sorted(set(elements), key=lambda w: (group.length(w), group.sort_key(w)))
    index = {w: j for j, w in enumerate(elems)}
    lengths = tuple(group.length(w) for w in elems)
    kinds: dict[int, tuple[str, ...]] = {}
    partners: dict[int, tuple[int, ...]] = {}
    for s in gens:
        krow, prow = [], []
        for j, w in enumerate(elems):
            v = group.lmul(s, w)
            if group.left_descends(s, w):
                krow.append(SD)
                prow.append(index.get(v, -1))
            elif v in index:
                krow.append(SA)
                prow.append(index[v])
            elif group.in_D(v, J):
                krow.append(WA)
                prow.append(-1)
            else:
                krow.append(WD)
                prow.append(-1)
        kinds[s] = tuple(krow)
        partners[s] = tuple(prow)
    return IdealTable(group, gens, J, tuple(elems), lengths, kinds, partners, dict(meta or {}))


def suffix_closure(group: CoxeterGroup, generators: Iterable, gens: Sequence[int]) -> set:
    closed = set()
    stack = list(generators)
    while stack:
        w = stack.pop()
        if w in closed:
            continue
        closed.add(w)
        for s in gens:
            if group.left_descends(s, w):
                stack.append(group.lmul(s, w))
    return closed


def build_from_elements(group: CoxeterGroup, J: Iterable[int], generators: Iterable,
                        gens: Iterable[int] | None = None, meta: dict | None = None) -> IdealTable:
    """Ideal generated by ``generators`` under <=_L, classified relative to J.

    Raises JNotInPos if some s in J is a right descent of an element.
    """
    gens = tuple(sorted(group.generators if gens is None else gens))
    J = GenSet(J)
    if not J <= set(gens):
        raise ValueError(f"J = {sorted(J)} is not a subset of the generators {list(gens)}")
    generators = list(generators)
    for w in generators:
        if not group.in_parabolic(w, gens):
            raise ValueError(f"{w} is not in the parabolic subgroup generated by {list(gens)}")
    closed = suffix_closure(group, generators, gens)
    for x in closed:
        for s in J:
            if group.right_descends(x, s):
                raise JNotInPos(f"s{s} in J is a right descent of {x}")
    return from_parts(group, J, closed, gens=gens, meta=meta)


@dataclass
class ValidationReport:
    ok: bool
    violation: str | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def validate(table: IdealTable) -> ValidationReport:
    """Check every invariant of an ideal table; the first violation is reported."""
    group, elems = table.group, table.elements
    if len(set(elems)) != len(elems):
        return ValidationReport(False, "DuplicateElements")
    if not elems or elems[0] != group.identity:
        return ValidationReport(False, "IdentityNotFirst")
    index = table.index
    for w in elems:
        for s in table.gens:
            if group.left_descends(s, w) and group.lmul(s, w) not in index:
                return ValidationReport(False, "NotSuffixClosed", f"s{s}*{w} missing")
    for w in elems:
        for s in table.J:
            if group.right_descends(w, s):
                return ValidationReport(False, "JNotInPos", f"s{s} right descent of {w}")
    if any(a > b for a, b in zip(table.lengths, table.lengths[1:])):
        return ValidationReport(False, "LengthOrder")
    if tuple(group.length(w) for w in elems) != table.lengths:
        return ValidationReport(False, "LengthMismatch")
    fresh = from_parts(group, table.J, elems, gens=table.gens)
    for s in table.gens:
        if fresh.kinds[s] != table.kinds[s] or fresh.partners[s] != table.partners[s]:
            return ValidationReport(False, "Misclassified", f"generator s{s}")
        for j, (kind, k) in enumerate(zip(table.kinds[s], table.partners[s])):
            if kind in (SA, SD):
                back = SD if kind == SA else SA
                if table.kinds[s][k] != back or table.partners[s][k] != j:
                    return ValidationReport(False, "PartnerMismatch", f"s{s} at {j}")
    if table.descents[0] != table.J:
        return ValidationReport(False, "IdentityDescents", f"{sorted(table.descents[0])} != J")
    return ValidationReport(True)


# ---------------------------------------------------------------------------
# families

def regular_ideal(group: CoxeterGroup, gens: Iterable[int] | None = None) -> IdealTable:
    """All of W_gens, with J empty."""
    gens = tuple(sorted(group.generators if gens is None else gens))
    top = group.longest_element(gens)
    return build_from_elements(group, (), [top], gens=gens, meta={"family": "regular"})


def parabolic_ideal(group: CoxeterGroup, J: Iterable[int], variant: str = "psi",
                    gens: Iterable[int] | None = None) -> IdealTable:
    """D_J, relative to the empty set (``psi``) or to J (``phi``)."""
    if variant not in ("psi", "phi"):
        raise ValueError(f"variant must be 'psi' or 'phi', not {variant!r}")
    gens = tuple(sorted(group.generators if gens is None else gens))
    J = GenSet(J)
    d_J, _ = group.coset_decompose(group.longest_element(gens), J)
    respect = GenSet() if variant == "psi" else J
    return build_from_elements(group, respect, [d_J], gens=gens,
                               meta={"family": "parabolic", "variant": variant, "parabolic_J": J})


def specht_ideal(lam: Sequence[int], n: int | None = None) -> IdealTable:
    """Ideal generated by v_lambda relative to J_lambda, inside S_n (n >= |lam|).

    With n > |lam| the ideal lives in the parabolic subgroup on 1..|lam|.
    """
    lam = check_partition(lam)
    size = sum(lam)
    n = size if n is None else n
    if n < size:
        raise ValueError(f"n = {n} is smaller than |lambda| = {size}")
    group = TypeA(n)
    v = v_lambda(lam) + tuple(range(size + 1, n + 1))
    return build_from_elements(group, j_lambda(lam), [v], gens=range(1, size),
                               meta={"family": "specht", "lambda": lam})


def induced_ideal(K: Iterable[int], inner: IdealTable, gens: Iterable[int] | None = None) -> IdealTable:
    """D_K * I0 for an ideal I0 of W_K, relative to the same J."""
    group = inner.group
    K = GenSet(K)
    if GenSet(inner.gens) != K:
        raise ValueError(f"inner ideal lives on generators {list(inner.gens)}, not K = {sorted(K)}")
    gens = tuple(sorted(group.generators if gens is None else gens))
    if not K <= set(gens):
        raise ValueError("K must be a subset of the generators")
    reps = [d for d in group.elements(gens) if group.in_D(d, K)]
    products = {group.multiply(d, z) for d in reps for z in inner.elements}
    meta = {"family": "induced", "K": K, "inner": dict(inner.meta)}
    table = build_from_elements(group, inner.J, products, gens=gens, meta=meta)
    if len(table) != len(reps) * len(inner):
        raise AssertionError("induced ideal has the wrong size")
    return table


def one_dim_ideal(group: CoxeterGroup, J1: Iterable[int], J2: Iterable[int]) -> IdealTable:
    """The identity alone in W_{J1 u J2}: weak descents J1, weak ascents J2."""
    J1, J2 = GenSet(J1), GenSet(J2)
    if J1 & J2:
        raise ValueError("J1 and J2 must be disjoint")
    comp = group.odd_components(J1 | J2)
    if {comp[s] for s in J1} & {comp[s] for s in J2}:
        raise ConjugacyViolation(f"J1 = {sorted(J1)} and J2 = {sorted(J2)} share a conjugacy class")
    return build_from_elements(group, J1, [group.identity], gens=J1 | J2,
                               meta={"family": "onedim", "J1": J1, "J2": J2})
