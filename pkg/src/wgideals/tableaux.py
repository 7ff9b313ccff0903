"""Partitions, standard tableaux and their link to the symmetric group.

A tableau of shape lam is identified with the permutation w such that
t = w * tab_lam, where tab_lam fills the columns with consecutive numbers.
Boxes are 1-indexed (row, column).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from .coxeter import GenSet, Perm, TypeA


class ShapeMismatch(ValueError):
    """Raised when a tableau and a shape disagree."""


SA, SD, WA, WD = "SA", "SD", "WA", "WD"


def check_partition(lam: Iterable[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if not lam or any(x <= 0 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam!r}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {lam!r}")
    return lam


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0])) if lam else ()


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n, in reverse lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(rest, bound, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(rest, bound), 0, -1):
            rec(rest - k, k, prefix + [k])

    rec(n, n, [])
    return out


def hook_length_count(lam: Sequence[int]) -> int:
    lam = check_partition(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(lam)) // prod


def boxes(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Boxes in row-reading order."""
    return [(i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1)]


@dataclass(frozen=True)
class StandardTableau:
    shape: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ShapeMismatch(f"rows {self.rows} do not have shape {self.shape}")
        n = sum(self.shape)
        if sorted(x for r in self.rows for x in r) != list(range(1, n + 1)):
            raise ValueError("tableau entries must be 1..n")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> StandardTableau:
        rows = tuple(tuple(r) for r in rows)
        return cls(tuple(len(r) for r in rows), rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    @cached_property
    def _positions(self) -> dict[int, tuple[int, int]]:
        return {x: (i, j) for i, r in enumerate(self.rows, 1) for j, x in enumerate(r, 1)}

    def row_of(self, x: int) -> int:
        return self._positions[x][0]

    def col_of(self, x: int) -> int:
        return self._positions[x][1]

    def is_standard(self) -> bool:
        rows_ok = all(a < b for r in self.rows for a, b in zip(r, r[1:]))
        cols_ok = all(
            self.rows[i][j] < self.rows[i + 1][j]
            for i in range(len(self.rows) - 1)
            for j in range(len(self.rows[i + 1]))
        )
        return rows_ok and cols_ok

    def act(self, w: Perm) -> StandardTableau:
        """The tableau w*t, replacing each entry x by w(x)."""
        return StandardTableau(self.shape, tuple(tuple(w[x - 1] for x in r) for r in self.rows))

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> StandardTableau:
        t = cls.from_rows(data["rows"])
        if list(t.shape) != list(data["shape"]):
            raise ShapeMismatch("shape field disagrees with rows")
        return t

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self.rows)


def tab_sup_lambda(lam: Sequence[int]) -> StandardTableau:
    """Rows filled with consecutive numbers."""
    lam = check_partition(lam)
    rows, k = [], 1
    for part in lam:
        rows.append(tuple(range(k, k + part)))
        k += part
    return StandardTableau(lam, tuple(rows))


def tab_lambda(lam: Sequence[int]) -> StandardTableau:
    """Columns filled with consecutive numbers (transpose of tab^lam')."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    cells: dict[tuple[int, int], int] = {}
    k = 1
    for j, height in enumerate(conj, 1):
        for i in range(1, height + 1):
            cells[i, j] = k
            k += 1
    return StandardTableau(lam, tuple(tuple(cells[i, j] for j in range(1, part + 1))
                                      for i, part in enumerate(lam, 1)))


def word_of(t: StandardTableau) -> Perm:
    """The permutation w with t = w * tab_lambda."""
    base = tab_lambda(t.shape)
    w = [0] * t.n
    for r_base, r_t in zip(base.rows, t.rows):
        for a, b in zip(r_base, r_t):
            w[a - 1] = b
    return tuple(w)


def tableau_of(w: Perm, lam: Sequence[int]) -> StandardTableau:
    lam = check_partition(lam)
    if len(w) != sum(lam):
        raise ShapeMismatch(f"permutation of degree {len(w)} for a partition of {sum(lam)}")
    return tab_lambda(lam).act(w)


def v_lambda(lam: Sequence[int]) -> Perm:
    """The permutation carrying tab_lambda to tab^lambda."""
    return word_of(tab_sup_lambda(lam))


def j_lambda(lam: Sequence[int]) -> GenSet:
    """Generators s_i with i, i+1 in the same column of tab_lambda."""
    t = tab_lambda(lam)
    return GenSet(i for i in range(1, t.n) if t.col_of(i) == t.col_of(i + 1))


def enumerate_syt(lam: Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux, ordered by (length, one-line notation of the word)."""
    lam = check_partition(lam)
    n = sum(lam)
    found: list[StandardTableau] = []

    # place 1..n successively at outer corners
    def rec(filled: list[list[int]], k: int):
        if k > n:
            found.append(StandardTableau.from_rows(filled))
            return
        for i, part in enumerate(lam):
            row = filled[i]
            if len(row) < part and (i == 0 or len(filled[i - 1]) > len(row)):
                row.append(k)
                rec(filled, k + 1)
                row.pop()

    rec([[] for _ in lam], 1)
    group = TypeA(n)
    found.sort(key=lambda t: (group.length(word_of(t)), word_of(t)))
    return found


def tableau_length(t: StandardTableau) -> int:
    return TypeA(t.n).length(word_of(t))


def classify(t: StandardTableau, i: int) -> str:
    """Four-way class of i in [1, n-1] for a standard tableau."""
    if not 1 <= i < t.n:
        raise ValueError(f"index {i} out of range 1..{t.n - 1}")
    pos = t._positions
    (r1, c1), (r2, c2) = pos[i], pos[i + 1]
    if r1 == r2:
        return WA
    if c1 == c2:
        return WD
    if c1 > c2:
        return SD
    return SA


def axial_distance(t: StandardTableau, i: int) -> int:
    """(row - col of i) - (row - col of i+1)."""
    pos = t._positions
    (x1, y1), (x2, y2) = pos[i], pos[i + 1]
    return (x1 - y1) - (x2 - y2)


def swap(t: StandardTableau, i: int) -> StandardTableau:
    """s_i * t: exchange the entries i and i+1."""
    return StandardTableau(t.shape, tuple(
        tuple(i + 1 if x == i else i if x == i + 1 else x for x in r) for r in t.rows))
