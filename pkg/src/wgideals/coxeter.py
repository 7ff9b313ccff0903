"""Finite Coxeter group backends.

Two backends share one interface: the symmetric group in one-line notation
(``TypeA``) and the dihedral group I2(m) with elements stored as reduced
words (``Dihedral``). Generators are numbered from 1. Products use the
left-operator convention, so ``lmul(s, w)`` is ``s*w`` and acts on values
while ``rmul(w, s)`` is ``w*s`` and acts on positions.
"""
from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

Perm = tuple  # one-line notation (w(1), ..., w(n))
GenSet = frozenset


class UnsupportedType(ValueError):
    """Raised for Coxeter matrices that are neither type A nor dihedral."""


class CoxeterGroup:
    """Common operations, written against the small per-backend primitives."""

    rank: int

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    # backend primitives
    @property
    def identity(self) -> Hashable:
        raise NotImplementedError

    def lmul(self, s: int, w):
        raise NotImplementedError

    def rmul(self, w, s: int):
        raise NotImplementedError

    def length(self, w) -> int:
        raise NotImplementedError

    def inverse(self, w):
        raise NotImplementedError

    def multiply(self, u, w):
        raise NotImplementedError

    def bruhat_leq(self, u, w) -> bool:
        raise NotImplementedError

    def coxeter_entry(self, s: int, t: int) -> int:
        raise NotImplementedError

    def sort_key(self, w):
        return w

    def to_json(self, w):
        return list(w)

    def from_json(self, data):
        return tuple(data)

    # derived operations
    @cached_property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        r = self.rank
        return tuple(
            tuple(self.coxeter_entry(s, t) for t in range(1, r + 1)) for s in range(1, r + 1)
        )

    def left_descends(self, s: int, w) -> bool:
        return self.length(self.lmul(s, w)) < self.length(w)

    def right_descends(self, w, s: int) -> bool:
        return self.length(self.rmul(w, s)) < self.length(w)

    def left_descent_set(self, w) -> GenSet:
        return GenSet(s for s in self.generators if self.left_descends(s, w))

    def right_descent_set(self, w) -> GenSet:
        return GenSet(s for s in self.generators if self.right_descends(w, s))

    def from_word(self, word: Iterable[int]):
        """The product s_{a1} s_{a2} ... of a generator sequence."""
        w = self.identity
        for s in reversed(list(word)):
            w = self.lmul(s, w)
        return w

    def reduced_word(self, w) -> tuple[int, ...]:
        word = []
        while self.length(w):
            s = next(s for s in self.generators if self.left_descends(s, w))
            word.append(s)
            w = self.lmul(s, w)
        return tuple(word)

    def suffix_leq(self, u, w) -> bool:
        """u <=_L w, i.e. l(w u^-1) = l(w) - l(u): u is a suffix of w."""
        return self.length(self.multiply(w, self.inverse(u))) == self.length(w) - self.length(u)

    def in_parabolic(self, w, J: Iterable[int]) -> bool:
        d, _ = self.coset_decompose(w, J)
        return d == self.identity

    def in_D(self, w, J: Iterable[int]) -> bool:
        """w is the minimal-length element of its left coset w W_J."""
        return not any(self.right_descends(w, s) for s in J)

    def coset_decompose(self, w, J: Iterable[int]):
        """Return (d, u) with w = d*u, d in D_J, u in W_J and lengths adding."""
        J = tuple(sorted(J))
        d = w
        u_word = []
        moved = True
        while moved:
            moved = False
            for s in J:
                if self.right_descends(d, s):
                    d = self.rmul(d, s)
                    u_word.append(s)
                    moved = True
                    break
        u = self.from_word(reversed(u_word))
        return d, u

    def pos_set(self, X: Iterable) -> GenSet:
        """Largest J with X inside D_J."""
        X = list(X)
        if not X:
            raise ValueError("pos_set needs a nonempty set")
        return GenSet(s for s in self.generators if not any(self.right_descends(x, s) for x in X))

    def longest_element(self, J: Iterable[int] | None = None):
        J = self.generators if J is None else tuple(sorted(J))
        w = self.identity
        grown = True
        while grown:
            grown = False
            for s in J:
                if not self.right_descends(w, s):
                    w = self.rmul(w, s)
                    grown = True
                    break
        return w

    def min_coset_rep_longest(self, J: Iterable[int]):
        """d_J: the element of D_J in the coset w_S W_J."""
        d, _ = self.coset_decompose(self.longest_element(), J)
        return d

    def elements(self, J: Iterable[int] | None = None) -> list:
        """All elements of W_J (all of W by default), ordered by (length, sort key)."""
        gens = self.generators if J is None else tuple(sorted(J))
        seen = {self.identity}
        frontier = deque([self.identity])
        while frontier:
            w = frontier.popleft()
            for s in gens:
                v = self.lmul(s, w)
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        return sorted(seen, key=lambda w: (self.length(w), self.sort_key(w)))

    def minimal_coset_reps(self, J: Iterable[int]) -> list:
        J = tuple(J)
        return [w for w in self.elements() if self.in_D(w, J)]

    def conjugate(self, w, s: int):
        """w^-1 s w."""
        return self.multiply(self.inverse(w), self.lmul(s, w))

    def generator_element(self, s: int):
        return self.lmul(s, self.identity)

    def odd_components(self, J: Iterable[int]) -> dict[int, int]:
        """Map each s in J to a representative of its W_J-conjugacy class.

        Simple reflections are conjugate in W_J exactly when they are joined
        by a path of odd-labelled edges in the Coxeter graph of J.
        """
        J = sorted(J)
        parent = {s: s for s in J}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, s in enumerate(J):
            for t in J[i + 1:]:
                if self.coxeter_entry(s, t) % 2 == 1:
                    parent[find(s)] = find(t)
        return {s: find(s) for s in J}


class TypeA(CoxeterGroup):
    """The symmetric group S_n; s_i is the transposition (i, i+1)."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.rank = n - 1

    def __repr__(self):
        return f"TypeA({self.n})"

    def __eq__(self, other):
        return isinstance(other, TypeA) and other.n == self.n

    def __hash__(self):
        return hash(("A", self.n))

    @property
    def kind(self) -> str:
        return "A"

    @property
    def identity(self) -> Perm:
        return tuple(range(1, self.n + 1))

    def _check_gen(self, s):
        if not 1 <= s <= self.rank:
            raise ValueError(f"generator {s} out of range 1..{self.rank}")

    def lmul(self, s: int, w: Perm) -> Perm:
        self._check_gen(s)
        return tuple(s + 1 if x == s else s if x == s + 1 else x for x in w)

    def rmul(self, w: Perm, s: int) -> Perm:
        self._check_gen(s)
        w = list(w)
        w[s - 1], w[s] = w[s], w[s - 1]
        return tuple(w)

    def length(self, w: Perm) -> int:
        n = len(w)
        return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])

    def left_descends(self, s: int, w: Perm) -> bool:
        return w.index(s) > w.index(s + 1)

    def right_descends(self, w: Perm, s: int) -> bool:
        return w[s - 1] > w[s]

    def inverse(self, w: Perm) -> Perm:
        inv = [0] * len(w)
        for i, x in enumerate(w, 1):
            inv[x - 1] = i
        return tuple(inv)

    def multiply(self, u: Perm, w: Perm) -> Perm:
        return tuple(u[x - 1] for x in w)

    def bruhat_leq(self, u: Perm, w: Perm) -> bool:
        """Tableau criterion: sorted prefixes of u are dominated by those of w."""
        if len(u) != len(w):
            raise ValueError("permutations of different degree")
        su: list[int] = []
        sw: list[int] = []
        for k in range(len(u) - 1):
            _insort(su, u[k])
            _insort(sw, w[k])
            if any(a > b for a, b in zip(su, sw)):
                return False
        return True

    def coxeter_entry(self, s: int, t: int) -> int:
        if s == t:
            return 1
        return 3 if abs(s - t) == 1 else 2

    def coset_decompose(self, w: Perm, J: Iterable[int]):
        J = set(J)
        d = list(w)
        i = 0
        n = self.n
        while i < n:
            j = i
            while j + 1 < n and (j + 1) in J:
                j += 1
            d[i:j + 1] = sorted(d[i:j + 1])
            i = j + 1
        d = tuple(d)
        return d, self.multiply(self.inverse(d), w)

    def elements(self, J: Iterable[int] | None = None) -> list:
        if J is None:
            from itertools import permutations

            return sorted(permutations(range(1, self.n + 1)), key=lambda w: (self.length(w), w))
        return super().elements(J)


def _insort(xs: list[int], x: int) -> None:
    lo = 0
    while lo < len(xs) and xs[lo] < x:
        lo += 1
    xs.insert(lo, x)


class Dihedral(CoxeterGroup):
    """The dihedral group I2(m) with generators 1 and 2.

    Elements are reduced words: alternating tuples of length at most m. The
    longest element is stored as the word starting with 1.
    """

    def __init__(self, m: int):
        if m < 3:
            raise ValueError("dihedral backend needs m >= 3")
        self.m = m
        self.rank = 2

    def __repr__(self):
        return f"Dihedral({self.m})"

    def __eq__(self, other):
        return isinstance(other, Dihedral) and other.m == self.m

    def __hash__(self):
        return hash(("I2", self.m))

    @property
    def kind(self) -> str:
        return "I2"

    @property
    def identity(self) -> tuple:
        return ()

    def _word(self, start: int, k: int) -> tuple:
        if k == self.m:
            start = 1
        return tuple(start if i % 2 == 0 else 3 - start for i in range(k))

    def lmul(self, s: int, w: tuple) -> tuple:
        if s not in (1, 2):
            raise ValueError(f"generator {s} out of range 1..2")
        k = len(w)
        if k == 0:
            return (s,)
        if k == self.m:
            # the longest element has reduced words starting with either generator
            return self._word(3 - s, k - 1)
        if w[0] == s:
            return self._word(3 - s, k - 1)
        return self._word(s, k + 1)

    def rmul(self, w: tuple, s: int) -> tuple:
        return self.inverse(self.lmul(s, self.inverse(w)))

    def length(self, w: tuple) -> int:
        return len(w)

    def inverse(self, w: tuple) -> tuple:
        k = len(w)
        if k == 0 or k == self.m:
            return w
        return self._word(w[-1], k)

    def multiply(self, u: tuple, w: tuple) -> tuple:
        for s in reversed(u):
            w = self.lmul(s, w)
        return w

    def bruhat_leq(self, u: tuple, w: tuple) -> bool:
        return u == w or len(u) < len(w)

    def coxeter_entry(self, s: int, t: int) -> int:
        return 1 if s == t else self.m

    def to_json(self, w):
        return list(w)


def coxeter_group_from_matrix(matrix: Sequence[Sequence[int]]) -> CoxeterGroup:
    """Recognise a Coxeter matrix as type A (labels 3 on a path) or dihedral."""
    r = len(matrix)
    for i in range(r):
        if len(matrix[i]) != r or matrix[i][i] != 1:
            raise ValueError("not a Coxeter matrix")
        for j in range(r):
            if i != j and (matrix[i][j] != matrix[j][i] or matrix[i][j] < 2):
                raise ValueError("not a Coxeter matrix")
    if r == 2 and matrix[0][1] >= 3 and matrix[0][1] != 3:
        return Dihedral(matrix[0][1])
    for i in range(r):
        for j in range(r):
            if i != j and matrix[i][j] != (3 if abs(i - j) == 1 else 2):
                raise UnsupportedType("only type A and dihedral Coxeter matrices are supported")
    return TypeA(r + 1)


def bruhat_closure_oracle(group: CoxeterGroup) -> set[tuple]:
    """All pairs (u, w) with u <= w, via closure of reflection multiplication.

    u < ut whenever t is a reflection with l(ut) > l(u); the order is the
    transitive-reflexive closure. Brute force, for cross-checking only.
    """
    elems = group.elements()
    refl = set()
    for w in elems:
        for s in group.generators:
            refl.add(group.multiply(w, group.multiply(group.generator_element(s), group.inverse(w))))
    up: dict = {w: set() for w in elems}
    for u in elems:
        for t in refl:
            v = group.multiply(u, t)
            if group.length(v) > group.length(u):
                up[u].add(v)
    pairs = set()
    for u in elems:
        stack = [u]
        seen = {u}
        while stack:
            x = stack.pop()
            for y in up[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        pairs.update((u, w) for w in seen)
    return pairs


def iter_subsets(gens: Sequence[int]) -> Iterator[GenSet]:
    from itertools import combinations

    for k in range(len(gens) + 1):
        for c in combinations(gens, k):
            yield GenSet(c)
