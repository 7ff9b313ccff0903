"""Exact arithmetic in Z[q, q^-1] and in its field of fractions.

``LaurentPoly`` is an immutable sparse mapping exponent -> nonzero integer.
``RationalFn`` is a reduced quotient of two Laurent polynomials and is only
needed for the seminormal representation.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping


class NonDivisible(ArithmeticError):
    """Raised when a polynomial is not divisible by q inside Z[q]."""


class LaurentPoly:
    """Sparse integer Laurent polynomial in ``q``.

    >>> q = LaurentPoly.q()
    >>> (q * (q**2 + 1)).terms
    ((1, 1), (3, 1))
    >>> (q - q**-1).bar() == q**-1 - q
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], shift: int = 0) -> LaurentPoly:
        """Build from a dense coefficient list starting at exponent ``shift``."""
        return cls((shift + i, c) for i, c in enumerate(coeffs) if c)

    @classmethod
    def _raw(cls, terms: tuple[tuple[int, int], ...]) -> LaurentPoly:
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # inspection
    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, e: int) -> int:
        for ee, c in self._terms:
            if ee == e:
                return c
        return 0

    def constant_term(self) -> int:
        return self.coeff(0)

    def degree(self) -> int | None:
        return self._terms[-1][0] if self._terms else None

    def valuation(self) -> int | None:
        return self._terms[0][0] if self._terms else None

    def in_qA_plus(self) -> bool:
        """True iff every exponent is at least 1 (the zero polynomial qualifies)."""
        return not self._terms or self._terms[0][0] >= 1

    def in_A_plus(self) -> bool:
        return not self._terms or self._terms[0][0] >= 0

    def dense(self) -> tuple[int, ...]:
        """Coefficients of q^0, q^1, ... for a polynomial in Z[q]."""
        if not self._terms:
            return ()
        if self._terms[0][0] < 0:
            raise ValueError(f"{self} has negative exponents")
        out = [0] * (self._terms[-1][0] + 1)
        for e, c in self._terms:
            out[e] = c
        return tuple(out)

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly._raw(tuple((e + k, c) for e, c in self._terms))

    def bar(self) -> LaurentPoly:
        """The ring involution q -> q^-1."""
        return LaurentPoly._raw(tuple((-e, c) for e, c in reversed(self._terms)))

    def exact_div_q(self) -> LaurentPoly:
        """Divide by q inside Z[q]; requires zero constant term and no negative exponents."""
        if self._terms and self._terms[0][0] < 1:
            raise NonDivisible(f"{self} is not divisible by q in Z[q]")
        return self.shift(-1)

    def subs_q_power(self, k: int) -> LaurentPoly:
        """Substitute q -> q^k."""
        return LaurentPoly((e * k, c) for e, c in self._terms)

    # comparisons
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # serialization
    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        return cls((e, c) for e, c in data)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.q()
Q_INV = LaurentPoly.monomial(-1)
#: q - q^-1, the quadratic-relation coefficient
DELTA = Q - Q_INV


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def constant_term(p: LaurentPoly) -> int:
    return p.constant_term()


def exact_div_q(p: LaurentPoly) -> LaurentPoly:
    return p.exact_div_q()


def in_qA_plus(p: LaurentPoly) -> bool:
    return p.in_qA_plus()


# ---------------------------------------------------------------------------
# univariate helpers over Q for the rational-function gcd

def _poly_of(p: LaurentPoly) -> tuple[list[int], int]:
    """Split p = q^v * f with f in Z[q], f(0) != 0; returns (dense f, v)."""
    v = p.valuation()
    if v is None:
        return [], 0
    return list(p.shift(-v).dense()), v


def _strip(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def _divmod_q(f: list[Fraction], g: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    f = list(f)
    quot = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lead = g[-1]
    while len(f) >= len(g) and f:
        c = f[-1] / lead
        k = len(f) - len(g)
        quot[k] = c
        for i, gc in enumerate(g):
            f[i + k] -= c * gc
        _strip(f)
    return quot, f


def _content(f: Iterable[int]) -> int:
    g = 0
    for c in f:
        g = gcd(g, c)
    return g


def _primitive_gcd(a: list[int], b: list[int]) -> list[int]:
    """gcd in Z[q] of two primitive-up-to-content polynomials, primitive with positive lead."""
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]
    while fb:
        _, r = _divmod_q(fa, fb)
        fa, fb = fb, r
    if not fa:
        return [1]
    denom = 1
    for c in fa:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in fa]
    cont = _content(ints)
    ints = [c // cont for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _exact_div_int(f: list[int], g: list[int]) -> list[int]:
    quot, rem = _divmod_q([Fraction(c) for c in f], [Fraction(c) for c in g])
    if rem:
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in quot:
        if c.denominator != 1:
            raise ArithmeticError("non-integral quotient")
        out.append(int(c))
    return out


class RationalFn:
    """Element of the fraction field of Z[q, q^-1], kept in lowest terms.

    Canonical form: the denominator is a polynomial in q with nonzero constant
    term and positive leading coefficient, and gcd(num, den) is a unit.

    >>> q = LaurentPoly.q()
    >>> RationalFn(q**2 - 1, q - q**3) == RationalFn(-q**-1)
    True
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int, den: LaurentPoly | int = 1):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RationalFn:
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> RationalFn:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def bar(self) -> RationalFn:
        return RationalFn(self.num.bar(), self.den.bar())

    def as_laurent(self) -> LaurentPoly | None:
        """The equal Laurent polynomial, or None if the denominator is not a unit."""
        if len(self.den.terms) == 1 and self.den.terms[0][1] == 1:
            return self.num.shift(-self.den.terms[0][0])
        return None

    def __eq__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFn(({self.num}) / ({self.den}))"


def _coerce_rf(x):
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, (LaurentPoly, int)):
        return RationalFn._raw(_coerce(x), ONE)
    return NotImplemented


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO, ONE
    fn, vn = _poly_of(num)
    fd, vd = _poly_of(den)
    shift = vn - vd
    if len(fd) > 1 and len(fn) > 1:
        cn, cd = _content(fn), _content(fd)
        g = _primitive_gcd([c // cn for c in fn], [c // cd for c in fd])
        if len(g) > 1:
            fn = _exact_div_int(fn, g)
            fd = _exact_div_int(fd, g)
    c = gcd(_content(fn), _content(fd))
    if fd[-1] < 0:
        c = -c
    fn = [x // c for x in fn]
    fd = [x // c for x in fd]
    return LaurentPoly.from_coeffs(fn, shift), LaurentPoly.from_coeffs(fd)


RF_ZERO = RationalFn._raw(ZERO, ONE)
RF_ONE = RationalFn._raw(ONE, ONE)
