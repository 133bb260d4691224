"""Sparse Laurent polynomials with exact integer coefficients.

A polynomial is stored as a mapping ``{exponent: coefficient}`` where
exponents may be negative and zero coefficients are never stored.
Instances are immutable and hashable.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """Laurent polynomial in one variable ``x`` over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPolynomial":
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], shift: int = 0) -> "LaurentPolynomial":
        """Build ``sum(coeffs[i] * x**(i + shift))``."""
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def dense(self, lo: int, hi: int) -> list[int]:
        """Coefficients of x**lo .. x**hi inclusive, zeros included."""
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def substitute_reciprocal(self) -> "LaurentPolynomial":
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``x**k``."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def value_at_one(self) -> int:
        return sum(self._terms.values())

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                out[e] = get(e, 0) + ca * cb
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        # square-and-multiply
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # comparison / hashing

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPolynomial({dict(sorted(self._terms.items()))!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                mono = str(abs(c))
            else:
                xe = "x" if e == 1 else f"x^{e}"
                mono = xe if abs(c) == 1 else f"{abs(c)}*{xe}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, mono))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, mono in pieces[1:]:
            text += f" {sign} {mono}"
        return text


def _coerce(value):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial({0: value})
    return NotImplemented


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial({0: 1})
X = LaurentPolynomial({1: 1})


def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p + q


def mul(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p * q


def power(p: LaurentPolynomial, n: int) -> LaurentPolynomial:
    """``p**n`` by repeated squaring; ``power(p, 0) == 1`` even for ``p == 0``."""
    return p**n


def substitute_reciprocal(p: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``p(1/x)``."""
    return p.substitute_reciprocal()


def coefficient(p: LaurentPolynomial, e: int) -> int:
    return p.coefficient(e)


def constant_term(p: LaurentPolynomial) -> int:
    """Coefficient of ``x**0``."""
    return p.constant_term()
