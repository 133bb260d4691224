"""Motzkin triangle, its skew-symmetric extension, and related triangles.

Every triangle here is a coefficient table of a polynomial family:

* Motzkin (extended):   (1 + x + x^2)^n (1 - x^2)
* Pascal:               (1 + x)^n
* Catalan variant:      (1 + x)^n (1 - x)
* trinomial:            (1 + x + x^2)^n
* general:              P(x)^n (1 - x^2), P palindromic of even degree
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPolynomial

ONE_MINUS_X = LaurentPolynomial.from_coeffs([1, -1])
ONE_MINUS_X2 = LaurentPolynomial.from_coeffs([1, 0, -1])


def _check_row(n):
    if n < 0:
        raise ValueError(f"row index must be nonnegative, got {n}")


@dataclass(frozen=True)
class TriangleSpec:
    """Palindromic coefficient vector ``(a_0, ..., a_d)`` with ``d`` even."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ValueError("coefficient vector is empty")
        d = len(coeffs) - 1
        if d % 2:
            raise ValueError(f"degree must be even, got {d}")
        if coeffs[0] == 0 or coeffs[-1] == 0:
            raise ValueError("leading and trailing coefficients must be nonzero")
        if coeffs != coeffs[::-1]:
            raise ValueError(f"coefficients {coeffs} are not palindromic")

    @classmethod
    def parse(cls, text: str) -> "TriangleSpec":
        """Parse a comma separated list such as ``"1,2,1"``."""
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"invalid coefficient list {text!r}: {exc}") from None

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    @property
    def polynomial(self) -> LaurentPolynomial:
        return LaurentPolynomial.from_coeffs(self.coeffs)


MOTZKIN_SPEC = TriangleSpec((1, 1, 1))


class _MotzkinRows:
    """Row cache for the Motzkin recurrence, grown by dynamic programming."""

    def __init__(self):
        self._rows = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(rows) <= n:
                prev = rows[-1]
                m = len(prev)  # new row index is m
                new = [1]
                for k in range(1, m + 1):
                    v = prev[k - 1]
                    if k < m:
                        v += prev[k]
                    if k >= 2:
                        v += prev[k - 2]
                    new.append(v)
                rows.append(tuple(new))
        return rows[n]


_MOTZKIN = _MotzkinRows()


def motzkin_row(n: int) -> tuple[int, ...]:
    """Row ``n`` of the Motzkin triangle, entries ``k = 0..n``."""
    _check_row(n)
    return _MOTZKIN.row(n)


def motzkin_T(n: int, k: int) -> int:
    """Motzkin triangle entry from the three-term recurrence.

    ``T(n, 0) = 1``, ``T(n, k) = 0`` outside ``0..n``, and
    ``T(n, k) = T(n-1, k-2) + T(n-1, k-1) + T(n-1, k)`` otherwise.
    """
    _check_row(n)
    if k < 0 or k > n:
        return 0
    return _MOTZKIN.row(n)[k]


def extended_T(n: int, k: int) -> int:
    """Skew-symmetric extension of row ``n`` to ``k = 0..2n+2``."""
    _check_row(n)
    if not 0 <= k <= 2 * n + 2:
        raise IndexError(f"extended row {n} is defined for 0 <= k <= {2 * n + 2}, got k={k}")
    if k <= n:
        return motzkin_T(n, k)
    if k == n + 1:
        return 0
    return -motzkin_T(n, 2 * n - k + 2)


def extended_row(n: int) -> list[int]:
    return [extended_T(n, k) for k in range(2 * n + 3)]


@lru_cache(maxsize=512)
def _general_row_poly(coeffs: tuple[int, ...], n: int) -> LaurentPolynomial:
    return LaurentPolynomial.from_coeffs(coeffs) ** n * ONE_MINUS_X2


@lru_cache(maxsize=512)
def _power_poly(coeffs: tuple[int, ...], n: int) -> LaurentPolynomial:
    return LaurentPolynomial.from_coeffs(coeffs) ** n


def T_via_ct(n: int, k: int) -> int:
    """Coefficient of ``x^k`` in ``(1 + x + x^2)^n (1 - x^2)``.

    Total in ``k``: returns 0 outside ``0..2n+2``.
    """
    _check_row(n)
    return _general_row_poly(MOTZKIN_SPEC.coeffs, n).coefficient(k)


def general_row_polynomial(spec: TriangleSpec, n: int) -> LaurentPolynomial:
    """``P(x)^n (1 - x^2)`` for the palindromic ``P`` described by ``spec``."""
    _check_row(n)
    return _general_row_poly(spec.coeffs, n)


def general_A(spec: TriangleSpec, n: int, k: int) -> int:
    """Coefficient of ``x^k`` in ``P(x)^n (1 - x^2)``."""
    return general_row_polynomial(spec, n).coefficient(k)


def general_row(spec: TriangleSpec, n: int) -> list[int]:
    """Entries ``A(n, 0..dn+2)``."""
    return general_row_polynomial(spec, n).dense(0, spec.d * n + 2)


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` read off as ``CT[(1 + x)^n / x^k]``."""
    _check_row(n)
    return _power_poly((1, 1), n).coefficient(k)


def binomial_formula(n: int, k: int) -> int:
    """``C(n, k)`` by the multiplicative formula; 0 outside ``0..n``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pascal_row(n: int) -> list[int]:
    _check_row(n)
    return _power_poly((1, 1), n).dense(0, n)


def catalan_variant(n: int, k: int) -> int:
    """Coefficient of ``x^k`` in ``(1 + x)^n (1 - x)``."""
    _check_row(n)
    return (_power_poly((1, 1), n) * ONE_MINUS_X).coefficient(k)


def catalan_variant_row(n: int) -> list[int]:
    # degree is n + 1; the k = n + 2 slot of the displayed sum is always 0
    _check_row(n)
    return (_power_poly((1, 1), n) * ONE_MINUS_X).dense(0, n + 1)


def trinomial(n: int, k: int) -> int:
    """Coefficient of ``x^k`` in ``(1 + x + x^2)^n``."""
    _check_row(n)
    return _power_poly(MOTZKIN_SPEC.coeffs, n).coefficient(k)


def trinomial_binomial_sum(n: int, k: int) -> int:
    """Trinomial coefficient from ``((1 + x) + x^2)^n``.

    Sum over ``j`` of ``C(n, j) * C(n - j, k - 2j)``.
    """
    _check_row(n)
    return sum(binomial_formula(n, j) * binomial_formula(n - j, k - 2 * j) for j in range(n + 1))


def trinomial_row(n: int) -> list[int]:
    _check_row(n)
    return _power_poly(MOTZKIN_SPEC.coeffs, n).dense(0, 2 * n)
