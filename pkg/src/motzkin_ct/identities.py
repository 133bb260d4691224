"""Exact evaluation and verification of the Motzkin-triangle sum identities.

Sums with fractional terms are accumulated as :class:`fractions.Fraction`.
Functions returning ``int`` check that the total has denominator 1 and raise
:class:`ArithmeticFault` otherwise; nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any

from .triangles import TriangleSpec, binomial_formula as C, general_A, motzkin_T

ExactRational = Fraction


class ArithmeticFault(ArithmeticError):
    """An exact quantity that must be integral (or even, or divisible) is not."""


@dataclass
class VerificationReport:
    identity: str
    params: dict[str, Any]
    values: dict[str, Any]
    extra: dict[str, Any] = field(default_factory=dict)
    equal: bool = field(init=False)

    def __post_init__(self):
        vals = list(self.values.values())
        self.equal = all(v == vals[0] for v in vals[1:])

    def as_record(self) -> dict[str, Any]:
        """JSON-friendly dict; fractions become ``"p/q"`` strings."""

        def enc(v):
            if isinstance(v, Fraction):
                return str(v) if v.denominator != 1 else v.numerator
            return v

        record = {
            "identity": self.identity,
            "params": dict(self.params),
            "values": {k: enc(v) for k, v in self.values.items()},
            "equal": self.equal,
        }
        if self.extra:
            record["extra"] = dict(self.extra)
        return record

    def __str__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        values = ", ".join(f"{k}={v}" for k, v in self.values.items())
        verdict = "equal" if self.equal else "NOT EQUAL"
        return f"{self.identity}({params}): {values} -> {verdict}"


def _integral(total: Fraction, what: str) -> int:
    if total.denominator != 1:
        raise ArithmeticFault(f"{what} = {total} is not an integer")
    return total.numerator


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticFault(f"{what}: {den} does not divide {num}")
    return q


def _check_nonneg(**kw):
    for name, v in kw.items():
        if v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")


def _check_pos(**kw):
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")


# Theorem 1 and the Problem


def lhs_problem(n: int) -> int:
    """``sum_{k=0..n} T(n,k) T(n,k+1)``."""
    _check_nonneg(n=n)
    return sum(motzkin_T(n, k) * motzkin_T(n, k + 1) for k in range(n + 1))


def rhs_problem_terms(n: int, upper: int | None = None) -> list[Fraction]:
    """Terms ``C(2n, 2k+1) C(2k+1, k) / (k+2)`` for ``k = 0..upper`` (default ``n``)."""
    _check_nonneg(n=n)
    upper = n if upper is None else upper
    return [Fraction(C(2 * n, 2 * k + 1) * C(2 * k + 1, k), k + 2) for k in range(upper + 1)]


def rhs_problem(n: int, upper: int | None = None) -> int:
    """Binomial-sum side of the Problem identity, summed to ``k = n``.

    The ``k = n`` term always vanishes (``2n + 1 > 2n``); pass ``upper=n-1``
    to sum over the nonvanishing range only.
    """
    return _integral(sum(rhs_problem_terms(n, upper), Fraction(0)), f"rhs_problem({n})")


def half_motzkin_diagonal(n: int) -> int:
    """``T(2n, 2n-1) / 2``, which is 0 at ``n = 0`` since ``T(0, -1) = 0``."""
    _check_nonneg(n=n)
    t = motzkin_T(2 * n, 2 * n - 1)
    return _exact_div(t, 2, f"T({2 * n},{2 * n - 1})/2")


def theorem1_check(n: int) -> VerificationReport:
    return VerificationReport(
        "theorem1",
        {"n": n},
        {
            "lhs": lhs_problem(n),
            "binomial_sum": rhs_problem(n),
            "half_T": half_motzkin_diagonal(n),
        },
    )


# Theorem 2 and the conjecture's binomial sum
#
# Both sides of Theorem 2 are integers when gcd(s, d) == 1. For other pairs
# the identity still holds, but only as rationals: (s, d) = (2, 2) gives 5/2
# on both sides. The *_exact variants return Fractions; the plain variants
# insist on an integer and raise ArithmeticFault otherwise.


def theorem2_lhs_exact(s: int, d: int) -> Fraction:
    _check_pos(s=s, d=d)
    return sum(
        (Fraction(C(s + d - 1, 2 * k + d - 1) * C(2 * k + d - 1, k), k + d) for k in range(s // 2 + 1)),
        Fraction(0),
    )


def theorem2_lhs(s: int, d: int) -> int:
    """``sum_{k=0..s//2} C(s+d-1, 2k+d-1) C(2k+d-1, k) / (k+d)``, as an integer."""
    return _integral(theorem2_lhs_exact(s, d), f"theorem2_lhs({s},{d})")


def motzkin_over_d_exact(s: int, d: int) -> Fraction:
    _check_pos(s=s, d=d)
    return Fraction(motzkin_T(s + d - 1, s), d)


def motzkin_over_d(s: int, d: int) -> int:
    """``T(s+d-1, s) / d``, raising if ``d`` does not divide the entry."""
    _check_pos(s=s, d=d)
    return _exact_div(motzkin_T(s + d - 1, s), d, f"T({s + d - 1},{s})/{d}")


def theorem2_check(s: int, d: int) -> VerificationReport:
    """Exact rational comparison; ``extra["divisible"]`` says whether ``d | T(s+d-1, s)``."""
    lhs = theorem2_lhs_exact(s, d)
    rhs = motzkin_over_d_exact(s, d)
    return VerificationReport(
        "theorem2",
        {"s": s, "d": d},
        {"lhs": lhs, "T_over_d": rhs},
        extra={"divisible": rhs.denominator == 1, "coprime": gcd(s, d) == 1},
    )


def conjecture_sum_exact(s: int, d: int) -> Fraction:
    _check_pos(s=s, d=d)
    return sum(
        (Fraction(C(s + d - 1, 2 * k + d - 1) * C(2 * k + d, k), 2 * k + d) for k in range(s // 2 + 1)),
        Fraction(0),
    )


def conjecture_sum(s: int, d: int) -> int:
    """``sum_{k=0..s//2} C(s+d-1, 2k+d-1) C(2k+d, k) / (2k+d)``, as an integer."""
    return _integral(conjecture_sum_exact(s, d), f"conjecture_sum({s},{d})")


def term_bridge(k: int, d: int) -> VerificationReport:
    """Compare ``C(2k+d, k)/(2k+d)`` with ``C(2k+d-1, k)/(k+d)`` as rationals."""
    _check_nonneg(k=k)
    _check_pos(d=d)
    return VerificationReport(
        "term-bridge",
        {"k": k, "d": d},
        {
            "left": Fraction(C(2 * k + d, k), 2 * k + d),
            "right": Fraction(C(2 * k + d - 1, k), k + d),
        },
    )


# Pascal analogue and general triangles


def pascal_analogy_check(n: int) -> VerificationReport:
    _check_nonneg(n=n)
    lhs = sum(C(n, k) * C(n, k + 1) for k in range(n + 1))
    return VerificationReport("pascal-analogy", {"n": n}, {"lhs": lhs, "rhs": C(2 * n, n + 1)})


def general_identity_check(spec: TriangleSpec, n: int) -> VerificationReport:
    """``sum_{k=0..dn/2} A(n,k) A(n,k+1) == A(2n, dn-1) / 2``.

    Also asserts the two facts the reduction rests on: the centre entry
    ``A(2n, dn+1)`` vanishes and ``A(2n, dn+3) == -A(2n, dn-1)``.
    """
    _check_nonneg(n=n)
    d = spec.d
    lhs = sum(general_A(spec, n, k) * general_A(spec, n, k + 1) for k in range(d * n // 2 + 1))
    a_minus = general_A(spec, 2 * n, d * n - 1)
    centre = general_A(spec, 2 * n, d * n + 1)
    a_plus = general_A(spec, 2 * n, d * n + 3)
    if centre != 0:
        raise ArithmeticFault(f"A({2 * n},{d * n + 1}) = {centre}, expected 0")
    if a_plus != -a_minus:
        raise ArithmeticFault(f"A({2 * n},{d * n + 3}) = {a_plus} != -A({2 * n},{d * n - 1}) = {-a_minus}")
    rhs = _exact_div(a_minus, 2, f"A({2 * n},{d * n - 1})/2")
    return VerificationReport(
        "general",
        {"coeffs": list(spec.coeffs), "n": n},
        {"lhs": lhs, "half_A": rhs},
    )
