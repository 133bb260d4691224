"""Simultaneous core partitions, counted by brute force.

A partition is an ``a``-core when none of its hook lengths is divisible
by ``a``. Partitions are encoded by their beta-sets (first-column hook
lengths); in that encoding ``B`` is an ``a``-core iff every ``h`` in ``B``
with ``h >= a`` has ``h - a`` in ``B`` as well (so ``h == a`` is excluded,
because 0 is never in ``B``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .identities import VerificationReport, conjecture_sum, motzkin_over_d


class CoprimalityError(ValueError):
    """``gcd(s, d) != 1``: the simultaneous core count is out of scope."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def to_beta_set(p: Partition) -> frozenset[int]:
    """First-column hook lengths ``parts[i] + len - 1 - i``."""
    L = len(p.parts)
    return frozenset(part + L - 1 - i for i, part in enumerate(p.parts))


def from_beta_set(beta) -> Partition:
    hooks = sorted(beta, reverse=True)
    if any(h < 1 for h in hooks):
        raise ValueError(f"beta-set elements must be positive: {hooks}")
    if len(set(hooks)) != len(hooks):
        raise ValueError("beta-set elements must be distinct")
    L = len(hooks)
    return Partition(tuple(h - (L - 1 - i) for i, h in enumerate(hooks)))


def beta_set_size(beta) -> int:
    """Size of the partition encoded by ``beta``."""
    L = len(beta)
    return sum(beta) - L * (L - 1) // 2


def hook_lengths(p: Partition) -> list[int]:
    """Hook lengths of every cell, row by row."""
    conj = p.conjugate().parts
    return [
        (row_len - j - 1) + (conj[j] - i - 1) + 1
        for i, row_len in enumerate(p.parts)
        for j in range(row_len)
    ]


def is_core(p: Partition, a: int) -> bool:
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    return all(h % a for h in hook_lengths(p))


def is_core_beta(beta, a: int) -> bool:
    """Core test on a beta-set: ``h >= a`` in ``B`` forces ``h - a`` in ``B``."""
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    beta = frozenset(beta)
    return all(h < a or (h - a) in beta for h in beta)


def size_bound(s: int, d: int) -> int:
    """Largest size of an ``(s, s+d)``-core: ``(s^2-1)((s+d)^2-1)/24``."""
    t = s + d
    return (s * s - 1) * (t * t - 1) // 24


def hook_window(s: int, d: int) -> int:
    """Largest hook of any ``(s, s+d)``-core (the Frobenius number of ``s, s+d``)."""
    t = s + d
    return max(s * t - s - t, 0)


def _check_pair(s, d):
    if s < 1 or d < 1:
        raise ValueError(f"s and d must be positive, got s={s}, d={d}")
    if gcd(s, d) != 1:
        raise CoprimalityError(f"gcd({s},{d}) = {gcd(s, d)}; s and d must be coprime")


def iter_simultaneous_core_betas(
    moduli: tuple[int, ...], window: int, max_size: int | None = None
) -> Iterator[frozenset[int]]:
    """Every beta-set inside ``1..window`` that is a core for all ``moduli``.

    Elements are chosen in increasing order; an element ``x`` can join only
    if ``x - m`` is already present for each modulus ``m <= x``. Adding a
    new largest element ``x`` to ``L`` elements grows the size by
    ``x - L >= 1``, so ``max_size`` prunes whole subtrees.
    """
    chosen: list[int] = []
    present = set()
    smallest = min(moduli)

    def rec(start, size):
        yield frozenset(chosen)
        L = len(chosen)
        # x >= smallest needs x - smallest in B, so x <= max(B) + smallest
        top = min(window, (chosen[-1] if chosen else 0) + smallest)
        for x in range(start, top + 1):
            new_size = size + x - L
            if max_size is not None and new_size > max_size:
                break
            if all(x < m or (x - m) in present for m in moduli):
                chosen.append(x)
                present.add(x)
                yield from rec(x + 1, new_size)
                chosen.pop()
                present.discard(x)

    yield from rec(1, 0)


def count_simultaneous_cores_by_size(
    s: int, d: int, max_size: int | None = None, window: int | None = None
) -> Counter:
    """Counts of ``(s, s+d, s+2d)``-cores keyed by partition size."""
    _check_pair(s, d)
    if max_size is None:
        max_size = size_bound(s, d)
    if window is None:
        window = hook_window(s, d)
    moduli = (s, s + d, s + 2 * d)
    return Counter(beta_set_size(b) for b in iter_simultaneous_core_betas(moduli, window, max_size))


def count_simultaneous_cores(s: int, d: int, max_size: int | None = None, window: int | None = None) -> int:
    """Number of partitions that are ``s``-, ``(s+d)``- and ``(s+2d)``-cores."""
    return sum(count_simultaneous_cores_by_size(s, d, max_size, window).values())


def partitions_of(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``n`` as weakly decreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def count_simultaneous_cores_naive(s: int, d: int, max_size: int | None = None) -> Counter:
    """Cross-check: scan every partition up to ``max_size`` and test hooks."""
    _check_pair(s, d)
    if max_size is None:
        max_size = size_bound(s, d)
    moduli = (s, s + d, s + 2 * d)
    counts = Counter()
    for n in range(max_size + 1):
        for parts in partitions_of(n):
            hooks = hook_lengths(Partition(parts))
            if all(h % m for h in hooks for m in moduli):
                counts[n] += 1
    return counts


def conjecture_check(s: int, d: int) -> VerificationReport:
    """Brute-force count against both closed forms. Confirms instances only."""
    _check_pair(s, d)
    return VerificationReport(
        "conjecture",
        {"s": s, "d": d},
        {
            "count": count_simultaneous_cores(s, d),
            "formula": conjecture_sum(s, d),
            "triangle": motzkin_over_d(s, d),
        },
    )


def coprime_pairs(max_sum: int) -> list[tuple[int, int]]:
    """All coprime ``(s, d)`` with ``s + 2d <= max_sum``."""
    return [
        (s, d)
        for d in range(1, max_sum // 2 + 1)
        for s in range(1, max_sum - 2 * d + 1)
        if gcd(s, d) == 1
    ]
