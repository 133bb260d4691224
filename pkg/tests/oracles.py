"""Independent reference computations used to freeze expected values.

Nothing here imports motzkin_ct.
"""

from fractions import Fraction
from functools import lru_cache


def convolve(a, b):
    """Dense list convolution: coefficient lists, index = exponent."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def dense_power(a, n):
    out = [1]
    for _ in range(n):
        out = convolve(out, a)
    return out


@lru_cache(maxsize=None)
def pascal(n, k):
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return pascal(n - 1, k - 1) + pascal(n - 1, k)


@lru_cache(maxsize=None)
def motzkin_rec(n, k):
    """Rules (1)-(3) evaluated literally by recursion."""
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1
    return motzkin_rec(n - 1, k - 2) + motzkin_rec(n - 1, k - 1) + motzkin_rec(n - 1, k)


def hooks_by_cells(parts):
    """Hook of cell (i, j): arm + leg + 1, counting cells directly."""
    out = []
    for i, row in enumerate(parts):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in parts[i + 1:] if r > j)
            out.append(arm + leg + 1)
    return out


def all_partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    res = []
    for first in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - first, first):
            res.append((first,) + rest)
    return res


def frac_sum(terms):
    return sum((Fraction(t) for t in terms), Fraction(0))
