import random

import pytest

from motzkin_ct.triangles import (
    MOTZKIN_SPEC,
    T_via_ct,
    TriangleSpec,
    binomial,
    binomial_formula,
    catalan_variant,
    catalan_variant_row,
    extended_T,
    extended_row,
    general_A,
    general_row,
    motzkin_row,
    motzkin_T,
    trinomial,
    trinomial_binomial_sum,
)
from oracles import convolve, dense_power, motzkin_rec, pascal


def test_motzkin_rules():
    assert all(motzkin_T(n, 0) == 1 for n in range(30))
    assert motzkin_T(2, 5) == 0
    assert motzkin_T(7, -1) == 0
    assert motzkin_T(3, 2) == 5
    assert motzkin_T(4, 3) == 12


def test_motzkin_matches_literal_recursion():
    for n in range(25):
        assert list(motzkin_row(n)) == [motzkin_rec(n, k) for k in range(n + 1)]


def test_motzkin_diagonal():
    assert [motzkin_T(n, n) for n in range(6)] == [1, 1, 2, 4, 9, 21]


def test_negative_row_rejected():
    with pytest.raises(ValueError):
        motzkin_T(-1, 0)


def test_extended_examples():
    assert extended_T(3, 4) == 0
    assert extended_T(3, 5) == -motzkin_T(3, 3) == -4
    assert extended_T(0, 0) == 1
    assert extended_row(1) == [1, 1, 0, -1, -1]


@pytest.mark.parametrize("k", [-1, 9])
def test_extended_out_of_window(k):
    with pytest.raises(IndexError):
        extended_T(3, k)


def test_T_via_ct_examples():
    assert T_via_ct(3, 2) == 5
    assert T_via_ct(3, 5) == -4
    assert T_via_ct(3, 9) == 0
    assert T_via_ct(3, -1) == 0


def test_oracle_equivalence_small():
    for n in range(20):
        for k in range(2 * n + 3):
            assert T_via_ct(n, k) == extended_T(n, k)
            if k <= n:
                assert T_via_ct(n, k) == motzkin_T(n, k)


def test_row_sums_vanish():
    for n in range(30):
        assert sum(extended_row(n)) == 0


def test_triangle_spec_validation():
    assert TriangleSpec((1, 2, 1)).d == 2
    assert TriangleSpec.parse("3,1,4,1,3").coeffs == (3, 1, 4, 1, 3)
    for bad in [(1, 2, 3), (1, 1), (0, 1, 0), ()]:
        with pytest.raises(ValueError):
            TriangleSpec(bad)
    with pytest.raises(ValueError):
        TriangleSpec.parse("1,a,1")


def test_general_A_examples():
    spec = TriangleSpec((1, 2, 1))
    assert general_A(spec, 0, 0) == 1
    assert general_A(spec, 0, 2) == -1
    assert general_A(spec, 1, 1) == convolve([1, 2, 1], [1, 0, -1])[1] == 2
    for n in range(12):
        for k in range(2 * n + 3):
            assert general_A(MOTZKIN_SPEC, n, k) == extended_T(n, k)


def test_general_rows_match_dense_oracle():
    rng = random.Random(7)
    for _ in range(10):
        half = [rng.randint(1, 9) for _ in range(rng.choice([1, 2, 3]))]
        coeffs = half + [rng.randint(1, 9)] + half[::-1]
        spec = TriangleSpec(tuple(coeffs))
        n = rng.randint(0, 8)
        assert general_row(spec, n) == convolve(dense_power(coeffs, n), [1, 0, -1])


def test_anti_palindromic_rows():
    rng = random.Random(11)
    for _ in range(20):
        d = rng.choice([2, 4, 6])
        half = [rng.randint(1, 9) for _ in range(d // 2)]
        spec = TriangleSpec(tuple(half + [rng.randint(1, 9)] + half[::-1]))
        for n in range(0, 31, 5):
            top = d * n + 2
            for k in range(top + 1):
                assert general_A(spec, n, k) == -general_A(spec, n, top - k)
            assert general_A(spec, n, d * n // 2 + 1) == 0


def test_binomial_examples():
    assert binomial(4, 2) == 6 == pascal(4, 2)
    assert binomial(9, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial_formula(3, 5) == 0
    assert binomial_formula(3, -1) == 0


def test_binomial_routes_agree():
    for n in range(61):
        for k in range(-2, n + 3):
            assert binomial(n, k) == binomial_formula(n, k)


def test_catalan_variant():
    assert catalan_variant(2, 1) == 1
    assert catalan_variant(2, 3) == -1
    assert all(catalan_variant(n, 0) == 1 for n in range(10))
    assert catalan_variant_row(2) == [1, 1, -1, -1]
    assert catalan_variant(4, 6) == 0


def test_trinomial():
    assert trinomial(2, 2) == 3
    assert trinomial(2, 1) == 2
    assert all(trinomial(n, 0) == 1 for n in range(10))
    for n in range(15):
        for k in range(-1, 2 * n + 2):
            assert trinomial(n, k) == trinomial(n, 2 * n - k) == trinomial_binomial_sum(n, k)
