"""Exit criteria. Every check is exact (tolerance 0); one summary line each."""

import random
import time
from math import gcd

from motzkin_ct.cli import main
from motzkin_ct.cores import (
    Partition,
    coprime_pairs,
    count_simultaneous_cores,
    count_simultaneous_cores_by_size,
    hook_lengths,
    is_core,
    is_core_beta,
    size_bound,
    to_beta_set,
)
from motzkin_ct.identities import (
    conjecture_sum,
    conjecture_sum_exact,
    general_identity_check,
    lhs_problem,
    motzkin_over_d,
    rhs_problem,
    term_bridge,
    theorem1_check,
    theorem2_check,
    theorem2_lhs_exact,
)
from motzkin_ct.triangles import T_via_ct, TriangleSpec, extended_T, general_A, motzkin_T
from oracles import motzkin_rec


def test_1_theorem1_sweep(criterion):
    with criterion("1 theorem1 n=0..200 three-way equality < 60 s") as info:
        start = time.perf_counter()
        reports = [theorem1_check(n) for n in range(201)]
        elapsed = time.perf_counter() - start
        assert all(r.equal for r in reports)
        assert elapsed < 60
        # anchors come from the literal recursion oracle
        assert reports[2].values["lhs"] == 6
        assert reports[3].values["lhs"] == 38
        assert reports[5].values["lhs"] == motzkin_rec(10, 9) // 2 == 1805
        info["detail"] = f"201/201 equal in {elapsed:.2f}s"


def test_2a_theorem2_equality(criterion):
    with criterion("2a theorem2 equality s<=100 d<=10 (exact rationals)") as info:
        reports = [theorem2_check(s, d) for s in range(1, 101) for d in range(1, 11)]
        assert all(r.equal for r in reports)
        assert theorem2_check(3, 2).values["lhs"] == 6
        info["detail"] = f"{len(reports)}/{len(reports)} equal"


def test_2b_theorem2_divisibility_throughout(criterion):
    with criterion("2b d | T(s+d-1,s) for all s<=100 d<=10") as info:
        failures = [(s, d) for s in range(1, 101) for d in range(1, 11) if motzkin_T(s + d - 1, s) % d]
        coprime_failures = [p for p in failures if gcd(*p) == 1]
        info["detail"] = (
            f"{1000 - len(failures)}/1000 divisible; {len(failures)} indivisible pairs, "
            f"{len(coprime_failures)} of them coprime; first {failures[:3]}"
        )
        assert not coprime_failures
        assert not failures, info["detail"]


def test_3_conjecture_consistency(criterion):
    with criterion("3 cores = conjecture_sum = T/d, coprime s+2d<=15") as info:
        anchors = {(1, 1): 1, (2, 1): 2, (3, 1): 4, (4, 1): 9, (5, 1): 21, (3, 2): 6, (5, 2): 38}
        pairs = coprime_pairs(15)
        for s, d in pairs:
            count = count_simultaneous_cores(s, d)
            assert count == conjecture_sum(s, d) == motzkin_over_d(s, d), (s, d)
            if (s, d) in anchors:
                assert count == anchors[(s, d)]
            if d == 1:
                assert count == motzkin_rec(s, s)
        info["detail"] = f"{len(pairs)} pairs consistent with the conjecture"


def test_4_oracle_equivalence(criterion):
    with criterion("4 recurrence / skew extension / CT agree, n<=50") as info:
        checked = 0
        for n in range(51):
            for k in range(2 * n + 3):
                ct = T_via_ct(n, k)
                assert ct == extended_T(n, k)
                if k <= n:
                    assert ct == motzkin_T(n, k)
                checked += 1
            assert extended_T(n, n + 1) == 0 == T_via_ct(n, n + 1)
        info["detail"] = f"{checked} entries"


def test_5_general_triangle_fuzz(criterion):
    with criterion("5 general identity, 100 random specs d in {2,4,6}, n<=30") as info:
        rng = random.Random(5)
        for _ in range(100):
            d = rng.choice([2, 4, 6])
            half = [rng.randint(1, 9) for _ in range(d // 2)]
            spec = TriangleSpec(tuple(half + [rng.randint(1, 9)] + half[::-1]))
            n = rng.randint(0, 30)
            assert general_identity_check(spec, n).equal, (spec, n)
            for m in (n, 2 * n):
                top = d * m + 2
                assert all(general_A(spec, m, k) == -general_A(spec, m, top - k) for k in range(top + 1))
        info["detail"] = "100/100 specs"


def test_6_term_bridge(criterion):
    with criterion("6 term bridge k<=500 d<=20; conjecture_sum == theorem2_lhs on grid") as info:
        assert all(term_bridge(k, d).equal for k in range(501) for d in range(1, 21))
        for s in range(1, 101):
            for d in range(1, 11):
                assert conjecture_sum_exact(s, d) == theorem2_lhs_exact(s, d)
        info["detail"] = "10020 term pairs, 1000 grid sums"


def test_7_oeis_regression(criterion, capsys):
    with criterion("7 compare problem-lhs vs A026940 fixture") as info:
        code = main(["compare", "problem-lhs"])
        out = capsys.readouterr().out
        assert code == 0, out
        info["detail"] = out.strip()
        for n in range(1, 6):
            assert lhs_problem(n) == rhs_problem(n)


def test_8_core_machinery(criterion):
    with criterion("8 hook vs beta-set core tests; bound-raising invariance") as info:
        rng = random.Random(8)
        for _ in range(1000):
            size = rng.randint(0, 40)
            parts = []
            while size:
                p = rng.randint(1, size)
                parts.append(p)
                size -= p
            part = Partition(tuple(sorted(parts, reverse=True)))
            beta = to_beta_set(part)
            hooks = hook_lengths(part)
            for a in range(1, 13):
                assert is_core(part, a) == is_core_beta(beta, a) == all(h != a for h in hooks)
        pairs = coprime_pairs(15)
        for s, d in pairs:
            base = count_simultaneous_cores_by_size(s, d)
            raised = count_simultaneous_cores_by_size(s, d, max_size=2 * size_bound(s, d) + 1, window=3 * s * (s + d))
            assert raised == base, (s, d)
        info["detail"] = f"1000 partitions x 12 moduli; {len(pairs)} pairs with raised bounds"
