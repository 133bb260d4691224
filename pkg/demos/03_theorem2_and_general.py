# Theorem 2 over a grid, the bridge between the two forms of the
# conjectured count, and palindromic generalisations of the Motzkin triangle.
# Run: python demos/03_theorem2_and_general.py

from math import gcd

from motzkin_ct.identities import conjecture_sum_exact, general_identity_check, term_bridge, theorem2_check
from motzkin_ct.triangles import TriangleSpec, general_row

print(" s\\d" + "".join(f"{d:>10}" for d in range(1, 6)))
for s in range(1, 9):
    cells = []
    for d in range(1, 6):
        r = theorem2_check(s, d)
        assert r.equal
        cells.append(f"{str(r.values['lhs']):>10}")
    print(f"{s:>4}" + "".join(cells))
print("non-integers appear only where gcd(s, d) > 1, e.g. (2,2):", theorem2_check(2, 2).values)

# Individual terms of the two sums agree, hence so do the sums.
print("\nterm bridge k=2, d=3:", term_bridge(2, 3).values)
print("conjecture_sum(7, 3) =", conjecture_sum_exact(7, 3), " coprime:", gcd(7, 3) == 1)

# General triangles: P(x)^n (1 - x^2) with P palindromic of even degree.
for coeffs in [(1, 1, 1), (1, 2, 1), (2, 1, 5, 1, 2), (1, 3, 3, 7, 3, 3, 1)]:
    spec = TriangleSpec(coeffs)
    print(f"\nP coefficients {coeffs}")
    for n in range(3):
        print(f"  row {n}: {general_row(spec, n)}")
    for n in (1, 5, 12):
        r = general_identity_check(spec, n)
        print(f"  n={n}: {r.values} equal={r.equal}")
