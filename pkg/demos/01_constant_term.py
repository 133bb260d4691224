# Laurent polynomials and the constant-term operator.
# Run: python demos/01_constant_term.py

from motzkin_ct.laurent import LaurentPolynomial, constant_term, power, substitute_reciprocal
from motzkin_ct import triangles

x = LaurentPolynomial.monomial(1)
inv_x = LaurentPolynomial.monomial(-1)

p = 4 * inv_x + 3 + 5 * x
print("p        =", p)
print("CT[p]    =", constant_term(p))          # 3
print("p(1/x)   =", substitute_reciprocal(p))  # same constant term

# Coefficient extraction as a constant term: C(n, k) = CT[(1+x)^n / x^k]
n = 6
row = [constant_term(power(1 + x, n) * power(inv_x, k)) for k in range(n + 1)]
print(f"Pascal row {n}:", row)

# Three triangle families read off polynomial powers
for n in range(5):
    print(
        f"n={n}",
        "pascal", triangles.pascal_row(n),
        "catalan-variant", triangles.catalan_variant_row(n),
        "trinomial", triangles.trinomial_row(n),
    )

# The Motzkin triangle three ways: recurrence, skew-symmetric extension,
# and coefficients of (1+x+x^2)^n (1-x^2).
for n in range(6):
    rec = list(triangles.motzkin_row(n))
    ext = triangles.extended_row(n)
    ct = [triangles.T_via_ct(n, k) for k in range(2 * n + 3)]
    assert ext == ct and ext[: n + 1] == rec
    print(f"row {n}: {ext}   (sum {sum(ext)})")
