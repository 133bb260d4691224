# The sum of adjacent products in a Motzkin row, evaluated three ways,
# plus the constant-term chain that links them.
# Run: python demos/02_theorem1.py

from motzkin_ct.laurent import LaurentPolynomial, constant_term, power, substitute_reciprocal
from motzkin_ct.identities import lhs_problem, rhs_problem, rhs_problem_terms, theorem1_check, pascal_analogy_check
from motzkin_ct.triangles import motzkin_T

x = LaurentPolynomial.monomial(1)
one_minus_x2 = 1 - x * x
P = 1 + x + x * x

for n in range(8):
    r = theorem1_check(n)
    print(f"n={n}: {r.values}  equal={r.equal}")

# Walk through the chain for one n. Doubling the sum uses the
# anti-symmetry of the extended row.
n = 4
row_poly = power(P, n) * one_minus_x2
full = sum(row_poly.coefficient(k) * row_poly.coefficient(k + 1) for k in range(2 * n + 3))
print("\nn =", n)
print("sum over k=0..n      :", lhs_problem(n))
print("half of full-row sum :", full // 2)

# CT[ P^n (1-x^2) / x * P(1/x)^n (1 - 1/x^2) ]
kernel = row_poly * LaurentPolynomial.monomial(-1) * substitute_reciprocal(row_poly)
print("half CT of kernel    :", constant_term(kernel) // 2)
print("T(2n,2n-1)/2         :", motzkin_T(2 * n, 2 * n - 1) // 2)

# Binomial side: the k = n term is always zero.
terms = rhs_problem_terms(n)
print("binomial terms       :", [str(t) for t in terms], "->", rhs_problem(n))

# Pascal's triangle has the same shape of identity.
print("\nPascal:", [pascal_analogy_check(n).values for n in range(5)])
