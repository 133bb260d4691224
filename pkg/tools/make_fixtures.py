"""Regenerate the b-file fixtures in src/motzkin_ct/fixtures/.

oeis.org was not reachable when these were produced, so the values come
from sympy polynomial expansion, independent of the package's own
recurrence and Laurent-polynomial code. Replace them with the published
b-files (https://oeis.org/A026940/b026940.txt etc.) when network access
is available; the file format is identical.
"""

from pathlib import Path

from sympy import Poly, expand, symbols

x = symbols("x")
OUT = Path(__file__).resolve().parents[1] / "src" / "motzkin_ct" / "fixtures"


def motzkin_rows(n_max):
    # T(n,k) for 0 <= k <= n is the coefficient of x^k in (1+x+x^2)^n (1-x^2)
    for n in range(n_max + 1):
        c = Poly(expand((1 + x + x**2) ** n * (1 - x**2)), x).all_coeffs()[::-1]
        yield [int(v) for v in c[: n + 1]]


def trinomial_rows(n_max):
    for n in range(n_max + 1):
        yield [int(v) for v in Poly(expand((1 + x + x**2) ** n), x).all_coeffs()[::-1]]


def write(name, header, pairs):
    lines = [f"# {h}" for h in header] + [f"{i} {v}" for i, v in pairs]
    (OUT / name).write_text("\n".join(lines) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rows = list(motzkin_rows(120))
    a026940 = []
    for n in range(1, 121):
        r = rows[n] + [0]
        a026940.append((n, sum(r[k] * r[k + 1] for k in range(n + 1))))
    write("b026940.txt", ["A026940: sum_{k=0..n} T(n,k) T(n,k+1), T = Motzkin triangle A026300",
                          "generated offline with sympy (oeis.org unreachable); see tools/make_fixtures.py"], a026940)

    flat = [v for r in rows[:45] for v in r]
    write("b026300.txt", ["A026300: Motzkin triangle read by rows",
                          "generated offline with sympy; see tools/make_fixtures.py"], enumerate(flat))

    flat = [v for r in trinomial_rows(30) for v in r]
    write("b027907.txt", ["A027907: trinomial triangle read by rows",
                          "generated offline with sympy; see tools/make_fixtures.py"], enumerate(flat))


if __name__ == "__main__":
    main()
