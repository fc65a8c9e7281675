#!/usr/bin/env python3
"""Regenerate the offline OEIS fixtures in data/oeis/.

oeis.org was not reachable when these fixtures were created, so the terms are
computed here from each entry's published closed form (independently of the
C++ generators, which use recurrences and polynomial expansion). Running
`cubelab seq --id <tag> --check --online` fetches the real b-file into the
cache, which takes precedence over these fixtures.
"""
import pathlib
import sympy as sp

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"
TERMS = 25
TRIANGLE_TERMS = 40
x = sp.symbols("x")
r2 = sp.sqrt(2)


def triangle(poly):
    out = []
    n = 0
    while len(out) < TRIANGLE_TERMS:
        out.extend(int(c) for c in reversed(sp.Poly(sp.expand(poly ** n), x).all_coeffs()))
        n += 1
    return list(enumerate(out[:TRIANGLE_TERMS]))


def closed(f, start=0):
    return [(n, int(sp.nsimplify(sp.expand(f(n))))) for n in range(start, start + TERMS)]


SEQS = {
    "A027907": ("trinomial coefficients, (1+x+x^2)^n by rows", triangle(1 + x + x**2)),
    "A038717": ("coefficients of (1+x+x^3)^n by rows", triangle(1 + x + x**3)),
    "A013609": ("coefficients of (1+2x)^n by rows", triangle(1 + 2 * x)),
    "A038220": ("coefficients of (3+2x)^n by rows", triangle(3 + 2 * x)),
    "A080956": ("(n+1)(2-n)/2", closed(lambda n: sp.Rational((n + 1) * (2 - n), 2))),
    "A075848": ("3/(2 sqrt 2) ((3+2 sqrt 2)^k - (3-2 sqrt 2)^k)",
                closed(lambda k: 3 / (2 * r2) * ((3 + 2 * r2) ** k - (3 - 2 * r2) ** k))),
    "A072221": ("3/4 ((3+2 sqrt 2)^k + (3-2 sqrt 2)^k) - 1/2",
                closed(lambda k: sp.Rational(3, 4) * ((3 + 2 * r2) ** k + (3 - 2 * r2) ** k) - sp.Rational(1, 2))),
    "A120908": ("4(n-1) 3^(n-2)", closed(lambda n: 4 * (n - 1) * sp.Integer(3) ** (n - 2), start=2)),
    "A003946": ("1, then 4 3^(n-1)", closed(lambda n: 1 if n == 0 else 4 * 3 ** (n - 1))),
    "A060188": ("3^n - n - 1", closed(lambda n: 3**n - n - 1)),
    "A279019": ("n(n+1)", closed(lambda n: n * (n + 1))),
    "A023444": ("n - 2", closed(lambda n: n - 2)),
}

OUT.mkdir(parents=True, exist_ok=True)
for anum, (desc, terms) in SEQS.items():
    lines = [f"# {anum}: {desc}",
             "# source: computed offline from the closed form above (not fetched from oeis.org)"]
    lines += [f"{i} {v}" for i, v in terms]
    (OUT / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")
    print(anum, terms[:6])
