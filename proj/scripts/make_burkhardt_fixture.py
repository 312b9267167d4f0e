#!/usr/bin/env python3
"""Regenerates tests/data/burkhardt_nodes.csv.

Solves f = grad f = 0 for the 45-node quartic
    f = x0^4 - x0 (x1^3 + x2^3 + x3^3 + x4^3) + 3 x1 x2 x3 x4
exactly over Q(w), w^2 + w + 1 = 0, and verifies each solution (f = 0,
all partials = 0, Hessian rank 4) before writing the fixture.  Run from
the repository root:

    python3 scripts/make_burkhardt_fixture.py
"""

from fractions import Fraction as Fr
from itertools import product
import os

# ---- exact Q(w) arithmetic: (a, b) = a + b*w, w^2 = -1 - w ----

def eadd(x, y): return (x[0] + y[0], x[1] + y[1])
def esub(x, y): return (x[0] - y[0], x[1] - y[1])
def emul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c - b * d)
def escale(x, s): return (x[0] * s, x[1] * s)
def ezero(x): return x[0] == 0 and x[1] == 0
def einv(x):
    a, b = x
    n = a * a - a * b + b * b
    return ((a - b) / n, (-b) / n)

ZERO = (Fr(0), Fr(0))
ONE = (Fr(1), Fr(0))
W = (Fr(0), Fr(1))

def wpow(k):
    v = ONE
    for _ in range(k % 3):
        v = emul(v, W)
    return v

def cube(t): return emul(emul(t, t), t)

def f(p):
    x0, x1, x2, x3, x4 = p
    s = eadd(eadd(cube(x1), cube(x2)), eadd(cube(x3), cube(x4)))
    return eadd(esub(emul(emul(x0, x0), emul(x0, x0)), emul(x0, s)),
                escale(emul(emul(x1, x2), emul(x3, x4)), Fr(3)))

def grad(p):
    x0 = p[0]
    xs = list(p[1:])
    out = [esub(escale(cube(x0), Fr(4)),
                eadd(eadd(cube(xs[0]), cube(xs[1])), eadd(cube(xs[2]), cube(xs[3]))))]
    for i in range(4):
        rest = [xs[j] for j in range(4) if j != i]
        out.append(eadd(escale(emul(x0, emul(xs[i], xs[i])), Fr(-3)),
                        escale(emul(emul(rest[0], rest[1]), rest[2]), Fr(3))))
    return out

def hessian_rank(p):
    x0 = p[0]
    xs = list(p)
    h = [[ZERO] * 5 for _ in range(5)]
    h[0][0] = escale(emul(x0, x0), Fr(12))
    for i in range(1, 5):
        h[0][i] = h[i][0] = escale(emul(xs[i], xs[i]), Fr(-3))
        h[i][i] = escale(emul(x0, xs[i]), Fr(-6))
        for j in range(i + 1, 5):
            rest = [xs[k] for k in range(1, 5) if k not in (i, j)]
            h[i][j] = h[j][i] = escale(emul(rest[0], rest[1]), Fr(3))
    r = 0
    m = [row[:] for row in h]
    for c in range(5):
        piv = next((i for i in range(r, 5) if not ezero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = einv(m[r][c])
        m[r] = [emul(inv, v) for v in m[r]]
        for i in range(5):
            if i != r and not ezero(m[i][c]):
                fac = m[i][c]
                m[i] = [esub(m[i][j], emul(fac, m[r][j])) for j in range(5)]
        r += 1
    return r

def nodes():
    out = []
    # (1 : w^a : w^b : w^c : w^d) with a+b+c+d = 0 mod 3
    for a, b, c, d in product(range(3), repeat=4):
        if (a + b + c + d) % 3 == 0:
            out.append((ONE, wpow(a), wpow(b), wpow(c), wpow(d)))
    # x0 = 0, two further coordinates zero, remaining pair (1, -w^k)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            for k in range(3):
                p = [ZERO] * 5
                p[i] = ONE
                p[j] = escale(wpow(k), Fr(-1))
                out.append(tuple(p))
    return out

def fmt_fr(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

def fmt(e):
    a, b = e
    if b == 0:
        return fmt_fr(a)
    w = fmt_fr(b) + "*w"
    if a == 0:
        return w
    return fmt_fr(a) + ("+" if b > 0 else "") + w

def main():
    pts = nodes()
    assert len(pts) == 45
    for p in pts:
        assert ezero(f(p)), p
        assert all(ezero(g) for g in grad(p)), p
        assert hessian_rank(p) == 4, p
    path = os.path.join(os.path.dirname(__file__), "..", "tests", "data",
                        "burkhardt_nodes.csv")
    with open(path, "w") as fh:
        fh.write("# field: eisenstein\n")
        for p in pts:
            fh.write(",".join(fmt(c) for c in p) + "\n")
    print(f"wrote {len(pts)} verified nodes to {os.path.normpath(path)}")

if __name__ == "__main__":
    main()
