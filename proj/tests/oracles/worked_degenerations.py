"""Independent oracle for the worked degeneration examples.

Uses sympy polynomial arithmetic on hand-built strata lists (no shared code
with the C++ implementation). Prints the frozen values used in the tests.
"""
from itertools import combinations
from math import comb
import sympy as sp

u, v, t = sp.symbols("u v t")
L = u * v


def P(m):
    return sum(L**i for i in range(m + 1)) if m >= 0 else 0


def psi(strata):
    # strata: dict frozenset -> class
    return sp.expand(sum((-1) ** (len(J) - 1) * c * P(len(J) - 1) for J, c in strata.items()))


def lines(d):
    s = {}
    for i in range(d):
        s[frozenset([f"E{i}"])] = 1 + L
    for i, j in combinations(range(d), 2):
        s[frozenset([f"E{i}", f"E{j}"])] = 1
    return s


def surfaces(d):
    s = {}
    for i in range(d):
        s[frozenset([f"E{i}"])] = 1 + (1 + d * (d - 1)) * L + L**2
    for a, b in combinations(range(d), 2):
        s[frozenset([f"E{a}", f"E{b}"])] = 1 + L
        for k in range(d):
            F = f"F{a}_{b}_{k}"
            s[frozenset([F])] = (1 + L) ** 2
            s[frozenset([F, f"E{a}"])] = 1 + L
            s[frozenset([F, f"E{b}"])] = 1 + L
            s[frozenset([F, f"E{a}", f"E{b}"])] = 1
    for a, b, c in combinations(range(d), 3):
        s[frozenset([f"E{a}", f"E{b}", f"E{c}"])] = 1
    return s


def k3():
    s = {}
    for q in ("Q1", "Q2"):
        s[frozenset([q])] = (1 + L) ** 2 + 16 * L
    s[frozenset(["Q1", "Q2"])] = 1 - u - v + L
    for j in range(16):
        G = f"G{j}"
        s[frozenset([G])] = (1 + L) ** 2
        s[frozenset([G, "Q1"])] = 1 + L
        s[frozenset([G, "Q2"])] = 1 + L
        s[frozenset([G, "Q1", "Q2"])] = 1
    return s


def level(s, m):
    return sp.expand(sum(c for J, c in s.items() if len(J) == m))


if __name__ == "__main__":
    for d in range(2, 9):
        p = psi(lines(d))
        assert sp.expand(p - (d - comb(d, 2)) * (1 + L)) == 0
        print("lines", d, p)
    for d in range(2, 7):
        s = surfaces(d)
        D1, D2, D3 = level(s, 1), level(s, 2), level(s, 3)
        assert sp.expand(D1 - (d * (1 + (d * d - d + 1) * L + L**2) + d * comb(d, 2) * (1 + L) ** 2)) == 0
        assert sp.expand(D2 - sp.Rational(1, 1) * d * (d - 1) * (2 * d + 1) / 2 * (1 + L)) == 0
        assert sp.expand(D3 - sp.Rational(d * (d - 1) * (2 * d - 1), 3)) == 0
        p = psi(s)
        h11 = sp.Rational(d * (2 * d * d - 6 * d + 7), 3)
        assert sp.expand(p - ((comb(d - 1, 3) + 1) * (1 + L**2) + h11 * L)) == 0
        print("surfaces", d, p, "blocks3", comb(d - 1, 3), "blocks1", h11 - comb(d - 1, 3),
              "special", sp.expand(D1 - D2 + D3))
    p = psi(k3())
    print("k3", p, "v=1:", sp.expand(p.subs(v, 1)))
    print("k3 special", sp.expand(level(k3(), 1) - level(k3(), 2) + level(k3(), 3)))
    print("lines d=4 special", sp.expand(level(lines(4), 1) - level(lines(4), 2)))
    print("lines d=4 vanishing", sp.expand(psi(lines(4)) - level(lines(4), 1) + level(lines(4), 2)))
    # blow-up of P^3 along a line; plane at a point
    print("P3 blown along line", sp.expand(P(3) + (1 + L) * (P(1) - 1)))
