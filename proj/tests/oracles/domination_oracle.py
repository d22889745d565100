"""Independent oracle used to freeze expected values in the C++ tests.

Brute-force domination polynomials with networkx graphs and sympy,
real roots with mpmath. Not part of the build; rerun by hand.
"""
import itertools
import sys

import mpmath
import networkx as nx
import sympy as sp

x = sp.symbols("x")


def dom_poly(g):
    nodes = list(g.nodes)
    counts = [0] * (len(nodes) + 1)
    closed = {v: set(g[v]) | {v} for v in nodes}
    for r in range(len(nodes) + 1):
        for s in itertools.combinations(nodes, r):
            cov = set()
            for v in s:
                cov |= closed[v]
            if len(cov) == len(nodes):
                counts[r] += 1
    return counts


def friendship(n):
    g = nx.Graph()
    g.add_node(0)
    for i in range(n):
        a, b = 1 + 2 * i, 2 + 2 * i
        g.add_edges_from([(0, a), (0, b), (a, b)])
    return g


def book(n):
    g = nx.Graph()
    g.add_edge(0, 1)
    for i in range(n):
        a, b = 2 + 2 * i, 3 + 2 * i
        g.add_edges_from([(0, a), (1, b), (a, b)])
    return g


def real_roots(expr, dps=40):
    mpmath.mp.dps = dps
    p = sp.Poly(sp.expand(expr), x)
    roots = mpmath.polyroots([int(c) for c in p.all_coeffs()], maxsteps=2000, extraprec=2000)
    return sorted(float(r.real) for r in roots if abs(mpmath.im(r)) < 1e-25)


def main():
    print("F2", dom_poly(friendship(2)))
    print("B2", dom_poly(book(2)))
    print("B4 edges", book(4).number_of_edges())
    print("P4", dom_poly(nx.path_graph(4)))
    print("K3", dom_poly(nx.complete_graph(3)))
    for n in range(1, 11):
        D = (2 * x + x**2) ** n + x * (1 + x) ** (2 * n)
        print("table", n, ["%.10g" % r for r in real_roots(D)])
    mpmath.mp.dps = 60
    for n in (10, 20, 30):
        D = sp.Poly(sp.expand((2 * x + x**2) ** n + x * (1 + x) ** (2 * n)), x)
        rts = mpmath.polyroots([int(c) for c in D.all_coeffs()], maxsteps=4000, extraprec=4000)
        worst = 0.0
        for r in rts:
            z = complex(r)
            if abs(z) < 0.15:
                continue
            # distance to (a+1)^2 - b^2 = 1/2 by dense sampling of both branches
            best = 1e9
            for k in range(-40000, 40001):
                t = k / 10000.0
                for s in (1, -1):
                    yr = s * mpmath.cosh(t) / mpmath.sqrt(2)
                    yi = mpmath.sinh(t) / mpmath.sqrt(2)
                    d = abs(z - complex(float(yr) - 1, float(yi)))
                    best = min(best, d)
            worst = max(worst, best)
        print("maxdist", n, worst, "maxmod", max(abs(complex(r)) for r in rts))


if __name__ == "__main__":
    sys.exit(main())
