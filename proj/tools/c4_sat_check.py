#!/usr/bin/env python3
"""SAT check for SR-graphs of (C4, C4) with a given degree-class profile.

Usage: c4_sat_check.py 5+5+5+5+4

Every degree class induces a C4-free, co-C4-free graph and every transversal
4-set avoids C4 in both colours. Class degrees are exact cardinalities and pairwise
distinct. The transversal of first vertices is fixed to each labelled R-graph of
order 5 (C5 or the bull) in turn. Needs python-sat and networkx.
"""
import itertools
import sys
import time

import networkx as nx
from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Cadical153


def c4_copies(q):
    a, b, c, d = q
    return [((a, b), (b, c), (c, d), (d, a)), ((a, b), (b, d), (d, c), (c, a)), ((a, c), (c, b), (b, d), (d, a))]


def solve(sizes, host_edges):
    pool = IDPool()
    n = sum(sizes)
    members, v = [], 0
    for s in sizes:
        members.append(list(range(v, v + s)))
        v += s

    def edge(u, w):
        return pool.id(("e", min(u, w), max(u, w)))

    def deg(i, d):
        return pool.id(("d", i, d))

    clauses = []
    quads = [q for m in members for q in itertools.combinations(m, 4)]
    for cs in itertools.combinations(range(len(sizes)), 4):
        quads += itertools.product(*[members[c] for c in cs])
    for q in quads:
        for cyc in c4_copies(q):
            clauses.append([-edge(u, w) for u, w in cyc])
            clauses.append([edge(u, w) for u, w in cyc])

    host = {tuple(sorted(e)) for e in host_edges}
    for a, b in itertools.combinations(range(len(sizes)), 2):
        lit = edge(members[a][0], members[b][0])
        clauses.append([lit] if (a, b) in host else [-lit])

    for i, m in enumerate(members):
        clauses.append([deg(i, d) for d in range(n)])
        for d1, d2 in itertools.combinations(range(n), 2):
            clauses.append([-deg(i, d1), -deg(i, d2)])
        for u in m:
            lits = [edge(u, w) for w in range(n) if w != u]
            for d in range(n):
                enc = CardEnc.equals(lits=lits, bound=d, vpool=pool, encoding=EncType.seqcounter)
                clauses += [cl + [-deg(i, d)] for cl in enc.clauses]
    for i, j in itertools.combinations(range(len(sizes)), 2):
        for d in range(n):
            clauses.append([-deg(i, d), -deg(j, d)])
    for i in range(len(sizes) - 1):
        if sizes[i] == sizes[i + 1]:
            for d in range(n):
                clauses.append([-deg(i, d)] + [deg(i + 1, e) for e in range(d + 1, n)])

    with Cadical153(bootstrap_with=clauses) as s:
        if not s.solve():
            return None
        model = {x for x in s.get_model() if x > 0}
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((u, w) for u, w in itertools.combinations(range(n), 2) if edge(u, w) in model)
    return g


def labellings(h, c):
    out = set()
    for p in itertools.permutations(range(c)):
        out.add(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in h.edges())))
    return sorted(out)


def main():
    sizes = sorted((int(x) for x in sys.argv[1].split("+")), reverse=True)
    if len(sizes) != 5:
        sys.exit("profile must have five classes")
    bull = nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (2, 4)])
    hosts = labellings(nx.cycle_graph(5), 5) + labellings(bull, 5)
    t0 = time.time()
    for lab in hosts:
        g = solve(sizes, lab)
        if g is not None:
            print("sat", "host", lab, "degrees", sorted(set(dict(g.degree()).values())), nx.to_graph6_bytes(g, header=False).decode().strip())
            return
    print("unsat", len(hosts), "host labellings", f"{time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
