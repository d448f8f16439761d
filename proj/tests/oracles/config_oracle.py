#!/usr/bin/env python3
"""Independent brute-force oracle for the values frozen into the C++ tests.

Enumerates configuration cubes directly from the definition (n-tuples of
graph cells whose closures are pairwise color-disjoint), computes Betti
numbers from boundary ranks over two large primes, classifies vertex links
by brute force, and computes token distances by BFS over single moves.
"""
import itertools
import sys
from collections import deque

PRIMES = (1_000_000_007, 998_244_353)


def complete(n):
    return list(range(n)), list(itertools.combinations(range(n), 2))


def bipartite(a, b):
    return list(range(a + b)), [(i, a + j) for i in range(a) for j in range(b)]


def star(k):
    return list(range(k + 1)), [(0, i) for i in range(1, k + 1)]


def cycle(n):
    return list(range(n)), [(i, (i + 1) % n) for i in range(n)]


def cells_of(colors, edges):
    out = [("v", v, frozenset([colors[v]])) for v in range(len(colors))]
    out += [("e", e, frozenset([colors[a], colors[b]])) for e, (a, b) in enumerate(edges)]
    return out


def cubes(colors, edges, n, ordered=True):
    cs = cells_of(colors, edges)
    found = {}
    for tup in itertools.product(range(len(cs)), repeat=n):
        if not ordered and list(tup) != sorted(tup):
            continue
        used = set()
        ok = True
        for i in tup:
            if used & cs[i][2]:
                ok = False
                break
            used |= cs[i][2]
        if not ok:
            continue
        d = sum(cs[i][0] == "e" for i in tup)
        found.setdefault(d, []).append(tup)
    return cs, found


def faces(cs, edges, tup, nv, ordered):
    out = []
    j = 0
    for p, i in enumerate(tup):
        if cs[i][0] != "e":
            continue
        a, b = edges[cs[i][1]]
        for side, v in ((0, a), (1, b)):
            t = list(tup)
            t[p] = v  # vertex cells are indexed first
            if not ordered:
                t.sort()
            out.append((j, side, tuple(t)))
        j += 1
    return out


def rank_mod(rows, ncols, p):
    rows = [dict(r) for r in rows if r]
    rank = 0
    pivots = {}
    for r in rows:
        r = {k: v % p for k, v in r.items() if v % p}
        while r:
            c = min(r)
            if c in pivots:
                pr = pivots[c]
                f = r[c] * pow(pr[c], p - 2, p) % p
                for k, v in pr.items():
                    r[k] = (r.get(k, 0) - f * v) % p
                    if r[k] == 0:
                        del r[k]
            else:
                pivots[c] = r
                rank += 1
                break
    return rank


def betti(colors, edges, n, ordered=True):
    cs, found = cubes(colors, edges, n, ordered)
    nv = len(colors)
    top = max(found) if found else -1
    index = {d: {t: k for k, t in enumerate(sorted(found[d]))} for d in found}
    ranks = {}
    for d in range(1, top + 1):
        rows = []
        for t in found[d]:
            row = {}
            for j, side, f in faces(cs, edges, t, nv, ordered):
                s = (-1) ** j * (1 if side else -1)
                col = index[d - 1][f]
                row[col] = row.get(col, 0) + s
            rows.append(row)
        rs = {rank_mod(rows, len(found[d - 1]), p) for p in PRIMES}
        assert len(rs) == 1
        ranks[d] = rs.pop()
    counts = [len(found.get(d, [])) for d in range(top + 1)]
    b = [counts[d] - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(top + 1)]
    return counts, b


def vertex_link_types(colors, edges, n):
    """Euler characteristic and closedness of every vertex link, from cube incidence."""
    cs, found = cubes(colors, edges, n)
    nv = len(colors)
    out = []
    for v in sorted(found[0]):
        # link vertices: (position, edge) growth moves; simplices: cubes at v
        simplices = set()
        for d in range(1, max(found) + 1):
            for t in found[d]:
                moves = []
                ok = True
                for p, i in enumerate(t):
                    if cs[i][0] == "e":
                        a, b = edges[cs[i][1]]
                        if v[p] not in (a, b):
                            ok = False
                            break
                        moves.append((p, cs[i][1]))
                    elif v[p] != i:
                        ok = False
                        break
                if ok:
                    simplices.add(tuple(moves))
        chi = sum((-1) ** (len(s) - 1) for s in simplices)
        tri = [s for s in simplices if len(s) == 3]
        edge_use = {}
        for s in tri:
            for e in itertools.combinations(s, 2):
                edge_use[e] = edge_use.get(e, 0) + 1
        closed = all(edge_use.get(s, 0) == 2 for s in simplices if len(s) == 2)
        out.append((v, chi, closed))
    return out


def token_distance(colors, edges, start, goal):
    adj = {v: [] for v in range(len(colors))}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {tuple(start): 0}
    q = deque([tuple(start)])
    while q:
        c = q.popleft()
        if c == tuple(goal):
            return seen[c]
        for i, v in enumerate(c):
            others = {colors[w] for j, w in enumerate(c) if j != i}
            for w in adj[v]:
                if colors[w] in others:
                    continue
                nc = list(c)
                nc[i] = w
                nc = tuple(nc)
                if nc not in seen:
                    seen[nc] = seen[c] + 1
                    q.append(nc)
    return None


def main():
    battery = {
        "K3": complete(3), "K4": complete(4), "K5": complete(5), "K6": complete(6),
        "K33": bipartite(3, 3), "K23": bipartite(2, 3), "K13": star(3), "C6": cycle(6),
        "hexagon ABCABC": ([0, 1, 2, 0, 1, 2], cycle(6)[1]),
    }
    for name, (vs, es) in battery.items():
        for n in (2, 3):
            for ordered in (True, False):
                counts, b = betti(vs, es, n, ordered)
                print(f"{name} n={n} {'C' if ordered else 'UC'}: cells {counts} betti {b}")
    print("K7 n=2 betti", betti(*complete(7), 2)[1])
    k44 = vertex_link_types(*bipartite(4, 4), 3)
    print("K44 n=3 vertex links (chi, closed):",
          sorted({(c, cl): sum(1 for _, c2, cl2 in k44 if (c2, cl2) == (c, cl)) for _, c, cl in k44}.items()))
    k7 = vertex_link_types(*complete(7), 3)
    print("K7 n=3 vertex links (chi, closed):", sorted({(c, cl) for _, c, cl in k7}), len(k7))
    print("K13 swap distance", token_distance(*star(3), [1, 2], [2, 1]))
    print("hexagon swap distance", token_distance([0, 1, 2, 0, 1, 2], cycle(6)[1], [0, 1], [1, 0]))
    print("K5 (0,1)->(1,0)", token_distance(*complete(5), [0, 1], [1, 0]))
    print("K33 (0,3)->(3,0)", token_distance(*bipartite(3, 3), [0, 3], [3, 0]))


if __name__ == "__main__":
    sys.exit(main())
