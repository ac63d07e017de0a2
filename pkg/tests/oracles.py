"""Slow, obviously-correct reference implementations.

Nothing here touches the package's enumeration engine or canonical forms;
they only rely on ``Hypergraph.edges`` and ``Hypergraph.n``.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def brute_proper(H, k):
    count = 0
    for f in product(range(k), repeat=H.n):
        if all(len({f[v] for v in e}) > 1 for e in H.edges):
            count += 1
    return count


def brute_avoiding(H, k, maps):
    """Colorings containing none of ``maps`` (each a dict vertex -> color)."""
    count = 0
    for f in product(range(k), repeat=H.n):
        if not any(all(f[v] == c for v, c in phi.items()) for phi in maps):
            count += 1
    return count


def edge_full_families(e, k):
    """All k-map disjoint families on edge ``e``, anchored at ``e[0]``."""
    others = e[1:]
    for perms in product(list(permutations(range(k))), repeat=len(others)):
        yield [{e[0]: c, **{v: p[c] for v, p in zip(others, perms)}} for c in range(k)]


def brute_dp_full(H, k):
    """Minimum over every full cover, enumerated without any gauge fixing."""
    best = None
    per_edge = [list(edge_full_families(e, k)) for e in H.edges]
    for choice in product(*per_edge):
        maps = [phi for fam in choice for phi in fam]
        val = brute_avoiding(H, k, maps)
        best = val if best is None else min(best, val)
    return best


def edge_any_families(e, k):
    """Every family of pairwise-disjoint total maps on ``e`` (any size <= k)."""
    all_maps = [dict(zip(e, colors)) for colors in product(range(k), repeat=len(e))]
    out = []
    for size in range(k + 1):
        for fam in combinations(all_maps, size):
            if all(all(a[v] != b[v] for v in e) for a, b in combinations(fam, 2)):
                out.append(list(fam))
    return out


def brute_dp_general(H, k):
    """Minimum over all covers, including partial ones."""
    best = None
    per_edge = [edge_any_families(e, k) for e in H.edges]
    for choice in product(*per_edge):
        maps = [phi for fam in choice for phi in fam]
        val = brute_avoiding(H, k, maps)
        best = val if best is None else min(best, val)
    return best


def brute_full_average(H, k):
    per_edge = [list(edge_full_families(e, k)) for e in H.edges]
    total = count = 0
    for choice in product(*per_edge):
        total += brute_avoiding(H, k, [phi for fam in choice for phi in fam])
        count += 1
    return Fraction(total, count)


def brute_profile(H, j, k, order):
    """Proper colorings of ``H - e_j`` keyed by the colors on ``order``."""
    rest = [e for i, e in enumerate(H.edges) if i != j]
    out = {}
    for f in product(range(k), repeat=H.n):
        if all(len({f[v] for v in e}) > 1 for e in rest):
            key = tuple(f[v] for v in order)
            out[key] = out.get(key, 0) + 1
    for key in product(range(k), repeat=len(order)):
        out.setdefault(key, 0)
    return out


def lagrange_value(points, x):
    """Value at ``x`` of the interpolating polynomial through ``points``."""
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total
