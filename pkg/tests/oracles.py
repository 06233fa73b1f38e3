"""Independent reference implementations the tests check the library against.

Everything here favors obviousness over speed: exhaustive subset scans,
set-partition enumeration, exact rational characteristic polynomials.
These deliberately avoid the library's optimized search paths so that a
bug cannot hide on both sides of a comparison.
"""

from __future__ import annotations

import math
from itertools import combinations

from ohg.hypercore import Hyperedge, OrientedHypergraph, restrict, two_section
from ohg.spectral import adjacency_matrix, spectrum


def graph_encoding(n: int, edges) -> OrientedHypergraph:
    """Encode a simple graph: every edge becomes a one-input one-output pair."""
    hes = [Hyperedge(frozenset({i}), frozenset({j})) for i, j in edges]
    return OrientedHypergraph(n, tuple(hes))


def path_graph(n: int) -> OrientedHypergraph:
    return graph_encoding(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> OrientedHypergraph:
    return graph_encoding(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> OrientedHypergraph:
    return graph_encoding(n, list(combinations(range(1, n + 1), 2)))


def path_spectrum(n: int) -> list[float]:
    """Closed-form normalized-Laplacian spectrum of the n-vertex path."""
    return sorted(1.0 - math.cos(math.pi * k / (n - 1)) for k in range(n))


def cycle_spectrum(n: int) -> list[float]:
    return sorted(1.0 - math.cos(2.0 * math.pi * k / n) for k in range(n))


def complete_spectrum(n: int) -> list[float]:
    return [0.0] + [n / (n - 1.0)] * (n - 1)


def _subsets(n: int):
    for mask in range(1 << n):
        yield [v + 1 for v in range(n) if mask >> v & 1]


def brute_alpha(g: OrientedHypergraph) -> int:
    best = 0
    for verts in _subsets(g.n):
        if len(verts) <= best:
            continue
        vset = set(verts)
        if all(len(vset & e.vertices) <= 1 for e in g.hyperedges):
            best = len(verts)
    return best


def brute_alpha_w(g: OrientedHypergraph) -> int:
    a = adjacency_matrix(g)
    best = 0
    for verts in _subsets(g.n):
        if len(verts) <= best:
            continue
        if all(a[i - 1, j - 1] == 0 for i, j in combinations(verts, 2)):
            best = len(verts)
    return best


def brute_omega(g: OrientedHypergraph) -> int:
    pairs = two_section(g)
    best = 0
    for verts in _subsets(g.n):
        if len(verts) <= best:
            continue
        if all((i, j) in pairs for i, j in combinations(verts, 2)):
            best = len(verts)
    return best


def brute_chi(g: OrientedHypergraph) -> int:
    """Minimum cover of the vertex set by two-section-independent sets,
    via dynamic programming over subsets."""
    n = g.n
    adj = [0] * n
    for i, j in two_section(g):
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)

    def independent(mask: int) -> bool:
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if adj[v] & mask:
                return False
        return True

    full = (1 << n) - 1
    inf = n + 1
    f = [0] + [inf] * full
    for mask in range(1, full + 1):
        low = mask & -mask
        sub = mask
        while sub:
            if sub & low and independent(sub):
                cand = f[mask ^ sub] + 1
                if cand < f[mask]:
                    f[mask] = cand
            sub = (sub - 1) & mask
    return f[full]


def set_partitions(items: list):
    """All set partitions, each as a list of lists."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + [list(block) for block in part]
        for i in range(len(part)):
            yield (
                [list(b) for b in part[:i]]
                + [[first] + list(part[i])]
                + [list(b) for b in part[i + 1 :]]
            )


def brute_partition_number(
    g: OrientedHypergraph, lam: float, kind: str, eps: float = 1e-9
) -> int:
    """Exhaustive minimum over all set partitions, admissibility from scratch."""
    extremes: dict[frozenset, tuple[float, float]] = {}

    def ext(block) -> tuple[float, float]:
        key = frozenset(block)
        if key not in extremes:
            sub, _ = restrict(g, block)
            ev = spectrum(sub).eigenvalues
            extremes[key] = (ev[0], ev[-1])
        return extremes[key]

    def ok(block) -> bool:
        lmin, lmax = ext(block)
        return lmin >= lam - eps if kind == "geq" else lmax <= lam + eps

    best = g.n
    for part in set_partitions(list(range(1, g.n + 1))):
        if len(part) < best and all(ok(block) for block in part):
            best = len(part)
    return best


def charpoly_eigenvalues(g: OrientedHypergraph) -> list[float]:
    """Spectrum of L from its exact rational characteristic polynomial.

    Exact arithmetic plus companion-matrix rooting: a route entirely
    separate from the library's Jacobi-on-symmetric-conjugate path.
    """
    import sympy as sp

    a = adjacency_matrix(g)
    d = g.degrees
    n = g.n
    lap = sp.Matrix(
        n,
        n,
        lambda i, j: sp.Rational(1 if i == j else 0)
        - sp.Rational(int(a[i, j]), int(d[i])),
    )
    vals = []
    for root in lap.charpoly().all_roots():
        c = complex(root.evalf(30))
        assert abs(c.imag) < 1e-12
        vals.append(c.real)
    return sorted(vals)
