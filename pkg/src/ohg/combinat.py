"""Exact independence, weak independence, clique, and coloring numbers.

All four reduce to searches over a pair graph held as bitmask adjacency:
independence and clique numbers run a branch-and-bound with a greedy
coloring bound, the coloring number runs iterative deepening with
DSATUR-style branching.  Witnesses are deterministic: the
lexicographically smallest optimum (vertex sets compared as sorted
tuples, colorings compared as color vectors).

Intended for exact work at small scale (n up to ~20); the weak
independence number uses the exact integer adjacency matrix, so a zero
entry means exactly zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ._fmt import jsonify
from .hypercore import OrientedHypergraph, two_section
from .spectral import adjacency_matrix


@dataclass(frozen=True)
class InvariantSet:
    """The four exact invariants with their verification witnesses."""

    alpha: int
    alpha_witness: tuple[int, ...]
    alpha_w: int
    alpha_w_witness: tuple[int, ...]
    omega: int
    omega_witness: tuple[int, ...]
    chi: int
    coloring: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "alpha": {"value": self.alpha, "witness": list(self.alpha_witness)},
            "alpha_w": {"value": self.alpha_w, "witness": list(self.alpha_w_witness)},
            "omega": {"value": self.omega, "witness": list(self.omega_witness)},
            "chi": {"value": self.chi, "coloring": list(self.coloring)},
        }

    def to_json(self) -> str:
        return json.dumps(jsonify(self.to_dict()))


def _pair_adjacency(n: int, pairs) -> list[int]:
    adj = [0] * n
    for i, j in pairs:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    return adj


def _complement(adj: list[int]) -> list[int]:
    n = len(adj)
    full = (1 << n) - 1
    return [full & ~adj[v] & ~(1 << v) for v in range(n)]


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v + 1)
        mask >>= 1
        v += 1
    return tuple(out)


def _greedy_color_order(adj: list[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy color classes of the subgraph on ``cand``.

    Returns vertices in class order with their class index, which upper
    bounds the clique extension size (Tomita-style pruning bound).
    """
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append(v)
            bounds.append(color)
            rest &= ~(1 << v)
            avail &= ~(1 << v) & ~adj[v]
    return order, bounds


def _max_clique_size(adj: list[int], cand: int, at_least: int = 0) -> int:
    best = at_least

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        order, bounds = _greedy_color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, cand)
    return best


def _lex_max_clique(adj: list[int], n: int, size: int) -> int:
    """Lexicographically smallest clique of the given (maximum) size."""
    chosen = 0
    cand = (1 << n) - 1
    remaining = size
    for v in range(n):
        if remaining == 0:
            break
        if not (cand >> v) & 1:
            continue
        sub = cand & adj[v]
        if 1 + _max_clique_size(adj, sub, remaining - 2) >= remaining:
            chosen |= 1 << v
            cand = sub
            remaining -= 1
    return chosen


def _clique_with_witness(adj: list[int], n: int) -> tuple[int, tuple[int, ...]]:
    size = _max_clique_size(adj, (1 << n) - 1)
    return size, _mask_vertices(_lex_max_clique(adj, n, size))


def _colorable(adj: list[int], n: int, k: int) -> bool:
    """Exact k-colorability via DSATUR-ordered backtracking.

    Fresh color indices are capped at one beyond the current maximum,
    which removes color-permutation symmetry.
    """
    if k >= n:
        return True
    colors = [0] * n
    neighbor_colors = [0] * n

    def pick() -> int:
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] == 0:
                key = (bin(neighbor_colors[v]).count("1"), bin(adj[v]).count("1"))
                if key > best_key:
                    best_v, best_key = v, key
        return best_v

    def dfs(done: int, max_used: int) -> bool:
        if done == n:
            return True
        v = pick()
        avail = ~neighbor_colors[v] & ((1 << min(k, max_used + 1)) - 1)
        while avail:
            cbit = avail & -avail
            avail &= avail - 1
            c = cbit.bit_length()
            colors[v] = c
            touched = []
            nb = adj[v]
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if colors[u] == 0 and not neighbor_colors[u] & cbit:
                    neighbor_colors[u] |= cbit
                    touched.append(u)
            if dfs(done + 1, max(max_used, c)):
                return True
            for u in touched:
                neighbor_colors[u] &= ~cbit
            colors[v] = 0
        return False

    return dfs(0, 0)


def _lex_coloring(adj: list[int], n: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest proper coloring with colors 1..k."""
    colors = [0] * n

    def dfs(v: int, max_used: int) -> bool:
        if v == n:
            return True
        used_by_neighbors = 0
        nb = adj[v]
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if u < v:
                used_by_neighbors |= 1 << (colors[u] - 1)
        for c in range(1, min(k, max_used + 1) + 1):
            if used_by_neighbors >> (c - 1) & 1:
                continue
            colors[v] = c
            if dfs(v + 1, max(max_used, c)):
                return True
        colors[v] = 0
        return False

    if not dfs(0, 0):
        raise RuntimeError(f"no {k}-coloring found for a {k}-chromatic graph")
    return tuple(colors)


def independence_number(g: OrientedHypergraph) -> tuple[int, tuple[int, ...]]:
    """Largest vertex set meeting every hyperedge at most once, with witness.

    Equals the maximum independent set of the two-section pair graph,
    computed as a maximum clique of its complement.
    """
    adj = _pair_adjacency(g.n, two_section(g))
    return _clique_with_witness(_complement(adj), g.n)


def weak_independence_number(g: OrientedHypergraph) -> tuple[int, tuple[int, ...]]:
    """Largest vertex set with exactly-zero pairwise adjacency entries.

    Unlike the independence number this depends on the orientation: equal
    counts of anti- and co-oriented co-memberships cancel to zero.
    """
    a = adjacency_matrix(g)
    conflicts = [
        (i + 1, j + 1)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if a[i, j] != 0
    ]
    adj = _pair_adjacency(g.n, conflicts)
    return _clique_with_witness(_complement(adj), g.n)


def clique_number(g: OrientedHypergraph) -> tuple[int, tuple[int, ...]]:
    """Largest pairwise co-contained vertex set, with witness."""
    adj = _pair_adjacency(g.n, two_section(g))
    return _clique_with_witness(adj, g.n)


def chromatic_number(g: OrientedHypergraph) -> tuple[int, tuple[int, ...]]:
    """Fewest colors so that co-contained vertices differ, with a witness coloring.

    The witness maps vertex i to ``coloring[i-1]`` with colors 1..chi.
    """
    adj = _pair_adjacency(g.n, two_section(g))
    chi = g.n
    for k in range(1, g.n + 1):
        if _colorable(adj, g.n, k):
            chi = k
            break
    return chi, _lex_coloring(adj, g.n, chi)


def invariant_set(g: OrientedHypergraph) -> InvariantSet:
    """All four invariants with witnesses."""
    alpha, aw = independence_number(g)
    alpha_w, aww = weak_independence_number(g)
    omega, ow = clique_number(g)
    chi, coloring = chromatic_number(g)
    return InvariantSet(alpha, aw, alpha_w, aww, omega, ow, chi, coloring)
