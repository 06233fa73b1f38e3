"""Oriented hypergraph model: parsing, serialization, restriction, generation.

An oriented hypergraph assigns a sign to every vertex-hyperedge incidence:
+1 marks the vertex as an input of the hyperedge, -1 as an output.  Vertices
are numbered 1..n.  Hyperedges form an ordered multiset: duplicates are
allowed and preserved in order.  Every vertex must lie in at least one
hyperedge (degree >= 1), since the normalized Laplacian divides by degrees.

Text format (".ohg", UTF-8, line oriented)::

    # comment lines and blank lines are ignored
    vertices 4
    edge +1 +2 -3 -4
    edge +1 -2

``+v`` marks vertex ``v`` as an input of the edge, ``-v`` as an output.
The serializer emits one edge per line with tokens in ascending vertex
order, so parse/serialize round-trips are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable


class OHGError(ValueError):
    """Invalid oriented-hypergraph structure or parameters."""


class OHGParseError(OHGError):
    """Malformed OHG text; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Hyperedge:
    """One hyperedge: disjoint input and output vertex sets, not both empty.

    A vertex appears at most once per hyperedge, so the two sets must be
    disjoint; their union is the hyperedge's vertex set.
    """

    inputs: frozenset[int]
    outputs: frozenset[int]

    def __post_init__(self):
        if not isinstance(self.inputs, frozenset):
            object.__setattr__(self, "inputs", frozenset(self.inputs))
        if not isinstance(self.outputs, frozenset):
            object.__setattr__(self, "outputs", frozenset(self.outputs))
        if not self.inputs and not self.outputs:
            raise OHGError("empty hyperedge")
        shared = self.inputs & self.outputs
        if shared:
            raise OHGError(
                f"vertices {sorted(shared)} appear as both input and output"
            )

    @property
    def vertices(self) -> frozenset[int]:
        return self.inputs | self.outputs

    @property
    def size(self) -> int:
        return len(self.inputs) + len(self.outputs)

    def sign(self, v: int) -> int:
        """Incidence sign of vertex ``v``: +1 input, -1 output, 0 absent."""
        if v in self.inputs:
            return 1
        if v in self.outputs:
            return -1
        return 0


@dataclass(frozen=True)
class OrientedHypergraph:
    """Immutable oriented hypergraph on vertices 1..n.

    Construction validates the model invariants: vertex ids in range,
    nonempty hyperedges, and no degree-zero vertices.
    """

    n: int
    hyperedges: tuple[Hyperedge, ...]

    def __post_init__(self):
        object.__setattr__(self, "hyperedges", tuple(self.hyperedges))
        if self.n < 1:
            raise OHGError("vertex count must be >= 1")
        deg = [0] * (self.n + 1)
        for e in self.hyperedges:
            for v in e.vertices:
                if not 1 <= v <= self.n:
                    raise OHGError(f"vertex {v} outside 1..{self.n}")
                deg[v] += 1
        missing = [v for v in range(1, self.n + 1) if deg[v] == 0]
        if missing:
            raise OHGError(f"degree-zero vertices: {missing}")

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """degrees[i-1] = number of hyperedges containing vertex i."""
        deg = [0] * self.n
        for e in self.hyperedges:
            for v in e.vertices:
                deg[v - 1] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v - 1]


@dataclass(frozen=True)
class StructuralProfile:
    """Degree sequence plus regularity / balance / plain-graph flags.

    ``is_graph`` means every hyperedge has exactly one input and one output
    and no two hyperedges share the same vertex set; that implies
    ``io_balanced``.
    """

    degrees: tuple[int, ...]
    regular_degree: int | None
    io_balanced: bool
    is_graph: bool


def parse_ohg(text: str) -> OrientedHypergraph:
    """Parse OHG text (format in the module docstring)."""
    n: int | None = None
    edges: list[Hyperedge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "vertices" or len(fields) != 2:
                raise OHGParseError(lineno, "expected 'vertices <n>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise OHGParseError(
                    lineno, f"bad vertex count {fields[1]!r}"
                ) from None
            if n < 1:
                raise OHGParseError(lineno, "vertex count must be >= 1")
            continue
        if fields[0] != "edge":
            raise OHGParseError(lineno, f"expected 'edge', got {fields[0]!r}")
        if len(fields) == 1:
            raise OHGParseError(lineno, "empty hyperedge")
        inputs: set[int] = set()
        outputs: set[int] = set()
        for tok in fields[1:]:
            if len(tok) < 2 or tok[0] not in "+-" or not tok[1:].isdigit():
                raise OHGParseError(
                    lineno, f"bad incidence token {tok!r} (want +v or -v)"
                )
            v = int(tok[1:])
            if not 1 <= v <= n:
                raise OHGParseError(lineno, f"vertex {v} outside 1..{n}")
            if v in inputs or v in outputs:
                raise OHGParseError(lineno, f"vertex {v} repeated in hyperedge")
            (inputs if tok[0] == "+" else outputs).add(v)
        edges.append(Hyperedge(frozenset(inputs), frozenset(outputs)))
    if n is None:
        raise OHGParseError(1, "missing 'vertices <n>' header")
    return OrientedHypergraph(n, tuple(edges))


def serialize_ohg(g: OrientedHypergraph) -> str:
    """Render to OHG text: one edge per line, vertices ascending, '+' inputs."""
    lines = [f"vertices {g.n}"]
    for e in g.hyperedges:
        toks = [("+" if v in e.inputs else "-") + str(v) for v in sorted(e.vertices)]
        lines.append("edge " + " ".join(toks))
    return "\n".join(lines) + "\n"


def restrict(
    g: OrientedHypergraph, s: Iterable[int]
) -> tuple[OrientedHypergraph, tuple[int, ...]]:
    """Sub-hypergraph induced on the vertex set ``s``.

    Every nonempty intersection h ∩ s is kept (multiplicity and signs
    preserved, empty intersections dropped).  Kept vertices are relabeled
    1..|s| in ascending order; the returned tuple maps new id k to the
    original id at position k-1.
    """
    kept = sorted(set(s))
    if not kept:
        raise OHGError("restriction to empty vertex set")
    if kept[0] < 1 or kept[-1] > g.n:
        raise OHGError(f"restriction set not within 1..{g.n}")
    relabel = {v: i + 1 for i, v in enumerate(kept)}
    sset = frozenset(kept)
    edges = []
    for e in g.hyperedges:
        ins = frozenset(relabel[v] for v in e.inputs & sset)
        outs = frozenset(relabel[v] for v in e.outputs & sset)
        if ins or outs:
            edges.append(Hyperedge(ins, outs))
    return OrientedHypergraph(len(kept), tuple(edges)), tuple(kept)


def two_section(g: OrientedHypergraph) -> frozenset[tuple[int, int]]:
    """All pairs {i, j} co-contained in some hyperedge, signs ignored.

    Pairs are returned as (i, j) tuples with i < j.
    """
    pairs: set[tuple[int, int]] = set()
    for e in g.hyperedges:
        pairs.update(combinations(sorted(e.vertices), 2))
    return frozenset(pairs)


def structural_profile(g: OrientedHypergraph) -> StructuralProfile:
    """Degrees, regularity, input/output balance, and the plain-graph flag."""
    degs = g.degrees
    regular = degs[0] if len(set(degs)) == 1 else None
    balanced = all(len(e.inputs) == len(e.outputs) for e in g.hyperedges)
    simple = all(e.size == 2 and len(e.inputs) == 1 for e in g.hyperedges) and (
        len({e.vertices for e in g.hyperedges}) == g.m
    )
    return StructuralProfile(degs, regular, balanced, simple)


def random_hypergraph(
    n: int, m: int, size_range: tuple[int, int], seed: int
) -> OrientedHypergraph:
    """Seeded uniform generator.

    Each of the ``m`` hyperedges draws a uniform size from ``size_range``,
    a uniform vertex subset of that size, and independent uniform signs.
    Vertices left uncovered are patched with trailing singleton input
    hyperedges, so the result always satisfies the degree >= 1 invariant.
    """
    smin, smax = size_range
    if n < 1 or m < 1:
        raise OHGError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    if not 1 <= smin <= smax <= n:
        raise OHGError(f"need 1 <= size_min <= size_max <= n, got ({smin}, {smax})")
    rng = random.Random(seed)
    edges: list[Hyperedge] = []
    covered: set[int] = set()
    for _ in range(m):
        size = rng.randint(smin, smax)
        verts = rng.sample(range(1, n + 1), size)
        ins: set[int] = set()
        outs: set[int] = set()
        for v in verts:
            (ins if rng.random() < 0.5 else outs).add(v)
        edges.append(Hyperedge(frozenset(ins), frozenset(outs)))
        covered.update(verts)
    for v in range(1, n + 1):
        if v not in covered:
            edges.append(Hyperedge(frozenset({v}), frozenset()))
    return OrientedHypergraph(n, tuple(edges))


def random_graph(n: int, m: int, seed: int) -> OrientedHypergraph:
    """Seeded simple-graph encoding: size-2 hyperedges, one input, one output.

    Draws min(m, n*(n-1)/2) distinct vertex pairs with random orientation.
    Isolated vertices are patched with an extra edge to a random partner,
    so the result is always a valid graph encoding.  Requires n >= 2.
    """
    if n < 2:
        raise OHGError("graph encoding needs n >= 2")
    if m < 1:
        raise OHGError("need m >= 1")
    rng = random.Random(seed)
    all_pairs = list(combinations(range(1, n + 1), 2))
    pair_list = rng.sample(all_pairs, min(m, len(all_pairs)))
    pair_set = set(pair_list)
    covered = {v for p in pair_list for v in p}
    for v in range(1, n + 1):
        if v in covered:
            continue
        partners = [
            u
            for u in range(1, n + 1)
            if u != v and tuple(sorted((u, v))) not in pair_set
        ]
        u = rng.choice(partners)
        p = tuple(sorted((u, v)))
        pair_list.append(p)
        pair_set.add(p)
        covered.update(p)
    edges = []
    for i, j in pair_list:
        if rng.random() < 0.5:
            i, j = j, i
        edges.append(Hyperedge(frozenset({i}), frozenset({j})))
    return OrientedHypergraph(n, tuple(edges))
