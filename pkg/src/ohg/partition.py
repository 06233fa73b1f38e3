"""Spectral partition numbers via exact subset dynamic programming.

A vertex subset is admissible at level lam when the restricted
sub-hypergraph's smallest (kind "geq") or largest (kind "leq")
normalized-Laplacian eigenvalue clears lam.  The partition number is
the fewest admissible parts covering all vertices, computed exactly by
dynamic programming over subset masks (O(3^n) submask enumeration).

"geq" is well defined only for lam <= 1 and "leq" only for lam >= 1:
single-vertex restrictions always have spectrum {1}, so partitions into
admissible parts exist exactly in those ranges.  Queries outside the
range are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ._fmt import jsonify
from .hypercore import OHGError, OrientedHypergraph, restrict
from .spectral import EPS_EQ, spectrum

GEQ = "geq"
LEQ = "leq"
HARD_CAP = 20   # 2^n restriction spectra + 3^n DP; practical up to ~14


class PartitionCapExceeded(RuntimeError):
    """Instance too large for the exact subset DP."""


@dataclass(frozen=True)
class PartitionResult:
    """A minimal admissible partition with per-part spectral extremes."""

    lam: float
    kind: str
    k: int
    parts: tuple[tuple[int, ...], ...]
    per_part_extremes: tuple[tuple[float, float], ...]

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "kind": self.kind,
            "k": self.k,
            "parts": [list(p) for p in self.parts],
            "per_part_extremes": [list(e) for e in self.per_part_extremes],
        }

    def to_json(self) -> str:
        return json.dumps(jsonify(self.to_dict()))


class SpectraCache:
    """Memoized (lambda_min, lambda_max) of restrictions, keyed by subset mask.

    Restriction spectra do not depend on the admissibility level, so one
    cache serves every (lam, kind) query against the same hypergraph.
    """

    def __init__(self, g: OrientedHypergraph):
        self.g = g
        self._extremes: dict[int, tuple[float, float]] = {}

    def extremes(self, mask: int) -> tuple[float, float]:
        cached = self._extremes.get(mask)
        if cached is None:
            verts = _mask_vertices(mask)
            sub, _ = restrict(self.g, verts)
            ev = spectrum(sub).eigenvalues
            cached = (ev[0], ev[-1])
            self._extremes[mask] = cached
        return cached


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v + 1)
        mask >>= 1
        v += 1
    return tuple(out)


def _vertices_mask(verts) -> int:
    mask = 0
    for v in verts:
        mask |= 1 << (v - 1)
    return mask


def _check_kind(kind: str) -> None:
    if kind not in (GEQ, LEQ):
        raise ValueError(f"kind must be {GEQ!r} or {LEQ!r}, got {kind!r}")


def _check_range(lam: float, kind: str, eps_eq: float) -> None:
    if kind == GEQ and lam > 1.0 + eps_eq:
        raise ValueError(f"kind 'geq' is well defined only for lambda <= 1, got {lam}")
    if kind == LEQ and lam < 1.0 - eps_eq:
        raise ValueError(f"kind 'leq' is well defined only for lambda >= 1, got {lam}")


def admissible(
    g: OrientedHypergraph,
    subset,
    lam: float,
    kind: str,
    eps_eq: float = EPS_EQ,
    cache: SpectraCache | None = None,
) -> bool:
    """Whether the restriction to ``subset`` clears ``lam`` for ``kind``."""
    _check_kind(kind)
    verts = sorted(set(subset))
    if not verts:
        raise OHGError("admissibility of the empty set")
    if verts[0] < 1 or verts[-1] > g.n:
        raise OHGError(f"subset not within 1..{g.n}")
    if cache is None:
        cache = SpectraCache(g)
    lmin, lmax = cache.extremes(_vertices_mask(verts))
    if kind == GEQ:
        return lmin >= lam - eps_eq
    return lmax <= lam + eps_eq


def partition_number(
    g: OrientedHypergraph,
    lam: float,
    kind: str,
    eps_eq: float = EPS_EQ,
    cache: SpectraCache | None = None,
) -> PartitionResult:
    """Exact minimum number of admissible parts, with a witness partition.

    The witness is deterministic: among all optimal partitions, parts are
    chosen greedily to be lexicographically smallest (as sorted tuples),
    starting from the part containing vertex 1.
    """
    _check_kind(kind)
    _check_range(lam, kind, eps_eq)
    if g.n > HARD_CAP:
        raise PartitionCapExceeded(f"n={g.n} exceeds the exact-DP cap {HARD_CAP}")
    if cache is None:
        cache = SpectraCache(g)

    adm: dict[int, bool] = {}

    def admissible_mask(mask: int) -> bool:
        ok = adm.get(mask)
        if ok is None:
            lmin, lmax = cache.extremes(mask)
            ok = lmin >= lam - eps_eq if kind == GEQ else lmax <= lam + eps_eq
            adm[mask] = ok
        return ok

    full = (1 << g.n) - 1
    inf = g.n + 1
    f = [0] * (full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        best = inf
        sub = mask
        while sub:
            if sub & low and admissible_mask(sub):
                cand = f[mask ^ sub] + 1
                if cand < best:
                    best = cand
            sub = (sub - 1) & mask
        f[mask] = best

    parts: list[tuple[int, ...]] = []
    mask = full
    while mask:
        low = mask & -mask
        best_part: tuple[int, ...] | None = None
        best_mask = 0
        sub = mask
        while sub:
            if sub & low and f[mask ^ sub] + 1 == f[mask] and admissible_mask(sub):
                verts = _mask_vertices(sub)
                if best_part is None or verts < best_part:
                    best_part, best_mask = verts, sub
            sub = (sub - 1) & mask
        assert best_part is not None
        parts.append(best_part)
        mask ^= best_mask

    extremes = tuple(cache.extremes(_vertices_mask(p)) for p in parts)
    return PartitionResult(
        lam=float(lam),
        kind=kind,
        k=f[full],
        parts=tuple(parts),
        per_part_extremes=extremes,
    )
