"""Matrices and spectra of oriented hypergraphs.

Adjacency entries count anti-oriented minus co-oriented co-memberships,
integer exact.  The normalized Laplacian L = Id - D^{-1} A is similar to
the symmetric conjugate D^{1/2} L D^{-1/2}; spectra are computed on the
symmetric form with a cyclic Jacobi sweep (off-diagonal target
1e-12 * ||.||_F, at most 100 sweeps), which is unconditionally stable at
the dense sizes this library targets (n <= 64).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from numba import njit

from ._fmt import jsonify
from .hypercore import OrientedHypergraph

EPS_EQ = 1e-9            # default tolerance for "eigenvalue equals 1"
JACOBI_REL_TOL = 1e-12   # off-diagonal Frobenius target, relative to ||.||_F
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi sweep cap exceeded; input is numerically pathological."""


def adjacency_matrix(g: OrientedHypergraph) -> np.ndarray:
    """Integer adjacency: A[i,j] = #(anti-oriented) - #(co-oriented) pairs.

    Computed by enumerating co-memberships hyperedge by hyperedge, so the
    entries are exact int64 values with zero diagonal.
    """
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for e in g.hyperedges:
        ins = sorted(e.inputs)
        outs = sorted(e.outputs)
        for i, j in combinations(ins, 2):
            a[i - 1, j - 1] -= 1
            a[j - 1, i - 1] -= 1
        for i, j in combinations(outs, 2):
            a[i - 1, j - 1] -= 1
            a[j - 1, i - 1] -= 1
        for i in ins:
            for j in outs:
                a[i - 1, j - 1] += 1
                a[j - 1, i - 1] += 1
    return a


def normalized_laplacian(g: OrientedHypergraph) -> np.ndarray:
    """L = Id - D^{-1} A (rows scaled by vertex degree); not symmetric in general."""
    a = adjacency_matrix(g).astype(float)
    d = np.asarray(g.degrees, dtype=float)
    return np.eye(g.n) - a / d[:, None]


def chung_laplacian(g: OrientedHypergraph) -> np.ndarray:
    """Symmetric conjugate D^{1/2} L D^{-1/2}; same spectrum as L."""
    a = adjacency_matrix(g).astype(float)
    d = np.asarray(g.degrees, dtype=float)
    return np.eye(g.n) - a / np.sqrt(np.outer(d, d))


@njit(cache=True)
def _jacobi_cyclic(a, v, tol, max_sweeps):
    """In-place cyclic Jacobi on symmetric ``a``, rotations accumulated in ``v``.

    Returns the number of sweeps used, or -1 when the off-diagonal norm is
    still above ``tol`` after ``max_sweeps``.
    """
    n = a.shape[0]
    if n < 2:
        return 0
    thresh = tol / n
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        if math.sqrt(off) <= tol:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = akp - s * (akq + tau * akp)
                        a[p, k] = a[k, p]
                        a[k, q] = akq + s * (akp - tau * akq)
                        a[q, k] = a[k, q]
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = vkp - s * (vkq + tau * vkp)
                    v[k, q] = vkq + s * (vkp - tau * vkq)
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off += 2.0 * a[p, q] * a[p, q]
    if math.sqrt(off) <= tol:
        return max_sweeps
    return -1


def symmetric_eigh(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues ascending, orthonormal eigenvectors as columns).
    This is the library's own eigensolver path, independent of LAPACK; it
    also serves to re-verify witnesses produced elsewhere.
    """
    a = np.array(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix required")
    n = a.shape[0]
    v = np.eye(n)
    tol = JACOBI_REL_TOL * math.sqrt(float((a * a).sum()))
    sweeps = _jacobi_cyclic(a, v, tol, JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(
            f"Jacobi did not reach off-norm {tol:g} in {JACOBI_MAX_SWEEPS} sweeps"
        )
    w = np.diagonal(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


@dataclass(frozen=True)
class SpectralSummary:
    """Sorted spectrum of the symmetric Laplacian plus unit-eigenvalue counts.

    ``eigenvectors`` column k pairs with ``eigenvalues[k]`` and is an
    eigenvector of the symmetric (Chung) form; the matching eigenvector of
    L itself is obtained by scaling entry i with deg(i)^{-1/2}.
    """

    eigenvalues: tuple[float, ...]
    eigenvectors: np.ndarray
    below_one: int
    at_one: int
    above_one: int
    eps_eq: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def lambda_min(self) -> float:
        return self.eigenvalues[0]

    @property
    def lambda_max(self) -> float:
        return self.eigenvalues[-1]

    def to_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "counts": {
                "below_one": self.below_one,
                "at_one": self.at_one,
                "above_one": self.above_one,
            },
        }

    def to_json(self) -> str:
        return json.dumps(jsonify(self.to_dict()))


def spectrum(g: OrientedHypergraph, eps_eq: float = EPS_EQ) -> SpectralSummary:
    """Eigendecomposition of the symmetric Laplacian of ``g``.

    Eigenvalues are sorted nondecreasing; negatives within the numerical
    tolerance are clamped to zero (the true spectrum is nonnegative).
    ``eps_eq`` only affects the below/at/above-one counts.
    """
    if eps_eq <= 0:
        raise ValueError("eps_eq must be positive")
    cl = chung_laplacian(g)
    tol = JACOBI_REL_TOL * math.sqrt(float((cl * cl).sum()))
    w, v = symmetric_eigh(cl)
    w[(w < 0.0) & (w >= -tol)] = 0.0
    v.setflags(write=False)
    ev = tuple(float(x) for x in w)
    return SpectralSummary(
        eigenvalues=ev,
        eigenvectors=v,
        below_one=sum(1 for x in ev if x <= 1.0 - eps_eq),
        at_one=sum(1 for x in ev if abs(x - 1.0) <= eps_eq),
        above_one=sum(1 for x in ev if x >= 1.0 + eps_eq),
        eps_eq=eps_eq,
    )


def rayleigh_quotient(g: OrientedHypergraph, f) -> float:
    """Energy quotient of ``f``, evaluated straight from the incidence lists.

    Numerator: per hyperedge, the squared difference between the input sum
    and the output sum of ``f``.  Denominator: degree-weighted squared norm.
    """
    vec = np.asarray(f, dtype=float)
    if vec.shape != (g.n,):
        raise ValueError(f"vector of length {g.n} required")
    if not np.any(vec):
        raise ValueError("Rayleigh quotient of the zero vector")
    num = 0.0
    for e in g.hyperedges:
        s = sum(vec[v - 1] for v in e.inputs) - sum(vec[v - 1] for v in e.outputs)
        num += s * s
    den = float(np.dot(np.asarray(g.degrees, dtype=float), vec * vec))
    if den == 0.0:
        # subnormal entries can square to zero even when the vector is not
        raise ValueError("degree-weighted norm of f underflows to zero")
    return num / den
