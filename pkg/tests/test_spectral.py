import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ohg.hypercore import Hyperedge, OrientedHypergraph, random_hypergraph
from ohg.spectral import (
    adjacency_matrix,
    chung_laplacian,
    normalized_laplacian,
    rayleigh_quotient,
    spectrum,
    symmetric_eigh,
)

from oracles import (
    charpoly_eigenvalues,
    complete_graph,
    complete_spectrum,
    cycle_graph,
    cycle_spectrum,
    path_graph,
    path_spectrum,
)


@st.composite
def instances(draw, max_n=8, max_m=8):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_hypergraph(n, m, (1, n), seed)


def all_inputs(n):
    return OrientedHypergraph(n, (Hyperedge(frozenset(range(1, n + 1)), frozenset()),))


def test_adjacency_cancellation(ex42):
    a = adjacency_matrix(ex42)
    want = np.array(
        [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]], dtype=np.int64
    )
    assert (a == want).all()


def test_adjacency_all_ones_off_diagonal(ratio_sharp):
    a = adjacency_matrix(ratio_sharp)
    want = np.ones((4, 4), dtype=np.int64) - np.eye(4, dtype=np.int64)
    assert (a == want).all()


def test_adjacency_singletons_vanish(loops5):
    assert not adjacency_matrix(loops5).any()


@settings(max_examples=50, deadline=None)
@given(instances())
def test_adjacency_symmetric_bounded(g):
    a = adjacency_matrix(g)
    assert (a == a.T).all()
    assert not a.diagonal().any()
    d = g.degrees
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                assert abs(a[i, j]) <= min(d[i], d[j])


def test_laplacian_identity(loops5):
    assert np.allclose(normalized_laplacian(loops5), np.eye(5), atol=0)


def test_laplacian_entries(ex55):
    lap = normalized_laplacian(ex55)
    assert lap[0].tolist() == [1.0, 0.0, 0.0]
    assert lap[1, 2] == 0.5 and lap[2, 1] == 0.5


def test_laplacian_all_ones():
    lap = normalized_laplacian(all_inputs(4))
    assert np.allclose(lap, np.ones((4, 4)), atol=0)


def test_chung_equals_laplacian_when_regular(ratio_sharp):
    assert np.allclose(
        chung_laplacian(ratio_sharp), normalized_laplacian(ratio_sharp), atol=0
    )


def test_chung_symmetric_and_similar(ex55):
    cl = chung_laplacian(ex55)
    assert (cl == cl.T).all()
    assert cl[1, 2] == 0.5


@pytest.mark.parametrize("name", ["ex55", "ex62", "ex42", "ratio-sharp"])
def test_spectrum_matches_charpoly_roots(name):
    from ohg.builtin import load

    g = load(name)
    got = spectrum(g).eigenvalues
    want = charpoly_eigenvalues(g)
    assert got == pytest.approx(want, abs=1e-9)


@settings(max_examples=25, deadline=None)
@given(instances(max_n=4, max_m=5))
def test_spectrum_matches_charpoly_roots_random(g):
    got = spectrum(g).eigenvalues
    want = charpoly_eigenvalues(g)
    assert got == pytest.approx(want, abs=1e-9)


def test_spectrum_goldens(ex62, ex55, ex42):
    assert spectrum(ex62).eigenvalues == pytest.approx((0.0, 1.0, 2.0), abs=1e-9)
    assert spectrum(ex55).eigenvalues == pytest.approx((0.5, 1.0, 1.5), abs=1e-9)
    assert spectrum(ex42).eigenvalues == pytest.approx((0.0, 1.0, 1.0, 2.0), abs=1e-9)


def test_spectrum_counts(ex62):
    s = spectrum(ex62)
    assert (s.below_one, s.at_one, s.above_one) == (1, 1, 1)
    loops = spectrum(all_inputs(5))
    assert (loops.below_one, loops.at_one, loops.above_one) == (4, 0, 1)


def test_spectrum_validates_eps():
    with pytest.raises(ValueError):
        spectrum(all_inputs(2), eps_eq=0.0)


@settings(max_examples=50, deadline=None)
@given(instances())
def test_spectrum_nonnegative_sums_to_n(g):
    ev = spectrum(g).eigenvalues
    assert all(x >= 0.0 for x in ev)
    assert math.fsum(ev) == pytest.approx(g.n, abs=1e-9 * g.n)
    assert list(ev) == sorted(ev)


@settings(max_examples=40, deadline=None)
@given(instances())
def test_eigenvectors_orthonormal(g):
    s = spectrum(g)
    v = s.eigenvectors
    assert np.allclose(v.T @ v, np.eye(g.n), atol=1e-10)
    cl = chung_laplacian(g)
    assert np.allclose(cl @ v, v * np.asarray(s.eigenvalues), atol=1e-9)


def test_symmetric_eigh_requires_square():
    with pytest.raises(ValueError):
        symmetric_eigh(np.zeros((2, 3)))


def test_rayleigh_constant_on_singletons(loops5):
    rng = random.Random(0)
    for _ in range(5):
        f = [rng.uniform(-2, 2) or 1.0 for _ in range(5)]
        assert rayleigh_quotient(loops5, f) == pytest.approx(1.0, abs=1e-12)


def test_rayleigh_hand_value(ex62):
    assert rayleigh_quotient(ex62, [1.0, 1.0, 1.0]) == pytest.approx(0.2, abs=1e-12)


def test_rayleigh_rejects_bad_input(ex62):
    with pytest.raises(ValueError):
        rayleigh_quotient(ex62, [0.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        rayleigh_quotient(ex62, [1.0, 2.0])


@settings(max_examples=50, deadline=None)
@given(instances(), st.randoms(use_true_random=False))
def test_rayleigh_within_spectral_range(g, rng):
    f = [rng.uniform(-1, 1) for _ in range(g.n)]
    if max(abs(x) for x in f) < 1e-6:
        f[0] = 1.0
    s = spectrum(g)
    q = rayleigh_quotient(g, f)
    assert s.lambda_min - 1e-9 <= q <= s.lambda_max + 1e-9


@settings(max_examples=40, deadline=None)
@given(instances())
def test_rayleigh_on_eigenvectors(g):
    s = spectrum(g)
    scale = np.asarray(g.degrees, dtype=float) ** -0.5
    for k in (0, g.n - 1):
        f = scale * s.eigenvectors[:, k]
        assert rayleigh_quotient(g, f) == pytest.approx(s.eigenvalues[k], abs=1e-8)


@settings(max_examples=40, deadline=None)
@given(instances(max_n=6), st.randoms(use_true_random=False))
def test_vector_tuple_quotient_within_range(g, rng):
    # degree-weighted quotient over tuples of vectors, one per vertex
    dim = 3
    vecs = np.array([[rng.uniform(-1, 1) for _ in range(dim)] for _ in range(g.n)])
    if np.abs(vecs).max() < 1e-6:
        vecs[0, 0] = 1.0
    lap = normalized_laplacian(g)
    d = g.degrees
    num = 0.0
    for i in range(g.n):
        for j in range(g.n):
            num += math.sqrt(d[i] / d[j]) * lap[i, j] * float(vecs[i] @ vecs[j])
    den = float((vecs * vecs).sum())
    s = spectrum(g)
    assert s.lambda_min - 1e-9 <= num / den <= s.lambda_max + 1e-9


@pytest.mark.parametrize(
    "graph, closed_form",
    [
        (path_graph(4), path_spectrum(4)),
        (cycle_graph(5), cycle_spectrum(5)),
        (complete_graph(4), complete_spectrum(4)),
    ],
)
def test_classical_graph_spectra(graph, closed_form):
    assert spectrum(graph).eigenvalues == pytest.approx(closed_form, abs=1e-9)


def test_summary_json_schema(ex62):
    import json

    data = json.loads(spectrum(ex62).to_json())
    assert set(data) == {"eigenvalues", "counts"}
    assert data["counts"] == {"below_one": 1, "at_one": 1, "above_one": 1}
    assert data["eigenvalues"] == sorted(data["eigenvalues"])
