"""Built-in reference instances with known exact values.

Each instance is embedded as OHG text (so the file format is exercised by
every golden check) together with its exact spectrum, invariants, and the
bound values expected from the report pipeline.  ``ratio_bound`` is None
when the regular/io-balanced precondition fails, ``chi_v_lower`` when the
denominator degenerates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypercore import OrientedHypergraph, parse_ohg


@dataclass(frozen=True)
class BuiltinExample:
    name: str
    summary: str
    ohg: str
    eigenvalues: tuple[float, ...]
    alpha: int
    alpha_w: int
    omega: int
    chi: int
    chi_v: float
    inertia_bound: int
    ratio_bound: float | None
    ratio_equality: bool | None
    chi_v_lower: float | None
    unity_number: int

    def load(self) -> OrientedHypergraph:
        return parse_ohg(self.ohg)


EXAMPLES: tuple[BuiltinExample, ...] = (
    BuiltinExample(
        name="loops5",
        summary="five singleton hyperedges: identity Laplacian, everything trivial",
        ohg="vertices 5\nedge +1\nedge +2\nedge +3\nedge +4\nedge +5\n",
        eigenvalues=(1.0, 1.0, 1.0, 1.0, 1.0),
        alpha=5,
        alpha_w=5,
        omega=1,
        chi=1,
        chi_v=1.0,
        inertia_bound=5,
        ratio_bound=None,
        ratio_equality=None,
        chi_v_lower=None,
        unity_number=1,
    ),
    BuiltinExample(
        name="ratio-sharp",
        summary="three balanced 4-vertex hyperedges; the ratio bound is attained",
        ohg=(
            "vertices 4\n"
            "edge +1 +2 -3 -4\n"
            "edge +1 -2 +3 -4\n"
            "edge +1 -2 -3 +4\n"
        ),
        eigenvalues=(0.0, 4.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0),
        alpha=1,
        alpha_w=1,
        omega=4,
        chi=4,
        chi_v=4.0,
        inertia_bound=1,
        ratio_bound=1.0,
        ratio_equality=True,
        chi_v_lower=4.0,
        unity_number=4,
    ),
    BuiltinExample(
        name="ex42",
        summary="two disjoint edges plus one balanced 4-vertex hyperedge;"
        " the ratio bound is strict and sign cancellation gives alpha_w > alpha",
        ohg="vertices 4\nedge +1 -2\nedge +3 -4\nedge +1 +2 -3 -4\n",
        eigenvalues=(0.0, 1.0, 1.0, 2.0),
        alpha=1,
        alpha_w=2,
        omega=4,
        chi=4,
        chi_v=4.0,
        inertia_bound=3,
        ratio_bound=2.0,
        ratio_equality=False,
        chi_v_lower=2.0,
        unity_number=2,
    ),
    BuiltinExample(
        name="allin5",
        summary="one hyperedge containing all five vertices (all inputs);"
        " the vector-coloring lower bound is attained",
        ohg="vertices 5\nedge +1 +2 +3 +4 +5\n",
        eigenvalues=(0.0, 0.0, 0.0, 0.0, 5.0),
        alpha=1,
        alpha_w=1,
        omega=5,
        chi=5,
        chi_v=5.0,
        inertia_bound=1,
        ratio_bound=None,
        ratio_equality=None,
        chi_v_lower=5.0,
        unity_number=5,
    ),
    BuiltinExample(
        name="ex55",
        summary="two edges out of vertex 1 plus one all-input 3-vertex hyperedge;"
        " the vector-coloring lower bound is strict",
        ohg="vertices 3\nedge +1 -2\nedge +1 -3\nedge +1 +2 +3\n",
        eigenvalues=(0.5, 1.0, 1.5),
        alpha=1,
        alpha_w=2,
        omega=3,
        chi=3,
        chi_v=3.0,
        inertia_bound=2,
        ratio_bound=None,
        ratio_equality=None,
        chi_v_lower=2.0,
        unity_number=2,
    ),
    BuiltinExample(
        name="ex62",
        summary="an edge plus a 3-vertex hyperedge; the coloring number exceeds"
        " the partition numbers and the partition bounds are attained",
        ohg="vertices 3\nedge +1 -2\nedge +1 +2 -3\n",
        eigenvalues=(0.0, 1.0, 2.0),
        alpha=1,
        alpha_w=2,
        omega=3,
        chi=3,
        chi_v=3.0,
        inertia_bound=2,
        ratio_bound=None,
        ratio_equality=None,
        chi_v_lower=2.0,
        unity_number=2,
    ),
)

_BY_NAME = {ex.name: ex for ex in EXAMPLES}


def names() -> tuple[str, ...]:
    return tuple(ex.name for ex in EXAMPLES)


def get(name: str) -> BuiltinExample:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; available: {', '.join(names())}") from None


def load(name: str) -> OrientedHypergraph:
    return get(name).load()
