import random
from fractions import Fraction

import pytest

from cyclecones.errors import DomainError, InputError
from cyclecones.polytope import (
    RationalPolytope,
    maximize_linear,
    vertex_enumeration,
)
from cyclecones.simplex import OPTIMAL, maximize_affine
from cyclecones.vectors import ClassVector

F = Fraction


def triangle():
    return RationalPolytope.from_inequalities(
        "pt2", 2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)]
    )


def coords(vectors):
    return sorted(tuple(v.coords) for v in vectors)


def test_triangle_vertices():
    p = vertex_enumeration(triangle())
    assert coords(p.vertices) == [(0, 0), (0, 1), (1, 0)]


def test_infeasible_system_has_no_vertices():
    p = RationalPolytope.from_inequalities("pt1", 1, [((1,), 1), ((-1,), 0)])
    assert vertex_enumeration(p).vertices == ()
    assert p.is_empty()


def test_unbounded_system_rejected_with_direction():
    p = RationalPolytope.from_inequalities("pt2", 2, [((1, 0), 0), ((0, 1), 0)])
    with pytest.raises(DomainError) as err:
        vertex_enumeration(p)
    assert "recession_direction" in err.value.details


def test_degenerate_vertex_deduplicated():
    # four facets through the origin-adjacent corner must yield one vertex
    p = RationalPolytope.from_inequalities(
        "pt2",
        2,
        [((1, 0), 0), ((0, 1), 0), ((1, 1), 0), ((-1, -1), -1)],
    )
    assert coords(vertex_enumeration(p).vertices) == [(0, 0), (0, 1), (1, 0)]


def test_maximize_tie_returns_whole_face():
    value, face = maximize_linear(triangle(), ClassVector("pt2*", (1, 1)))
    assert value == 1
    assert coords(face) == [(0, 1), (1, 0)]


def test_maximize_unique_vertex():
    value, face = maximize_linear(triangle(), ClassVector("pt2*", (1, 0)))
    assert value == 1
    assert coords(face) == [(1, 0)]


def test_maximize_over_empty_polytope_rejected():
    p = RationalPolytope.from_inequalities("pt1", 1, [((1,), 1), ((-1,), 0)])
    with pytest.raises(DomainError):
        maximize_linear(p, ClassVector("pt1*", (1,)))


def test_objective_must_live_in_dual_basis():
    with pytest.raises(InputError):
        maximize_linear(triangle(), ClassVector("pt2", (1, 0)))


def test_lp_optimum_matches_vertex_scan_randomized():
    # independent routes: exact simplex vs brute-force vertex evaluation
    rng = random.Random(41_999)
    for _ in range(120):
        dim = rng.randint(2, 4)
        basis = f"lp{dim}"
        rows = [(tuple(int(i == j) for j in range(dim)), 0) for i in range(dim)]
        rows.append((tuple(-rng.randint(1, 3) for _ in range(dim)), -rng.randint(1, 9)))
        for _ in range(rng.randint(0, 3)):
            rows.append(
                (
                    tuple(rng.randint(-2, 2) for _ in range(dim)),
                    -rng.randint(0, 6),
                )
            )
        p = RationalPolytope.from_inequalities(basis, dim, rows)
        enumerated = vertex_enumeration(p)
        if not enumerated.vertices:
            continue
        objective = tuple(F(rng.randint(-5, 5)) for _ in range(dim))
        brute = max(
            sum((a * b for a, b in zip(objective, v.coords)), F(0))
            for v in enumerated.vertices
        )
        status, lp_value, _ = maximize_affine(
            [ineq.functional.coords for ineq in p.inequalities],
            [ineq.offset for ineq in p.inequalities],
            objective,
        )
        assert status == OPTIMAL
        assert lp_value == brute
        value, face = maximize_linear(enumerated, ClassVector(f"{basis}*", objective))
        assert value == brute and face
