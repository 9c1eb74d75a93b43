"""Bounded rational polytopes: exact vertex enumeration and optimization.

Vertices come from enumerating maximal-rank subsets of the defining
inequalities; the linear optimizer runs exact simplex on the inequality
description and cross-checks against the vertex scan, so the two routes
must agree on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import CycleConesError, DomainError, InputError
from .rationals import rat
from .simplex import OPTIMAL, maximize_affine
from . import cones
from .vectors import ClassVector, dual_basis


@dataclass(frozen=True)
class AffineInequality:
    """<functional, x> >= offset, with the functional in the dual basis."""

    functional: ClassVector
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "offset", rat(self.offset))

    def holds_at(self, point: ClassVector) -> bool:
        return self.value_at(point) >= self.offset

    def value_at(self, point: ClassVector) -> Fraction:
        return sum(
            (a * b for a, b in zip(self.functional.coords, point.coords)),
            Fraction(0),
        )


@dataclass(frozen=True)
class RationalPolytope:
    basis: str
    dim: int
    inequalities: tuple[AffineInequality, ...]
    vertices: tuple[ClassVector, ...] | None = None

    def __post_init__(self):
        dual = dual_basis(self.basis)
        for ineq in self.inequalities:
            if ineq.functional.basis != dual or ineq.functional.dim != self.dim:
                raise InputError("inequality functional outside the dual basis")
        for v in self.vertices or ():
            if v.basis != self.basis or v.dim != self.dim:
                raise InputError("vertex outside the polytope's basis")

    @staticmethod
    def from_inequalities(basis: str, dim: int, rows) -> "RationalPolytope":
        dual = dual_basis(basis)
        ineqs = tuple(
            AffineInequality(
                ClassVector(dual, tuple(rat(x) for x in row)), rat(offset)
            )
            for row, offset in rows
        )
        return RationalPolytope(basis, dim, ineqs)

    def feasible(self, point: ClassVector) -> bool:
        return all(ineq.holds_at(point) for ineq in self.inequalities)

    def is_empty(self) -> bool:
        return not vertex_enumeration(self).vertices


def recession_direction(p: RationalPolytope) -> ClassVector | None:
    """A nonzero direction of the recession cone, or None when bounded."""
    rows = [ineq.functional.coords for ineq in p.inequalities]
    lineality, rays = cones.double_description(rows, p.dim)
    if lineality:
        return ClassVector(p.basis, lineality[0])
    if rays:
        return ClassVector(p.basis, rays[0])
    return None


def vertex_enumeration(p: RationalPolytope) -> RationalPolytope:
    """The same polytope with its exact, irredundant vertex list attached.

    Requires boundedness, which is verified by checking that the recession
    cone is trivial; an unbounded system raises a domain error carrying a
    recession direction.  An infeasible system yields an empty vertex list.
    """
    if p.vertices is not None:
        return p
    direction = recession_direction(p)
    if direction is not None:
        raise DomainError(
            "inequality system is unbounded",
            recession_direction=[str(c) for c in direction.coords],
        )
    # clear denominators once so the subset solves run on machine integers
    int_rows: list[tuple[int, ...]] = []
    int_offsets: list[int] = []
    for ineq in p.inequalities:
        scale = 1
        for c in (*ineq.functional.coords, ineq.offset):
            scale = scale * c.denominator // gcd(scale, c.denominator)
        int_rows.append(tuple(int(c * scale) for c in ineq.functional.coords))
        int_offsets.append(int(ineq.offset * scale))
    seen: set[tuple] = set()
    points: list[ClassVector] = []
    for subset in combinations(range(len(int_rows)), p.dim):
        solution = _solve_int_square(
            [int_rows[i] for i in subset], [int_offsets[i] for i in subset]
        )
        if solution is None or solution in seen:
            continue
        feasible = all(
            sum(r * c for r, c in zip(row, solution)) >= off
            for row, off in zip(int_rows, int_offsets)
        )
        if feasible:
            seen.add(solution)
            points.append(ClassVector(p.basis, solution))
    points.sort(key=lambda v: v.coords)
    return RationalPolytope(p.basis, p.dim, p.inequalities, tuple(points))


def _solve_int_square(rows: list[tuple[int, ...]], rhs: list[int]):
    """Solve a square integer system exactly; None when singular.

    Forward elimination by cross-multiplication keeps everything in plain
    integers; only the back substitution produces Fractions.
    """
    n = len(rows)
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return None
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
        head = m[c]
        lead = head[c]
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                m[i] = [lead * a - f * b for a, b in zip(m[i], head)]
    solution = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = m[i][n] - sum(m[i][j] * solution[j] for j in range(i + 1, n))
        solution[i] = Fraction(acc) / m[i][i] if not isinstance(acc, Fraction) else acc / m[i][i]
    return tuple(solution)


def maximize_linear(p: RationalPolytope, objective: ClassVector):
    """Exact maximum of a linear objective and all vertices attaining it.

    Two independent routes compute the optimum: simplex on the inequality
    description and a scan over the enumerated vertices.  They are required
    to agree; ties are never broken here, the whole optimal face's vertex
    set is returned, sorted.
    """
    if objective.basis != dual_basis(p.basis) or objective.dim != p.dim:
        raise InputError("objective must be a functional in the dual basis")
    enumerated = vertex_enumeration(p)
    if not enumerated.vertices:
        raise DomainError("cannot optimize over an empty polytope")
    values = [
        sum((a * b for a, b in zip(objective.coords, v.coords)), Fraction(0))
        for v in enumerated.vertices
    ]
    best = max(values)
    optimal = tuple(
        v for v, val in zip(enumerated.vertices, values) if val == best
    )

    status, lp_value, _ = maximize_affine(
        [ineq.functional.coords for ineq in p.inequalities],
        [ineq.offset for ineq in p.inequalities],
        objective.coords,
    )
    if status != OPTIMAL or lp_value != best:
        raise CycleConesError(
            f"optimizer disagreement: simplex {status}/{lp_value}, "
            f"vertex scan {best}"
        )
    return best, optimal
