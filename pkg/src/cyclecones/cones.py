"""Polyhedral cones as dual generator/inequality pairs, with exact conversion.

The converter is the double description method: constraints are inserted one
at a time into a growing cone, splitting rays on the new hyperplane and
combining adjacent positive/negative pairs.  Lineality (non-pointed input)
is handled natively, so the zero cone and the full space are ordinary
values.  Dimensions in this package stay small (<= 8), so no effort is
spent on insertion-order heuristics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError, InputError
from .linalg import nullspace
from .rationals import rat
from .simplex import nonneg_solve
from .vectors import ClassVector, dual_basis

Row = tuple[Fraction, ...]


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _int_primitive(row) -> tuple[int, ...]:
    """Primitive integer form of a rational row, preserving orientation."""
    common = 1
    for x in row:
        if isinstance(x, Fraction):
            common = common * x.denominator // gcd(common, x.denominator)
    ints = [int(x * common) for x in row]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content == 0:
        return tuple(ints)
    return tuple(v // content for v in ints)


def _primitive(row: Sequence[Fraction]) -> Row:
    """Scale to coprime integer entries, preserving orientation."""
    return tuple(Fraction(v) for v in _int_primitive(row))


def double_description(rows: Iterable[Sequence[Fraction]], dim: int):
    """Generators of the cone {x : <r, x> >= 0 for every r in rows}.

    Returns ``(lineality, rays)``: a basis of the lineality space and the
    extremal rays of the pointed quotient, all primitive.  Together they
    generate the cone as ``span(lineality) + cone(rays)``.

    Insertion maintains three invariants: every processed constraint
    vanishes on the current lineality span, the ray list is exactly the
    extremal rays of the current cone modulo lineality, and each ray's
    recorded tight set matches the processed constraints vanishing on it.
    Adjacency of a positive/negative ray pair is decided combinatorially:
    no third ray's tight set may contain the pair's common tight set.
    """
    lineality: list[tuple[int, ...]] = [
        tuple(int(i == j) for j in range(dim)) for i in range(dim)
    ]
    rays: list[tuple[int, ...]] = []
    tight: list[set[int]] = []

    for idx, raw in enumerate(rows):
        checked = tuple(rat(x) for x in raw)
        if len(checked) != dim:
            raise InputError(f"constraint of length {len(checked)} in dimension {dim}")
        if not any(checked):
            continue
        a = _int_primitive(checked)

        def idot(u, v=a):
            return sum(x * y for x, y in zip(u, v))

        hit = next((i for i, l in enumerate(lineality) if idot(l) != 0), None)
        if hit is not None:
            z = lineality.pop(hit)
            az = idot(z)
            if az < 0:
                z = tuple(-x for x in z)
                az = -az
            # az * l - <a,l> * z is a positive rescaling of the projection
            lineality = [
                _int_primitive(
                    tuple(az * l_i - idot(l) * z_i for l_i, z_i in zip(l, z))
                )
                for l in lineality
            ]
            rays = [
                _int_primitive(
                    tuple(az * r_i - idot(r) * z_i for r_i, z_i in zip(r, z))
                )
                for r in rays
            ]
            for t in tight:  # adjusted rays land exactly on the new hyperplane
                t.add(idx)
            rays.append(z)
            tight.append(set(range(idx)))
            continue

        values = [idot(r) for r in rays]
        if all(v >= 0 for v in values):
            for i, v in enumerate(values):
                if v == 0:
                    tight[i].add(idx)
            continue

        positive = [i for i, v in enumerate(values) if v > 0]
        negative = [i for i, v in enumerate(values) if v < 0]
        zero = [i for i, v in enumerate(values) if v == 0]

        new_rays: list[tuple[int, ...]] = [rays[i] for i in positive]
        new_tight: list[set[int]] = [set(tight[i]) for i in positive]
        for i in zero:
            new_rays.append(rays[i])
            new_tight.append(tight[i] | {idx})
        for ip in positive:
            for im in negative:
                common = tight[ip] & tight[im]
                blocked = any(
                    k not in (ip, im) and common <= tight[k]
                    for k in range(len(rays))
                )
                if blocked:
                    continue
                combo = _int_primitive(
                    tuple(
                        values[ip] * rays[im][j] - values[im] * rays[ip][j]
                        for j in range(dim)
                    )
                )
                new_rays.append(combo)
                new_tight.append(common | {idx})
        rays, tight = new_rays, new_tight

    return (
        [tuple(Fraction(x) for x in v) for v in lineality],
        [tuple(Fraction(x) for x in v) for v in rays],
    )


def _generators_from_dd(lineality: list[Row], rays: list[Row]) -> list[Row]:
    gens = list(rays)
    for l in lineality:
        gens.append(l)
        gens.append(tuple(-x for x in l))
    return sorted(set(gens))


@dataclass(frozen=True)
class PolyCone:
    """A convex polyhedral cone carried as a generator/inequality pair.

    ``generators`` live in ``basis``; ``inequalities`` are functionals in
    the dual basis, each meaning <functional, x> >= 0.  A representation is
    authoritative exactly when it is not None; an empty tuple is meaningful
    (no generators: the zero cone; no inequalities: the full space).
    ``canonical`` marks cones produced by ``dd_convert``; it is bookkeeping,
    not part of the value.
    """

    basis: str
    dim: int
    generators: tuple[ClassVector, ...] | None = None
    inequalities: tuple[ClassVector, ...] | None = None
    canonical: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.generators is None and self.inequalities is None:
            raise InputError("cone needs at least one representation")
        for g in self.generators or ():
            if g.basis != self.basis or g.dim != self.dim:
                raise InputError("generator outside the cone's basis")
        dual = dual_basis(self.basis)
        for l in self.inequalities or ():
            if l.basis != dual or l.dim != self.dim:
                raise InputError("inequality functional outside the dual basis")

    @staticmethod
    def from_generators(basis: str, rows, dim: int | None = None) -> "PolyCone":
        vectors = tuple(
            v if isinstance(v, ClassVector) else ClassVector(basis, tuple(rat(x) for x in v))
            for v in rows
        )
        if dim is None:
            if not vectors:
                raise InputError("dim required for a cone with no generators")
            dim = vectors[0].dim
        return PolyCone(basis, dim, generators=vectors)

    @staticmethod
    def from_inequalities(basis: str, rows, dim: int | None = None) -> "PolyCone":
        dual = dual_basis(basis)
        vectors = tuple(
            v if isinstance(v, ClassVector) else ClassVector(dual, tuple(rat(x) for x in v))
            for v in rows
        )
        if dim is None:
            if not vectors:
                raise InputError("dim required for a cone with no inequalities")
            dim = vectors[0].dim
        return PolyCone(basis, dim, inequalities=vectors)

    @staticmethod
    def zero(basis: str, dim: int) -> "PolyCone":
        return PolyCone(basis, dim, generators=())

    @staticmethod
    def full_space(basis: str, dim: int) -> "PolyCone":
        return PolyCone(basis, dim, inequalities=())

    def generator_rows(self) -> list[Row]:
        return [g.coords for g in self.generators or ()]

    def inequality_rows(self) -> list[Row]:
        return [l.coords for l in self.inequalities or ()]

    def is_converted(self) -> bool:
        return self.generators is not None and self.inequalities is not None


def dd_convert(cone: PolyCone) -> PolyCone:
    """Return the same cone with both representations present and canonical.

    Canonical means: primitive vectors, sorted, irredundant (for a salient
    cone the generators are exactly the extremal rays; for a non-salient
    cone they are extremal rays of the pointed quotient plus a +/- pair per
    lineality basis vector).  If both representations were supplied, they
    are cross-checked against each other before being replaced.
    """
    if cone.canonical:
        return cone
    dual = dual_basis(cone.basis)
    if cone.inequalities is not None:
        lin, rays = double_description(cone.inequality_rows(), cone.dim)
        gen_rows = _generators_from_dd(lin, rays)
        lin2, rays2 = double_description(gen_rows, cone.dim)
        canonical_ineqs = _generators_from_dd(lin2, rays2)
    else:
        lin, rays = double_description(cone.generator_rows(), cone.dim)
        canonical_ineqs = _generators_from_dd(lin, rays)
        lin2, rays2 = double_description(canonical_ineqs, cone.dim)
        gen_rows = _generators_from_dd(lin2, rays2)

    result = PolyCone(
        cone.basis,
        cone.dim,
        generators=tuple(ClassVector(cone.basis, row) for row in gen_rows),
        inequalities=tuple(ClassVector(dual, row) for row in canonical_ineqs),
        canonical=True,
    )

    if cone.generators is not None and cone.inequalities is not None:
        for g in cone.generators:
            if any(_dot(row, g.coords) < 0 for row in canonical_ineqs):
                raise InputError(
                    "inconsistent cone: a supplied generator violates the "
                    "supplied inequalities"
                )
        for l in cone.inequalities:
            if any(_dot(l.coords, row) < 0 for row in gen_rows):
                raise InputError(
                    "inconsistent cone: a supplied inequality cuts off part "
                    "of the generated cone"
                )
    elif cone.generators is not None:
        # the canonical generators must reproduce exactly the input cone;
        # every input generator has to satisfy the computed inequalities
        for g in cone.generators:
            if any(_dot(row, g.coords) < 0 for row in canonical_ineqs):
                raise InputError("double description produced an inconsistent pair")
    return result


def dual_cone(cone: PolyCone) -> PolyCone:
    """The dual cone {l : <l, x> >= 0 for all x in cone}, canonicalized.

    Generators of the primal become inequalities of the dual and vice
    versa; the result lives in the registered dual basis.
    """
    dual = dual_basis(cone.basis)
    swapped = PolyCone(
        dual,
        cone.dim,
        generators=cone.inequalities,
        inequalities=cone.generators,
        # for a canonical pair the swap is again canonical: the facets of a
        # cone are the extremal data of its dual and vice versa
        canonical=cone.canonical,
    )
    return dd_convert(swapped)


@dataclass(frozen=True)
class ContainsResult:
    """Membership verdict plus an exactly re-checkable certificate."""

    cone: PolyCone
    vector: ClassVector
    member: bool
    combination: tuple[Fraction, ...] | None = None
    separating: ClassVector | None = None

    def __bool__(self) -> bool:
        return self.member

    def verify(self) -> bool:
        """Re-verify the certificate by direct arithmetic, trusting nothing."""
        if self.member:
            if self.combination is None:
                return False
            gens = self.cone.generators or ()
            if len(self.combination) != len(gens):
                return False
            if any(c < 0 for c in self.combination):
                return False
            total = [Fraction(0)] * self.vector.dim
            for coeff, g in zip(self.combination, gens):
                for i, x in enumerate(g.coords):
                    total[i] += coeff * x
            return tuple(total) == self.vector.coords
        if self.separating is None:
            return False
        sep = self.separating.coords
        if any(_dot(sep, g.coords) < 0 for g in self.cone.generators or ()):
            return False
        return _dot(sep, self.vector.coords) < 0


def contains(cone: PolyCone, vector: ClassVector) -> ContainsResult:
    """Exact membership test with certificate.

    Membership is decided on the inequality representation; the positive
    certificate (a nonnegative generator combination) is then produced by
    exact phase-one simplex on the generator representation.
    """
    if vector.basis != cone.basis or vector.dim != cone.dim:
        raise InputError("vector not in the cone's coordinate space")
    full = cone if cone.canonical else dd_convert(cone)
    for l in full.inequalities:
        if _dot(l.coords, vector.coords) < 0:
            return ContainsResult(full, vector, False, separating=l)
    gens = full.generators
    if vector.is_zero():
        return ContainsResult(full, vector, True, combination=(Fraction(0),) * len(gens))
    columns = [g.coords for g in gens]
    coeffs = nonneg_solve(columns, vector.coords)
    if coeffs is None:
        raise DomainError(
            "representations disagree: inequalities accept a vector the "
            "generators cannot produce",
            vector=[str(c) for c in vector.coords],
        )
    return ContainsResult(full, vector, True, combination=coeffs)


def lineality_space(cone: PolyCone) -> list[Row]:
    """Basis of cone ∩ (−cone) as a linear space."""
    full = cone if cone.canonical else dd_convert(cone)
    rows = full.inequality_rows()
    return nullspace(rows, ncols=cone.dim)


def is_salient(cone: PolyCone) -> bool:
    """True iff the cone contains no nonzero linear subspace."""
    return not lineality_space(cone)


def extremal_rays(cone: PolyCone) -> tuple[ClassVector, ...]:
    """The minimal primitive generating set of a salient cone, sorted."""
    full = cone if cone.canonical else dd_convert(cone)
    if not is_salient(full):
        raise DomainError(
            "extremal rays are only defined for salient cones",
            lineality=[[str(x) for x in row] for row in lineality_space(full)],
        )
    return full.generators


def cones_equal(a: PolyCone, b: PolyCone) -> bool:
    """Exact cone equality (basis-aware, representation-free)."""
    if a.basis != b.basis or a.dim != b.dim:
        return False
    ca, cb = dd_convert(a), dd_convert(b)
    gens_a = {g.coords for g in ca.generators}
    gens_b = {g.coords for g in cb.generators}
    if gens_a == gens_b:
        return True
    # mutual containment fallback for non-salient canonical forms, whose
    # quotient-ray representatives may legitimately differ
    ok_ab = all(
        all(_dot(l.coords, g) >= 0 for l in cb.inequalities) for g in gens_a
    )
    ok_ba = all(
        all(_dot(l.coords, g) >= 0 for l in ca.inequalities) for g in gens_b
    )
    return ok_ab and ok_ba
