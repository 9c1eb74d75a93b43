"""Decomposition engine over explicit movable/pseudo-effective cone data.

Given the two cones and a pseudo-effective class, the candidate positive
parts form a bounded polytope: movable classes dominated by the input.
A positive part is selected by exact maximization of a degree functional
(strictly positive on the effective cone), and the engine certifies
whether the candidate set has a domination-order maximum; when it does,
the selected part equals it for every valid objective, and the output
says so.  When it does not, the order-theoretic failure is witnessed by
a vertex pair with no common dominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Mapping

from .cones import PolyCone, contains, dd_convert, is_salient
from .decomposition import Certificate, Decomposition
from .errors import DomainError, InputError
from .polytope import (
    AffineInequality,
    RationalPolytope,
    maximize_linear,
    vertex_enumeration,
)
from .rationals import rat_str
from .simplex import INFEASIBLE, maximize_affine
from .vectors import ClassVector, dual_basis


@dataclass(frozen=True)
class ConeGeometry:
    """Validated cone data: movable inside pseudo-effective, both converted."""

    name: str
    mov: PolyCone
    eff: PolyCone
    degree_functional: ClassVector | None = None

    @property
    def basis(self) -> str:
        return self.eff.basis

    @property
    def dim(self) -> int:
        return self.eff.dim


def cone_geometry(
    name: str,
    mov: PolyCone,
    eff: PolyCone,
    degree_functional: ClassVector | None = None,
) -> ConeGeometry:
    """Build a ConeGeometry, enforcing every structural precondition."""
    if mov.basis != eff.basis or mov.dim != eff.dim:
        raise InputError("movable and effective cones live in different spaces")
    eff = dd_convert(eff)
    mov = dd_convert(mov)
    if not is_salient(eff):
        raise DomainError("effective cone must be salient")
    for g in mov.generators:
        if not contains(eff, g):
            raise InputError(
                "movable cone is not contained in the effective cone; "
                f"offending generator {[rat_str(c) for c in g.coords]}"
            )
    geometry = ConeGeometry(name, mov, eff, degree_functional)
    if degree_functional is not None:
        validate_objective(geometry, degree_functional)
    return geometry


def validate_objective(g: ConeGeometry, objective: ClassVector) -> None:
    """A degree functional must be strictly positive on every eff ray."""
    if objective.basis != dual_basis(g.basis) or objective.dim != g.dim:
        raise InputError("objective must be a functional in the dual basis")
    for ray in g.eff.generators:
        value = sum(
            (a * b for a, b in zip(objective.coords, ray.coords)), Fraction(0)
        )
        if value <= 0:
            raise InputError(
                "objective is not strictly positive on the effective cone; "
                f"ray {[rat_str(c) for c in ray.coords]} gives {rat_str(value)}"
            )


def _in_cone(cone: PolyCone, vector: ClassVector) -> bool:
    """Cheap membership via the inequality representation only."""
    return all(
        sum((a * b for a, b in zip(l.coords, vector.coords)), Fraction(0)) >= 0
        for l in cone.inequalities
    )


def decomposition_polytope(g: ConeGeometry, alpha: ClassVector) -> RationalPolytope:
    """The polytope of movable classes dominated by ``alpha``, with vertices.

    Inequalities: the movable cone's on the candidate, and the effective
    cone's on the leftover.  Salience of the effective cone bounds it; it
    always contains the origin.
    """
    if alpha.basis != g.basis or alpha.dim != g.dim:
        raise InputError("class not in the geometry's coordinate space")
    verdict = contains(g.eff, alpha)
    if not verdict:
        raise DomainError(
            "class is not pseudo-effective",
            separating_functional=[rat_str(c) for c in verdict.separating.coords],
        )
    dual = dual_basis(g.basis)
    rows: list[AffineInequality] = []
    for l in g.mov.inequalities:
        rows.append(AffineInequality(l, Fraction(0)))
    for m in g.eff.inequalities:
        bound = sum((a * b for a, b in zip(m.coords, alpha.coords)), Fraction(0))
        flipped = ClassVector(dual, tuple(-c for c in m.coords))
        rows.append(AffineInequality(flipped, -bound))
    polytope = RationalPolytope(g.basis, g.dim, tuple(rows))
    return vertex_enumeration(polytope)


@dataclass(frozen=True)
class DominationFailure:
    """One vertex's certified failure to dominate a target."""

    vertex: ClassVector
    target: ClassVector
    separating: ClassVector

    def verify(self, eff: PolyCone) -> bool:
        gap = self.vertex - self.target
        sep = self.separating.coords
        if any(
            sum((a * b for a, b in zip(sep, g.coords)), Fraction(0)) < 0
            for g in eff.generators
        ):
            return False
        return (
            sum((a * b for a, b in zip(sep, gap.coords)), Fraction(0)) < 0
        )


@dataclass(frozen=True)
class DirectednessReport:
    """Outcome of the maximum-element check on a decomposition polytope."""

    status: str  # "maximum" | "no-maximum"
    polytope: RationalPolytope
    eff: PolyCone
    maximum: ClassVector | None = None
    domination: tuple[tuple[Fraction, ...], ...] = ()
    witness_pair: tuple[ClassVector, ClassVector] | None = None
    failures: tuple[DominationFailure, ...] = ()
    pair_dominator_set_empty: bool | None = None

    def verify(self) -> bool:
        """Re-verify every recorded certificate by direct arithmetic."""
        vertices = self.polytope.vertices or ()
        if self.status == "maximum":
            if self.maximum is None or len(self.domination) != len(vertices):
                return False
            for combo, v in zip(self.domination, vertices):
                gap = self.maximum - v
                if any(c < 0 for c in combo):
                    return False
                total = [Fraction(0)] * gap.dim
                for coeff, gen in zip(combo, self.eff.generators):
                    for i, x in enumerate(gen.coords):
                        total[i] += coeff * x
                if tuple(total) != gap.coords:
                    return False
            return True
        if self.witness_pair is None:
            return False
        failed = {f.vertex.coords for f in self.failures}
        if failed != {v.coords for v in vertices}:
            return False
        return all(f.verify(self.eff) for f in self.failures)

    def to_json(self) -> dict:
        payload: dict[str, Any] = {"status": self.status}
        if self.maximum is not None:
            payload["maximum"] = [rat_str(c) for c in self.maximum.coords]
        if self.witness_pair is not None:
            u, w = self.witness_pair
            payload["witness_pair"] = [
                [rat_str(c) for c in u.coords],
                [rat_str(c) for c in w.coords],
            ]
            payload["pair_dominator_set_empty"] = self.pair_dominator_set_empty
            payload["failures"] = [
                {
                    "vertex": [rat_str(c) for c in f.vertex.coords],
                    "fails_to_dominate": [rat_str(c) for c in f.target.coords],
                    "separating_functional": [
                        rat_str(c) for c in f.separating.coords
                    ],
                }
                for f in self.failures
            ]
        payload["vertices"] = [
            [rat_str(c) for c in v.coords] for v in (self.polytope.vertices or ())
        ]
        return payload


def preceq_maximum(g: ConeGeometry, s: RationalPolytope) -> DirectednessReport:
    """Decide whether the candidate polytope has a domination maximum.

    A maximum, if any, must be a vertex (salience), and dominating every
    vertex suffices for the whole polytope (convexity), so the decision is
    exact over the vertex list.  In the negative case some vertex pair has
    no vertex dominating both: a finite directed order would have a
    maximum.  The reported pair additionally gets an exact emptiness check
    of its full dominator set inside the polytope.
    """
    s = vertex_enumeration(s)
    vertices = s.vertices
    if not vertices:
        raise DomainError("empty candidate polytope")

    for beta in vertices:
        if all(_in_cone(g.eff, beta - v) for v in vertices):
            domination = tuple(
                contains(g.eff, beta - v).combination for v in vertices
            )
            return DirectednessReport(
                status="maximum",
                polytope=s,
                eff=g.eff,
                maximum=beta,
                domination=domination,
            )

    for i, j in combinations(range(len(vertices)), 2):
        u, w = vertices[i], vertices[j]
        if any(
            _in_cone(g.eff, v - u) and _in_cone(g.eff, v - w) for v in vertices
        ):
            continue
        failures = []
        for v in vertices:
            target = u if not _in_cone(g.eff, v - u) else w
            verdict = contains(g.eff, v - target)
            failures.append(DominationFailure(v, target, verdict.separating))
        return DirectednessReport(
            status="no-maximum",
            polytope=s,
            eff=g.eff,
            witness_pair=(u, w),
            failures=tuple(failures),
            pair_dominator_set_empty=dominator_set_empty(g, s, u, w),
        )
    raise DomainError(
        "inconsistent state: pairwise dominated vertices but no maximum"
    )


def dominator_set_empty(
    g: ConeGeometry, s: RationalPolytope, u: ClassVector, w: ClassVector
) -> bool:
    """Exact emptiness of {z in s : z dominates u and z dominates w}.

    Decided by phase-one simplex on the combined inequality system; this
    is the strong form of the witness: no point of the polytope, vertex
    or not, dominates both.
    """
    functionals = [ineq.functional.coords for ineq in s.inequalities]
    offsets = [ineq.offset for ineq in s.inequalities]
    for target in (u, w):
        for m in g.eff.inequalities:
            functionals.append(m.coords)
            offsets.append(
                sum((a * b for a, b in zip(m.coords, target.coords)), Fraction(0))
            )
    status, _, _ = maximize_affine(
        functionals, offsets, (Fraction(0),) * s.dim
    )
    return status == INFEASIBLE


def decompose(
    g: ConeGeometry,
    alpha: ClassVector,
    objective: ClassVector | None = None,
) -> Decomposition:
    """Positive part by exact degree maximization over the candidate set.

    The full optimal face is reported; the canonical representative is its
    lexicographically smallest vertex (a labelled convention, not a
    mathematical claim).  Metadata distinguishes a certified
    domination-order maximum from a merely objective-maximal candidate.
    """
    if objective is None:
        objective = g.degree_functional
    if objective is None:
        raise InputError("no objective supplied and the geometry has no default")
    validate_objective(g, objective)

    s = decomposition_polytope(g, alpha)
    value, face = maximize_linear(s, objective)
    positive = face[0]  # vertices arrive sorted: lexicographically smallest
    negative = alpha - positive

    report = preceq_maximum(g, s)
    is_max = report.status == "maximum" and report.maximum.coords == positive.coords

    certificates = (
        Certificate(
            "positive-part-movable",
            {"combination": list(contains(g.mov, positive).combination)},
        ),
        Certificate(
            "negative-part-pseudo-effective",
            {"combination": list(contains(g.eff, negative).combination)},
        ),
    )
    metadata: Mapping[str, Any] = {
        "method": "degree-maximization",
        "geometry": g.name,
        "objective": [rat_str(c) for c in objective.coords],
        "objective_value": rat_str(value),
        "optimal_face": [[rat_str(c) for c in v.coords] for v in face],
        "optimum_unique": len(face) == 1,
        "positive_part_status": (
            "certified-preceq-maximum" if is_max else "objective-maximal-candidate"
        ),
        "preceq_maximum": report.status,
        "canonical_choice": "lexicographically-smallest-optimal-vertex",
    }
    return Decomposition(
        input=alpha,
        positive=positive,
        negative=negative,
        certificates=certificates,
        metadata=metadata,
    )


def negative_boundary_check(g: ConeGeometry, dec: Decomposition) -> bool:
    """Report whether the negative part lies on the effective boundary.

    True when some facet functional of the effective cone vanishes on it
    (the zero class counts as boundary).  This is a report, not an
    assertion: it is produced for decompositions selected by degree
    maximization, whose negative parts are not covered by any contract.
    """
    n = dec.negative
    if n.is_zero():
        return True
    if not _in_cone(g.eff, n):
        return False
    return any(
        sum((a * b for a, b in zip(l.coords, n.coords)), Fraction(0)) == 0
        for l in g.eff.inequalities
    )


def verify_decomposition(g: ConeGeometry, dec: Decomposition) -> bool:
    """Re-verify a decomposition against its geometry from scratch."""
    if (dec.positive + dec.negative).coords != dec.input.coords:
        return False
    mov_cert = dec.certificate("positive-part-movable")
    eff_cert = dec.certificate("negative-part-pseudo-effective")
    if mov_cert is None or eff_cert is None:
        return False
    for combo, cone, vector in (
        (mov_cert.data["combination"], g.mov, dec.positive),
        (eff_cert.data["combination"], g.eff, dec.negative),
    ):
        if any(c < 0 for c in combo):
            return False
        total = [Fraction(0)] * vector.dim
        for coeff, gen in zip(combo, cone.generators):
            for i, x in enumerate(gen.coords):
                total[i] += coeff * x
        if tuple(total) != vector.coords:
            return False
    return True
