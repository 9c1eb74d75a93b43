"""Exact JSON encoding/decoding for cones, geometries, and pairing data.

Rationals travel as strings ("3" or "-2/7"); integer JSON numbers are
tolerated on input, floats never are.
"""

from __future__ import annotations

from .cones import PolyCone
from .errors import InputError
from .negdef import PairingBasis
from .rationals import rat, rat_str
from .vectors import ClassVector, dual_basis
from .zariski import ConeGeometry, cone_geometry


def parse_vector_text(text: str, basis: str) -> ClassVector:
    """Parse a comma-separated coordinate string like ``"1,1,0,1,2"``."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise InputError("empty coordinate list")
    return ClassVector(basis, tuple(rat(p) for p in parts))


def rows_to_json(vectors) -> list[list[str]]:
    return [[rat_str(c) for c in v.coords] for v in vectors]


def cone_to_json(cone: PolyCone) -> dict:
    doc = {"basis": cone.basis, "dim": cone.dim}
    if cone.generators is not None:
        doc["generators"] = rows_to_json(cone.generators)
    if cone.inequalities is not None:
        doc["inequalities"] = rows_to_json(cone.inequalities)
    return doc


def cone_from_json(doc: dict, basis: str | None = None, dim: int | None = None) -> PolyCone:
    if not isinstance(doc, dict):
        raise InputError("cone document must be a JSON object")
    basis = doc.get("basis", basis)
    dim = doc.get("dim", dim)
    if basis is None:
        raise InputError('cone document needs a "basis"')
    generators = doc.get("generators")
    inequalities = doc.get("inequalities")
    if generators is None and inequalities is None:
        raise InputError(
            'cone document needs "generators" or "inequalities" (an empty '
            "list is meaningful)"
        )
    if dim is None:
        rows = generators if generators is not None else inequalities
        if not rows:
            raise InputError('cone document needs "dim" when both lists are empty')
        dim = len(rows[0])
    gen_vectors = (
        tuple(ClassVector(basis, tuple(rat(x) for x in row)) for row in generators)
        if generators is not None
        else None
    )
    dual = dual_basis(basis)
    ineq_vectors = (
        tuple(ClassVector(dual, tuple(rat(x) for x in row)) for row in inequalities)
        if inequalities is not None
        else None
    )
    return PolyCone(basis, dim, generators=gen_vectors, inequalities=ineq_vectors)


def geometry_from_json(doc: dict) -> ConeGeometry:
    """Parse {"basis", "dim", "mov": cone, "eff": cone, "objective": [...]}."""
    if not isinstance(doc, dict):
        raise InputError("geometry document must be a JSON object")
    basis = doc.get("basis")
    dim = doc.get("dim")
    for key in ("mov", "eff"):
        if key not in doc:
            raise InputError(f'geometry document needs "{key}"')
    mov = cone_from_json(doc["mov"], basis=basis, dim=dim)
    eff = cone_from_json(doc["eff"], basis=basis, dim=dim)
    objective = None
    if doc.get("objective") is not None:
        objective = ClassVector(
            dual_basis(eff.basis), tuple(rat(x) for x in doc["objective"])
        )
    return cone_geometry(doc.get("name", "geometry"), mov, eff, objective)


def geometry_to_json(g: ConeGeometry) -> dict:
    doc = {
        "name": g.name,
        "basis": g.basis,
        "dim": g.dim,
        "mov": cone_to_json(g.mov),
        "eff": cone_to_json(g.eff),
    }
    if g.degree_functional is not None:
        doc["objective"] = [rat_str(c) for c in g.degree_functional.coords]
    return doc


def gram_from_json(doc: dict) -> PairingBasis:
    if not isinstance(doc, dict) or "labels" not in doc or "gram" not in doc:
        raise InputError('pairing document needs "labels" and "gram"')
    return PairingBasis(
        tuple(doc["labels"]),
        tuple(tuple(rat(x) for x in row) for row in doc["gram"]),
    )
