"""Embedded, audited example geometries and their claim catalogs.

Each fixture is a JSON data file compiled into the package (overridable
via the CYCLECONES_FIXTURE_DIR environment variable for experimentation).
A lint pass refuses data files whose numeric literals are not covered by a
``source`` annotation, and every fixture ships a catalog of claims whose
checks re-derive the recorded facts from the raw data.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from ..cones import PolyCone
from ..errors import InputError
from ..projbundle import HNProfile
from ..rings import (
    AuditReport,
    DualClass,
    DualLayer,
    RingElement,
    RingPresentation,
    consistency_audit,
    parse_monomial,
)
from ..vectors import ClassVector, dual_basis, register_basis
from ..zariski import ConeGeometry, cone_geometry

FIXTURE_NAMES = ("toric-3fold", "p2-hilb2", "m07-s7", "projbundle-sample")

_NUMERIC_CHARS = set("0123456789")


@dataclass(frozen=True)
class Claim:
    id: str
    check: str
    expect: str
    args: dict
    source: str


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    check: str
    status: str  # "pass" | "fail" | "flagged"
    expected: str
    witness: dict

    @property
    def ok(self) -> bool:
        return self.status == self.expected

    def to_json(self) -> dict:
        return {
            "claim": self.claim_id,
            "check": self.check,
            "status": self.status,
            "expected": self.expected,
            "ok": self.ok,
            "witness": self.witness,
        }


@dataclass
class Fixture:
    name: str
    description: str
    raw: dict
    vectors: dict[str, dict[str, ClassVector]] = field(default_factory=dict)
    cones: dict[str, PolyCone] = field(default_factory=dict)
    geometries: dict[str, ConeGeometry] = field(default_factory=dict)
    ring: RingPresentation | None = None
    ring_elements: dict[str, RingElement] = field(default_factory=dict)
    dual_classes: dict[str, DualClass] = field(default_factory=dict)
    profiles: dict[str, HNProfile] = field(default_factory=dict)
    claims: tuple[Claim, ...] = ()
    audit: AuditReport | None = None

    def vector(self, name: str) -> ClassVector:
        hits = [table[name] for table in self.vectors.values() if name in table]
        if not hits:
            raise InputError(f"fixture {self.name}: unknown class {name!r}")
        if len(hits) > 1:
            raise InputError(f"fixture {self.name}: ambiguous class {name!r}")
        return hits[0]

    def vector_in(self, basis: str, name: str) -> ClassVector:
        try:
            return self.vectors[basis][name]
        except KeyError as exc:
            raise InputError(
                f"fixture {self.name}: no class {name!r} in basis {basis!r}"
            ) from exc

    def cone(self, cone_id: str) -> PolyCone:
        if cone_id not in self.cones:
            raise InputError(f"fixture {self.name}: unknown cone {cone_id!r}")
        return self.cones[cone_id]

    def geometry(self, geometry_id: str) -> ConeGeometry:
        if geometry_id not in self.geometries:
            raise InputError(
                f"fixture {self.name}: unknown geometry {geometry_id!r}"
            )
        return self.geometries[geometry_id]

    def element(self, name: str) -> RingElement:
        if name not in self.ring_elements:
            raise InputError(f"fixture {self.name}: unknown ring element {name!r}")
        return self.ring_elements[name]

    def dual(self, name: str) -> DualClass:
        if name not in self.dual_classes:
            raise InputError(f"fixture {self.name}: unknown dual class {name!r}")
        return self.dual_classes[name]

    def profile(self, name: str) -> HNProfile:
        if name not in self.profiles:
            raise InputError(f"fixture {self.name}: unknown profile {name!r}")
        return self.profiles[name]

    def claim(self, claim_id: str) -> Claim:
        for claim in self.claims:
            if claim.id == claim_id:
                return claim
        raise InputError(f"fixture {self.name}: unknown claim {claim_id!r}")


def _looks_numeric(leaf) -> bool:
    if isinstance(leaf, bool):
        return False
    if isinstance(leaf, (int, float)):
        return True
    if isinstance(leaf, str):
        text = leaf.lstrip("-")
        return bool(text) and set(text) <= _NUMERIC_CHARS | {"/"} and (
            text[0] in _NUMERIC_CHARS
        )
    return False


def lint_sources(node, covered: bool = False, path: str = "$") -> list[str]:
    """Uncited numeric literals in a fixture document.

    A dict node carrying any ``source``-suffixed key covers itself and its
    descendants; every numeric leaf must be covered by some ancestor.
    Floats are rejected outright: fixture data is exact.
    """
    problems: list[str] = []
    if isinstance(node, float):
        problems.append(f"{path}: floating-point literal {node!r}")
        return problems
    if isinstance(node, dict):
        here = covered or any(
            key == "source" or key.endswith("_source") for key in node
        )
        for key, value in node.items():
            problems.extend(lint_sources(value, here, f"{path}.{key}"))
        return problems
    if isinstance(node, list):
        for i, value in enumerate(node):
            problems.extend(lint_sources(value, covered, f"{path}[{i}]"))
        return problems
    if _looks_numeric(node) and not covered:
        problems.append(f"{path}: numeric literal {node!r} without a source")
    return problems


def _read_raw(name: str) -> dict:
    override = os.environ.get("CYCLECONES_FIXTURE_DIR")
    if override:
        candidate = os.path.join(override, f"{name}.json")
        if os.path.exists(candidate):
            with open(candidate, "r", encoding="utf-8") as handle:
                return json.load(handle)
    try:
        packaged = resources.files(__package__).joinpath(f"data/{name}.json")
        return json.loads(packaged.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise InputError(f"unknown fixture {name!r}") from exc


def _build_ring(fixture: Fixture, doc: dict) -> None:
    generators = tuple(doc["generators"])
    rewrites = {
        parse_monomial(lhs, generators): {
            parse_monomial(mono, generators): rhs_coeff
            for mono, rhs_coeff in rhs.items()
        }
        for lhs, rhs in doc.get("relations", {}).items()
    }
    top_values = doc.get("top_values")
    if top_values is not None:
        top_values = {
            parse_monomial(mono, generators): value
            for mono, value in top_values.items()
        }
    dual_layers = {}
    for degree_text, layer in doc.get("dual_bases", {}).items():
        degree = int(degree_text)
        cap = layer.get("cap_relations")
        if cap is not None:
            cap = {
                parse_monomial(mono, generators): tuple(coords)
                for mono, coords in cap.items()
            }
        dual_layers[degree] = DualLayer(degree, tuple(layer["names"]), cap)
    from ..rationals import rat

    ring = RingPresentation(
        name=fixture.name,
        generators=generators,
        top_degree=doc["top_degree"],
        rewrites={
            lhs: {m: rat(c) for m, c in rhs.items()} for lhs, rhs in rewrites.items()
        },
        top_values=(
            {m: rat(v) for m, v in top_values.items()}
            if top_values is not None
            else None
        ),
        max_monomial_degree=doc["max_monomial_degree"],
        dual_layers={
            deg: DualLayer(
                layer.degree,
                layer.names,
                (
                    {m: tuple(rat(x) for x in img) for m, img in layer.cap_images.items()}
                    if layer.cap_images is not None
                    else None
                ),
            )
            for deg, layer in dual_layers.items()
        },
    )
    fixture.ring = ring
    for name, body in doc.get("named", {}).get("elements", {}).items():
        fixture.ring_elements[name] = ring.element(body["degree"], body["terms"])
    for name, body in doc.get("dual_classes", {}).get("elements", {}).items():
        fixture.dual_classes[name] = ring.dual_class(body["degree"], body["coords"])
    fixture.audit = consistency_audit(ring)


def load(name: str) -> Fixture:
    """Load, lint, and validate a fixture by name."""
    raw = _read_raw(name)
    problems = lint_sources(raw)
    if problems:
        raise InputError(
            "fixture data failed the source lint:\n  " + "\n  ".join(problems)
        )
    fixture = Fixture(name=raw["name"], description=raw.get("description", ""), raw=raw)

    for basis in raw.get("bases", []):
        register_basis(basis["name"], basis["dim"], dual=basis.get("dual"))

    for basis_name, table in raw.get("classes", {}).items():
        group = {}
        for class_name, coords in table.get("coords", {}).items():
            group[class_name] = ClassVector(basis_name, tuple(coords))
        fixture.vectors[basis_name] = group

    if "ring" in raw:
        _build_ring(fixture, raw["ring"])

    extra = raw.get("surface_class_vectors")
    if extra is not None:
        basis_name = "m07.surfaces"
        group = fixture.vectors.setdefault(basis_name, {})
        for class_name, coords in extra.get("coords", {}).items():
            group[class_name] = ClassVector(basis_name, tuple(coords))

    for cone_doc in raw.get("cones", []):
        basis_name = cone_doc["basis"]
        generators = [
            fixture.vector_in(basis_name, g) for g in cone_doc["generators"]
        ]
        fixture.cones[cone_doc["id"]] = PolyCone.from_generators(
            basis_name, generators
        )

    for geom in raw.get("geometries", []):
        objective = ClassVector(
            dual_basis(geom["basis"]), tuple(geom["objective"]["coords"])
        )
        fixture.geometries[geom["id"]] = cone_geometry(
            f"{fixture.name}:{geom['id']}",
            fixture.cone(geom["mov"]),
            fixture.cone(geom["eff"]),
            objective,
        )

    for profile_name, text in raw.get("profiles", {}).get("entries", {}).items():
        fixture.profiles[profile_name] = HNProfile.parse(text)

    fixture.claims = tuple(
        Claim(
            id=c["id"],
            check=c["check"],
            expect=c["expect"],
            args=c.get("args", {}),
            source=c.get("source", ""),
        )
        for c in raw.get("claims", [])
    )
    return fixture


@dataclass(frozen=True)
class ClaimReport:
    fixture: str
    results: tuple[ClaimResult, ...]

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {
            "fixture": self.fixture,
            "all_ok": self.all_ok,
            "results": [r.to_json() for r in self.results],
        }


def verify_claims(fixture: Fixture) -> ClaimReport:
    """Run every claim check; failures are report entries, not exceptions."""
    from . import checks

    results = []
    for claim in fixture.claims:
        runner = checks.CHECKS.get(claim.check)
        if runner is None:
            results.append(
                ClaimResult(
                    claim.id,
                    claim.check,
                    "fail",
                    claim.expect,
                    {"error": f"unknown check {claim.check!r}"},
                )
            )
            continue
        try:
            status, witness = runner(fixture, claim.args)
        except Exception as exc:  # findings are data, not crashes
            status, witness = "fail", {"error": f"{type(exc).__name__}: {exc}"}
        results.append(
            ClaimResult(claim.id, claim.check, status, claim.expect, witness)
        )
    return ClaimReport(fixture.name, tuple(results))
