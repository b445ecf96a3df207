"""JSON formats: set systems, complexes, certificates, reports.

Set systems serialize canonically (ground sorted, member order preserved,
element lists sorted) and round-trip bit-exactly after one canonical pass.
Complex loading canonicalizes facets (sorted, deduplicated, dominated
facets dropped) and reports what it changed.  Certificates are
label-based, so they stay valid across index renumbering, and every kind
is replayable by the verify entry point.
"""

from __future__ import annotations

import json
from typing import Any

from .core import (
    Comatching,
    ComatchingWithIntersection,
    InputError,
    SetSystem,
)
from .search import ColorfulInstance, DichotomyOutcome
from .simplicial import ComplexComatching, SimplicialComplex, maximal_sets
from .topology import CollapseSequence, HomologyProfile, LerayVerdict

__all__ = [
    "set_system_to_doc",
    "set_system_from_doc",
    "complex_to_doc",
    "complex_from_doc",
    "detect_kind",
    "certificate_to_doc",
    "certificate_from_doc",
    "instance_from_doc",
    "profile_to_doc",
    "dump_canonical",
]


def dump_canonical(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Set systems
# ---------------------------------------------------------------------------


def set_system_to_doc(system: SetSystem) -> dict:
    order = sorted(range(len(system.ground)), key=lambda i: system.ground[i])
    return {
        "ground": [system.ground[i] for i in order],
        "members": [
            {
                "name": name,
                "elements": sorted(system.ground[i] for i in elems),
            }
            for name, elems in system.members
        ],
    }


def set_system_from_doc(doc: dict) -> SetSystem:
    if not isinstance(doc, dict) or "ground" not in doc or "members" not in doc:
        raise InputError("set system document needs 'ground' and 'members'")
    ground = doc["ground"]
    if not isinstance(ground, list) or not all(isinstance(g, str) for g in ground):
        raise InputError("'ground' must be a list of strings")
    members = []
    for k, m in enumerate(doc["members"]):
        if not isinstance(m, dict) or "name" not in m or "elements" not in m:
            raise InputError(f"member {k} needs 'name' and 'elements'")
        members.append((m["name"], m["elements"]))
    return SetSystem.from_labels(ground, members)


# ---------------------------------------------------------------------------
# Complexes
# ---------------------------------------------------------------------------


def complex_to_doc(complex_: SimplicialComplex) -> dict:
    return {
        "vertices": list(complex_.vertices),
        "facets": sorted(
            [sorted(complex_.vertex_labels(f)) for f in complex_.facets]
        ),
    }


def complex_from_doc(doc: dict) -> tuple[SimplicialComplex, list[str]]:
    """Load a complex, canonicalizing facets; returns (complex, notes)."""
    if not isinstance(doc, dict) or "vertices" not in doc or "facets" not in doc:
        raise InputError("complex document needs 'vertices' and 'facets'")
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError("'vertices' must be a list of strings")
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise InputError("vertex labels must be distinct")
    notes = []
    raw = []
    for k, f in enumerate(doc["facets"]):
        if not isinstance(f, list) or not f:
            raise InputError(f"facet {k} must be a nonempty list of vertex labels")
        try:
            raw.append(frozenset(index[v] for v in f))
        except KeyError as exc:
            raise InputError(
                f"facet {k} references unknown vertex {exc.args[0]!r}"
            ) from None
        if len(set(f)) != len(f):
            notes.append(f"facet {k} had repeated vertices; deduplicated")
    facets = maximal_sets(raw)
    if len(facets) != len(set(raw)):
        notes.append(
            f"dropped {len(set(raw)) - len(facets)} dominated facet(s)"
        )
    if len(set(raw)) != len(raw):
        notes.append(f"dropped {len(raw) - len(set(raw))} duplicate facet(s)")
    complex_ = SimplicialComplex(tuple(vertices), facets)
    isolated = complex_.isolated_vertices()
    if isolated:
        labels = [vertices[v] for v in isolated]
        notes.append(f"isolated vertices present: {labels}")
    return complex_, notes


def detect_kind(doc: dict) -> str:
    if "ground" in doc and "members" in doc:
        return "set_system"
    if "vertices" in doc and "facets" in doc:
        return "complex"
    if "kind" in doc:
        return "certificate"
    raise InputError("cannot tell what this document describes")


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


def certificate_to_doc(cert, system=None, complex_=None) -> dict:
    """Label-based JSON for any certificate kind."""
    if isinstance(cert, ComatchingWithIntersection):
        base = certificate_to_doc(cert.base, system=system)
        return {
            "kind": "comatching_with_intersection",
            "pairs": base["pairs"],
            "common_point": system.ground[cert.common_point],
        }
    if isinstance(cert, Comatching):
        return {
            "kind": "comatching",
            "pairs": [
                {
                    "point": system.ground[p],
                    "member": system.member_name(m),
                }
                for p, m in cert.pairs
            ],
        }
    if isinstance(cert, ComplexComatching):
        return {
            "kind": "complex_comatching",
            "pairs": [
                {
                    "vertex": complex_.vertices[v],
                    "facet": sorted(complex_.vertex_labels(complex_.facets[f])),
                }
                for v, f in cert.pairs
            ],
        }
    if isinstance(cert, CollapseSequence):
        return {
            "kind": "collapse_sequence",
            "d": cert.d,
            "strict_size": cert.strict_size,
            "steps": [
                {
                    "free_face": sorted(complex_.vertex_labels(face)),
                    "coface": sorted(complex_.vertex_labels(coface)),
                }
                for face, coface in cert.steps
            ],
        }
    if isinstance(cert, LerayVerdict):
        if cert.witness is None:
            raise InputError("only failing Leray verdicts carry a witness to emit")
        vertices, dim = cert.witness
        return {
            "kind": "leray_witness",
            "d": cert.d,
            "vertices": sorted(complex_.vertices[v] for v in vertices),
            "homology_dim": dim,
        }
    if isinstance(cert, DichotomyOutcome):
        if cert.is_transversal:
            return {
                "kind": "empty_transversal",
                "members": [system.member_name(j) for j in cert.transversal],
            }
        return certificate_to_doc(cert.witness, system=system)
    raise InputError(f"cannot serialize certificate of type {type(cert).__name__}")


def _member_index(system: SetSystem, name: str) -> int:
    for j in range(system.num_members):
        if system.member_name(j) == name:
            return j
    raise InputError(f"unknown member name {name!r}")


def _point_index(system: SetSystem, label: str) -> int:
    try:
        return system.ground.index(label)
    except ValueError:
        raise InputError(f"unknown ground element {label!r}") from None


def certificate_from_doc(doc: dict, system=None, complex_=None):
    """Parse a certificate document against its target object."""
    if "kind" not in doc:
        raise InputError("certificate document needs a 'kind'")
    kind = doc["kind"]
    if kind == "comatching":
        _need(system, kind)
        return Comatching(
            tuple(
                (_point_index(system, p["point"]), _member_index(system, p["member"]))
                for p in doc["pairs"]
            )
        )
    if kind == "comatching_with_intersection":
        _need(system, kind)
        base = Comatching(
            tuple(
                (_point_index(system, p["point"]), _member_index(system, p["member"]))
                for p in doc["pairs"]
            )
        )
        return ComatchingWithIntersection(base, _point_index(system, doc["common_point"]))
    if kind == "empty_transversal":
        _need(system, kind)
        return DichotomyOutcome(
            transversal=tuple(_member_index(system, m) for m in doc["members"])
        )
    if kind == "complex_comatching":
        _need(complex_, kind)
        vindex = {v: i for i, v in enumerate(complex_.vertices)}
        pairs = []
        for p in doc["pairs"]:
            if p["vertex"] not in vindex:
                raise InputError(f"unknown vertex {p['vertex']!r}")
            facet = frozenset(_vertex_index(vindex, v) for v in p["facet"])
            try:
                fi = complex_.facets.index(facet)
            except ValueError:
                raise InputError(
                    f"certificate facet {sorted(p['facet'])} is not a facet"
                ) from None
            pairs.append((vindex[p["vertex"]], fi))
        return ComplexComatching(tuple(pairs))
    if kind == "collapse_sequence":
        _need(complex_, kind)
        vindex = {v: i for i, v in enumerate(complex_.vertices)}
        steps = tuple(
            (
                frozenset(_vertex_index(vindex, v) for v in s["free_face"]),
                frozenset(_vertex_index(vindex, v) for v in s["coface"]),
            )
            for s in doc["steps"]
        )
        return CollapseSequence(int(doc["d"]), bool(doc.get("strict_size", False)), steps)
    if kind == "leray_witness":
        _need(complex_, kind)
        vindex = {v: i for i, v in enumerate(complex_.vertices)}
        vertices = frozenset(_vertex_index(vindex, v) for v in doc["vertices"])
        return LerayVerdict(int(doc["d"]), "fails", (vertices, int(doc["homology_dim"])))
    raise InputError(f"unknown certificate kind {kind!r}")


def _vertex_index(vindex: dict, label: str) -> int:
    if label not in vindex:
        raise InputError(f"unknown vertex {label!r}")
    return vindex[label]


def _need(obj, kind: str) -> None:
    if obj is None:
        raise InputError(f"certificate kind {kind!r} does not match the object file")


def instance_from_doc(doc: dict, system: SetSystem) -> ColorfulInstance:
    if "families" not in doc:
        raise InputError("instance document needs 'families'")
    return ColorfulInstance.build(
        [_member_index(system, name) for name in fam] for fam in doc["families"]
    )


def instance_to_doc(instance: ColorfulInstance, system: SetSystem) -> dict:
    return {
        "families": [
            sorted(system.member_name(j) for j in fam) for fam in instance.families
        ]
    }


def profile_to_doc(profile: HomologyProfile) -> dict:
    doc = {
        "reduced_betti": list(profile.reduced_betti),
        "arithmetic_mode": profile.arithmetic_mode,
        "exact": profile.exact,
    }
    if profile.notes:
        doc["notes"] = list(profile.notes)
    return doc
