"""Proof certificates: justified equation steps and their conclusions.

A certificate is a list of steps, each claiming that two polynomials
are equal in the quotient algebra of a fixed graph, plus a list of
conclusions naming the generator quadruples whose products commute or
vanish.  Each step carries a justification small enough to be rechecked
from scratch; the verifier module does that without trusting the
producer.

Serialization is JSON with polynomials in their canonical text syntax.
The graph is bound by digest: lowercase hex SHA-256 of its canonical
text rendering.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass
from typing import Union

from .algebra import COL, ROW, Poly, PolyParseError, format_poly, parse_poly, u
from .graphs import Graph, format_graph_text
from .relations import (
    ColOrth,
    ColSum,
    Comm,
    Idem,
    Relation,
    RowOrth,
    RowSum,
    SelfAdj,
    VanishA,
    VanishB,
)

CERT_VERSION = 1

COMMUTES = "commutes"
ZERO_PRODUCT = "zero_product"


class MalformedCertificate(ValueError):
    """Raised when certificate data is structurally invalid."""


@dataclass(frozen=True, slots=True)
class LocalReduce:
    """Both sides share a normal form: local_reduce(lhs - rhs) = 0."""


@dataclass(frozen=True, slots=True)
class ExpandUnity:
    """rhs is lhs with a row or column unity sum inserted at a position."""

    position: int
    index: int
    side: str


@dataclass(frozen=True, slots=True)
class RelationApplication:
    """rhs is lhs with a relation applied at one pair position in every word."""

    relation: Relation
    position: int


@dataclass(frozen=True, slots=True)
class StarOfStep:
    """The claim is the star of an earlier step's claim."""

    step: int


@dataclass(frozen=True, slots=True)
class Substitution:
    """lhs - rhs is a rational combination of two earlier claim differences."""

    base: int
    using: int


@dataclass(frozen=True, slots=True)
class LemmaCom:
    """From an earlier step X = Y with Y star-invariant, conclude X = star(X)."""

    step: int


Justification = Union[
    LocalReduce, ExpandUnity, RelationApplication, StarOfStep, Substitution, LemmaCom
]


@dataclass(frozen=True, slots=True)
class ProofStep:
    """One checked equation: claim (lhs, rhs) with its justification."""

    id: int
    lhs: Poly
    rhs: Poly
    justification: Justification

    def __post_init__(self):
        if isinstance(self.id, bool) or not isinstance(self.id, int) or self.id < 0:
            raise ValueError(f"step id must be a nonnegative integer, got {self.id!r}")


@dataclass(frozen=True, slots=True)
class Conclusion:
    """Classification of one ordered generator pair (u[i,j], u[k,l])."""

    kind: str
    i: int
    j: int
    k: int
    l: int
    step: int

    def __post_init__(self):
        if self.kind not in (COMMUTES, ZERO_PRODUCT):
            raise ValueError(f"unknown conclusion kind {self.kind!r}")
        for v in (self.i, self.j, self.k, self.l):
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ValueError(f"conclusion index must be a positive integer, got {v!r}")
        if isinstance(self.step, bool) or not isinstance(self.step, int) or self.step < 0:
            raise ValueError(f"conclusion step must be a nonnegative integer, got {self.step!r}")

    def claim(self) -> tuple[Poly, Poly]:
        """The equation this conclusion asserts."""
        lhs = u(self.i, self.j) * u(self.k, self.l)
        if self.kind == COMMUTES:
            return lhs, u(self.k, self.l) * u(self.i, self.j)
        if self.kind == ZERO_PRODUCT:
            return lhs, Poly.zero()
        raise MalformedCertificate(f"unknown conclusion kind {self.kind!r}")


@dataclass(frozen=True)
class Certificate:
    version: int
    graph_digest: str
    steps: tuple[ProofStep, ...]
    conclusions: tuple[Conclusion, ...]


def graph_digest(g: Graph) -> str:
    """Lowercase hex SHA-256 of the canonical graph text."""
    return hashlib.sha256(format_graph_text(g).encode("ascii")).hexdigest()


def justification_refs(just: Justification) -> tuple[int, ...]:
    """Earlier step ids a justification depends on, certification included."""
    if isinstance(just, (StarOfStep, LemmaCom)):
        return (just.step,)
    if isinstance(just, Substitution):
        return (just.base, just.using)
    if isinstance(just, RelationApplication):
        rel = just.relation
        if isinstance(rel, Comm) and rel.certified_by is not None:
            return (rel.certified_by,)
    return ()


_REL_KINDS = {
    RowOrth: "row_orth",
    ColOrth: "col_orth",
    Idem: "idem",
    SelfAdj: "self_adj",
    RowSum: "row_sum",
    ColSum: "col_sum",
    VanishA: "vanish_a",
    VanishB: "vanish_b",
    Comm: "comm",
}

_REL_FIELDS = {
    "row_orth": (RowOrth, ("row", "col1", "col2")),
    "col_orth": (ColOrth, ("row1", "row2", "col")),
    "idem": (Idem, ("row", "col")),
    "self_adj": (SelfAdj, ("row", "col")),
    "row_sum": (RowSum, ("row",)),
    "col_sum": (ColSum, ("col",)),
    "vanish_a": (VanishA, ("row1", "col1", "row2", "col2")),
    "vanish_b": (VanishB, ("row1", "col1", "row2", "col2")),
    "comm": (Comm, ("row1", "col1", "row2", "col2")),
}


def _relation_to_dict(rel: Relation) -> dict:
    kind = _REL_KINDS.get(type(rel))
    if kind is None:
        raise MalformedCertificate(f"unknown relation {rel!r}")
    return {"kind": kind, **asdict(rel)}


def _require_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedCertificate(f"{what} must be an integer, got {value!r}")
    return value


def _require_keys(d: dict, expected: set, what: str):
    if not isinstance(d, dict):
        raise MalformedCertificate(f"{what} must be an object")
    if set(d) != expected:
        raise MalformedCertificate(
            f"{what} must have exactly the fields {sorted(expected)}, got {sorted(d)}"
        )


def _relation_from_dict(d) -> Relation:
    if not isinstance(d, dict) or "kind" not in d:
        raise MalformedCertificate("relation must be an object with a 'kind'")
    kind = d["kind"]
    if kind not in _REL_FIELDS:
        raise MalformedCertificate(f"unknown relation kind {kind!r}")
    cls, fields = _REL_FIELDS[kind]
    expected = {"kind", *fields}
    if kind == "comm":
        expected.add("certified_by")
    _require_keys(d, expected, f"relation {kind!r}")
    args = {f: _require_int(d[f], f"relation field {f!r}") for f in fields}
    if kind == "comm":
        cb = d["certified_by"]
        args["certified_by"] = None if cb is None else _require_int(cb, "certified_by")
    return cls(**args)


def _justification_to_dict(just: Justification) -> dict:
    if isinstance(just, LocalReduce):
        return {"rule": "local_reduce"}
    if isinstance(just, ExpandUnity):
        return {
            "rule": "expand_unity",
            "position": just.position,
            "index": just.index,
            "side": just.side,
        }
    if isinstance(just, RelationApplication):
        return {
            "rule": "relation",
            "relation": _relation_to_dict(just.relation),
            "position": just.position,
        }
    if isinstance(just, StarOfStep):
        return {"rule": "star_of", "step": just.step}
    if isinstance(just, Substitution):
        return {"rule": "substitution", "base": just.base, "using": just.using}
    if isinstance(just, LemmaCom):
        return {"rule": "lemma_com", "step": just.step}
    raise MalformedCertificate(f"unknown justification {just!r}")


def _justification_from_dict(d) -> Justification:
    if not isinstance(d, dict) or "rule" not in d:
        raise MalformedCertificate("justification must be an object with a 'rule'")
    rule = d["rule"]
    if rule == "local_reduce":
        _require_keys(d, {"rule"}, "local_reduce justification")
        return LocalReduce()
    if rule == "expand_unity":
        _require_keys(d, {"rule", "position", "index", "side"}, "expand_unity justification")
        side = d["side"]
        if side not in (ROW, COL):
            raise MalformedCertificate(f"side must be {ROW!r} or {COL!r}, got {side!r}")
        return ExpandUnity(
            position=_require_int(d["position"], "position"),
            index=_require_int(d["index"], "index"),
            side=side,
        )
    if rule == "relation":
        _require_keys(d, {"rule", "relation", "position"}, "relation justification")
        return RelationApplication(
            relation=_relation_from_dict(d["relation"]),
            position=_require_int(d["position"], "position"),
        )
    if rule == "star_of":
        _require_keys(d, {"rule", "step"}, "star_of justification")
        return StarOfStep(step=_require_int(d["step"], "step"))
    if rule == "substitution":
        _require_keys(d, {"rule", "base", "using"}, "substitution justification")
        return Substitution(
            base=_require_int(d["base"], "base"),
            using=_require_int(d["using"], "using"),
        )
    if rule == "lemma_com":
        _require_keys(d, {"rule", "step"}, "lemma_com justification")
        return LemmaCom(step=_require_int(d["step"], "step"))
    raise MalformedCertificate(f"unknown justification rule {rule!r}")


def _parse_poly_field(text, what: str) -> Poly:
    if not isinstance(text, str):
        raise MalformedCertificate(f"{what} must be a string")
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise MalformedCertificate(f"{what}: {exc}") from None


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "version": cert.version,
        "graph_digest": cert.graph_digest,
        "steps": [
            {
                "id": s.id,
                "lhs": format_poly(s.lhs),
                "rhs": format_poly(s.rhs),
                "justification": _justification_to_dict(s.justification),
            }
            for s in cert.steps
        ],
        "conclusions": [
            {"kind": c.kind, "i": c.i, "j": c.j, "k": c.k, "l": c.l, "step": c.step}
            for c in cert.conclusions
        ],
    }


def certificate_from_dict(d) -> Certificate:
    _require_keys(d, {"version", "graph_digest", "steps", "conclusions"}, "certificate")
    version = _require_int(d["version"], "version")
    if version != CERT_VERSION:
        raise MalformedCertificate(
            f"unsupported certificate version {version}, expected {CERT_VERSION}"
        )
    digest = d["graph_digest"]
    if not isinstance(digest, str):
        raise MalformedCertificate("graph_digest must be a string")
    if not isinstance(d["steps"], list) or not isinstance(d["conclusions"], list):
        raise MalformedCertificate("steps and conclusions must be arrays")
    steps = []
    for position, sd in enumerate(d["steps"]):
        _require_keys(sd, {"id", "lhs", "rhs", "justification"}, "step")
        sid = _require_int(sd["id"], "step id")
        if sid != position:
            raise MalformedCertificate(
                f"step ids must be sequential from 0: found {sid} at position {position}"
            )
        steps.append(
            ProofStep(
                id=sid,
                lhs=_parse_poly_field(sd["lhs"], f"step {sid} lhs"),
                rhs=_parse_poly_field(sd["rhs"], f"step {sid} rhs"),
                justification=_justification_from_dict(sd["justification"]),
            )
        )
    conclusions = []
    for cd in d["conclusions"]:
        _require_keys(cd, {"kind", "i", "j", "k", "l", "step"}, "conclusion")
        kind = cd["kind"]
        if kind not in (COMMUTES, ZERO_PRODUCT):
            raise MalformedCertificate(f"unknown conclusion kind {kind!r}")
        try:
            conclusions.append(
                Conclusion(
                    kind=kind,
                    i=_require_int(cd["i"], "i"),
                    j=_require_int(cd["j"], "j"),
                    k=_require_int(cd["k"], "k"),
                    l=_require_int(cd["l"], "l"),
                    step=_require_int(cd["step"], "step reference"),
                )
            )
        except MalformedCertificate:
            raise
        except ValueError as exc:
            raise MalformedCertificate(str(exc)) from None
    return Certificate(
        version=version,
        graph_digest=digest,
        steps=tuple(steps),
        conclusions=tuple(conclusions),
    )


def dumps_certificate(cert: Certificate) -> str:
    """Deterministic compact JSON text for a certificate."""
    return json.dumps(certificate_to_dict(cert), separators=(",", ":"))


def loads_certificate(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedCertificate(f"not valid JSON: {exc}") from None
    return certificate_from_dict(data)


def save_certificate(cert: Certificate, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_certificate(cert))
        fh.write("\n")


def load_certificate(path) -> Certificate:
    with open(path, "r", encoding="ascii") as fh:
        return loads_certificate(fh.read())
