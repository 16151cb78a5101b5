"""Independent rechecking of commutativity certificates.

The checker shares only the algebra primitives with the prover: each
step is reverified from its justification and earlier steps, never
from how the prover happened to emit it.  Structural defects (wrong
version, non-sequential ids, dangling or forward references) raise
MalformedCertificate; a certificate for a different graph raises
DigestMismatch; defects of content produce an invalid report naming
the first failing step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Poly, expand_unity, star, u
from .certificate import (
    CERT_VERSION,
    Certificate,
    ExpandUnity,
    LemmaCom,
    LocalReduce,
    MalformedCertificate,
    ProofStep,
    RelationApplication,
    StarOfStep,
    Substitution,
    graph_digest,
    justification_refs,
)
from .graphs import Graph
from .relations import Comm, apply_relation, local_reduce, validate_relation


class DigestMismatch(ValueError):
    """The certificate was produced for a different graph."""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a full certificate check."""

    valid: bool
    steps_checked: int
    conclusions_checked: int
    first_failure: Optional[int] = None
    reason: Optional[str] = None


def _leading_word(p: Poly):
    return min(p.terms, key=lambda w: (len(w), w))


def _eliminate(p: Poly, row: Poly) -> Poly:
    """Clear the leading word of row from p by an exact rational multiple."""
    lead = _leading_word(row)
    coeff = p.terms.get(lead)
    if not coeff:
        return p
    return p - (Fraction(coeff) / Fraction(row.terms[lead])) * row


def _in_span(target: Poly, d1: Poly, d2: Poly) -> bool:
    """Exact membership of target in the rational span of d1 and d2."""
    rows = []
    for d in (d1, d2):
        for row in rows:
            d = _eliminate(d, row)
        if not d.is_zero:
            rows.append(d)
    for row in rows:
        target = _eliminate(target, row)
    return target.is_zero


def _check_gen_bounds(p: Poly, n: int) -> None:
    for w in p.terms:
        for g in w:
            if g.row > n or g.col > n:
                raise ValueError(f"generator u[{g.row},{g.col}] out of range for n={n}")


def _check_step(g: Graph, steps: Sequence[ProofStep], step: ProofStep) -> Optional[str]:
    """Recheck one step; returns a failure reason or None."""
    just = step.justification
    if isinstance(just, LocalReduce):
        if not local_reduce(g, step.lhs - step.rhs).is_zero:
            return "sides do not reduce to the same normal form"
        return None
    if isinstance(just, ExpandUnity):
        _check_gen_bounds(step.lhs, g.n)
        expected = expand_unity(step.lhs, just.position, just.index, just.side, g.n)
        if step.rhs != expected:
            return "right side is not the stated unity expansion of the left"
        return None
    if isinstance(just, RelationApplication):
        rel = just.relation
        validate_relation(rel, g)
        if isinstance(rel, Comm):
            if rel.certified_by is None:
                return "commutation instance lacks a certifying step"
            ref = steps[rel.certified_by]
            lhs = u(rel.row1, rel.col1) * u(rel.row2, rel.col2)
            if ref.lhs != lhs or ref.rhs != u(rel.row2, rel.col2) * u(rel.row1, rel.col1):
                return (
                    f"step {rel.certified_by} does not certify commutation of"
                    f" u[{rel.row1},{rel.col1}] and u[{rel.row2},{rel.col2}]"
                )
        _check_gen_bounds(step.lhs, g.n)
        if step.rhs != apply_relation(step.lhs, rel, just.position):
            return "right side does not follow from applying the relation"
        return None
    if isinstance(just, StarOfStep):
        ref = steps[just.step]
        if step.lhs != star(ref.lhs) or step.rhs != star(ref.rhs):
            return f"claim is not the star of step {just.step}"
        return None
    if isinstance(just, Substitution):
        base = steps[just.base]
        using = steps[just.using]
        if not _in_span(step.lhs - step.rhs, base.lhs - base.rhs, using.lhs - using.rhs):
            return (
                f"claim difference is not a rational combination of"
                f" steps {just.base} and {just.using}"
            )
        return None
    if isinstance(just, LemmaCom):
        ref = steps[just.step]
        if star(ref.rhs) != ref.rhs:
            return f"right side of step {just.step} is not star-invariant"
        if step.lhs != ref.lhs or step.rhs != star(ref.lhs):
            return f"claim is not the star transport of step {just.step}"
        return None
    return f"unknown justification {type(just).__name__}"


def verify_certificate(g: Graph, cert: Certificate) -> VerificationReport:
    """Recheck every step and conclusion of cert against g."""
    if cert.version != CERT_VERSION:
        raise MalformedCertificate(f"unsupported certificate version {cert.version!r}")
    if cert.graph_digest != graph_digest(g):
        raise DigestMismatch("certificate digest does not match the graph")
    steps = cert.steps
    for pos, step in enumerate(steps):
        if step.id != pos:
            raise MalformedCertificate(
                f"step ids must be sequential: found {step.id} at position {pos}"
            )
        for ref in justification_refs(step.justification):
            if not 0 <= ref < step.id:
                raise MalformedCertificate(
                    f"step {step.id} references step {ref}, which is not earlier"
                )
    for idx, concl in enumerate(cert.conclusions):
        if not 0 <= concl.step < len(steps):
            raise MalformedCertificate(
                f"conclusion {idx} references missing step {concl.step}"
            )
        for v in (concl.i, concl.j, concl.k, concl.l):
            if not 1 <= v <= g.n:
                raise MalformedCertificate(
                    f"conclusion {idx} names vertex {v}, out of range for n={g.n}"
                )

    for step in steps:
        try:
            reason = _check_step(g, steps, step)
        except ValueError as exc:
            reason = str(exc)
        if reason is not None:
            return VerificationReport(
                valid=False,
                steps_checked=step.id,
                conclusions_checked=0,
                first_failure=step.id,
                reason=reason,
            )

    for idx, concl in enumerate(cert.conclusions):
        lhs, rhs = concl.claim()
        step = steps[concl.step]
        if step.lhs != lhs or step.rhs != rhs:
            return VerificationReport(
                valid=False,
                steps_checked=len(steps),
                conclusions_checked=idx,
                first_failure=concl.step,
                reason=(
                    f"conclusion {idx} ({concl.kind} {concl.i},{concl.j},"
                    f"{concl.k},{concl.l}) is not the claim of step {concl.step}"
                ),
            )

    return VerificationReport(
        valid=True,
        steps_checked=len(steps),
        conclusions_checked=len(cert.conclusions),
    )
