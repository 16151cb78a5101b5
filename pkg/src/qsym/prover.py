"""Proof production for commutativity of the quantum automorphism algebra.

For graphs that are k-regular with no common neighbors across edges and
exactly one across non-edges (k at most 3), every ordered generator
pair (u[i,j], u[k,l]) either commutes or has vanishing products.  This
module emits certificates whose steps derive exactly that, one small
justified equation at a time, so the verifier can recheck everything
independently.

The derivation has three layers.  First, commutation for every pair of
directed edges: u[i,j]u[k,l] is pinned against a row unity expansion
until it equals the palindrome u[i,j]u[k,l]u[i,j], and a star transport
turns that into commutation.  Second, the same palindrome trick for
pairs of non-edges, which needs the unique common neighbors of the row
and column pairs as a bridge and uses already-certified commutations to
shuffle factors.  Third, the remaining quadruples, which vanish or
commute directly by the defining relations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import ROW, Poly, expand_unity, evaluate_perm, monomial, star, u
from .autgroup import automorphism_group
from .certificate import (
    CERT_VERSION,
    COMMUTES,
    ZERO_PRODUCT,
    Certificate,
    Conclusion,
    ExpandUnity,
    LemmaCom,
    LocalReduce,
    ProofStep,
    RelationApplication,
    StarOfStep,
    Substitution,
    graph_digest,
)
from .graphs import Graph, MooreReport, check_moore_conditions
from .relations import Comm, apply_relation, local_reduce

# The cross-term kill in the non-edge derivation relies on at most one
# neighbor of t besides the two column indices; k = 3 is the limit.
MAX_DEGREE = 3


class ConditionsNotMet(ValueError):
    """The graph fails the regularity or common-neighbor hypotheses."""

    def __init__(self, report: MooreReport):
        super().__init__(report.reason or "conditions not met")
        self.report = report


class UnsupportedDegree(ValueError):
    """The graph satisfies the hypotheses but its degree is too large."""

    def __init__(self, k: int):
        super().__init__(f"common degree k={k} exceeds the supported bound {MAX_DEGREE}")
        self.k = k


def _single_word(p: Poly):
    """The word of a one-term, coefficient-1 polynomial, else None."""
    if len(p.terms) != 1:
        return None
    ((w, c),) = p.terms.items()
    if c != 1:
        return None
    return w


class ProofBuilder:
    """Accumulates proof steps with sequential ids for one graph."""

    def __init__(self, g: Graph):
        self.graph = g
        self.steps: list[ProofStep] = []

    def add(self, lhs: Poly, rhs: Poly, justification) -> int:
        sid = len(self.steps)
        self.steps.append(ProofStep(sid, lhs, rhs, justification))
        return sid

    def lemma_com(self, sid: int) -> int:
        """From a step claiming u[i,j]u[k,l] = u[i,j]u[k,l]u[i,j], derive commutation.

        The right side is a palindrome, hence star-invariant, so both
        sides must equal their own stars.  Emits the starred claim for
        the record and then the commutation u[i,j]u[k,l] = u[k,l]u[i,j].
        Returns the id of the commutation step.
        """
        step = self.steps[sid]
        word_x = _single_word(step.lhs)
        word_y = _single_word(step.rhs)
        if word_x is None or word_y is None or len(word_x) != 2:
            raise ValueError(
                "commutation lemma needs a claim of the shape"
                " u[i,j]u[k,l] = u[i,j]u[k,l]u[i,j]"
            )
        if word_y != word_x + (word_x[0],):
            raise ValueError(
                "right side must be the left side times its own first factor"
            )
        self.add(star(step.lhs), star(step.rhs), StarOfStep(sid))
        return self.add(step.lhs, star(step.lhs), LemmaCom(sid))


def _require_hypotheses(g: Graph) -> int:
    report = check_moore_conditions(g)
    if not report.holds:
        raise ConditionsNotMet(report)
    return report.k


def _unique_common_neighbor(g: Graph, a: int, b: int) -> int:
    cn = g.common_neighbors(a, b)
    if len(cn) != 1:
        raise ValueError(f"vertices {a}, {b} have {len(cn)} common neighbors, expected 1")
    return cn[0]


def _derive_edge_edge(bld: ProofBuilder, r1: int, c1: int, r2: int, c2: int) -> int:
    """Certify u[r1,c1]u[r2,c2] = u[r2,c2]u[r1,c1] for adjacent rows and columns.

    Expanding a row-r1 unity on the right leaves survivors
    u[r1,c1]u[r2,c2]u[r1,s] over the neighbors s of c2.  Each survivor
    with s != c1 dies: expanding a row-r2 unity inside u[r1,c1]u[r1,s]
    reduces to exactly that survivor, yet the unexpanded product is
    zero by row orthogonality.  What remains is the palindrome form.
    """
    g = bld.graph
    n = g.n
    x0 = u(r1, c1) * u(r2, c2)
    a1_rhs = expand_unity(x0, 2, r1, ROW, n)
    a1 = bld.add(x0, a1_rhs, ExpandUnity(2, r1, ROW))
    a2_rhs = local_reduce(g, a1_rhs)
    a2 = bld.add(a1_rhs, a2_rhs, LocalReduce())
    cur = bld.add(x0, a2_rhs, Substitution(a1, a2))
    cur_rhs = a2_rhs
    for s in g.neighbors(c2):
        if s == c1:
            continue
        y = u(r1, c1) * u(r1, s)
        b1_rhs = expand_unity(y, 1, r2, ROW, n)
        b1 = bld.add(y, b1_rhs, ExpandUnity(1, r2, ROW))
        survivor = monomial(((r1, c1), (r2, c2), (r1, s)))
        if local_reduce(g, b1_rhs) != survivor:
            raise AssertionError("inner expansion must reduce to the single survivor")
        b2 = bld.add(b1_rhs, survivor, LocalReduce())
        b3 = bld.add(y, Poly.zero(), LocalReduce())
        b4a = bld.add(y, survivor, Substitution(b2, b1))
        b4b = bld.add(survivor, Poly.zero(), Substitution(b4a, b3))
        cur_rhs = cur_rhs - survivor
        cur = bld.add(x0, cur_rhs, Substitution(cur, b4b))
    if cur_rhs != monomial(((r1, c1), (r2, c2), (r1, c1))):
        raise AssertionError("edge-edge derivation did not reach the palindrome form")
    return bld.lemma_com(cur)


def _derive_all_edge_edge(bld: ProofBuilder) -> dict[tuple[int, int, int, int], int]:
    """Commutation step ids for every quadruple of two directed edges."""
    edges = bld.graph.directed_edges()
    table = {}
    for r1, r2 in edges:
        for c1, c2 in edges:
            table[(r1, c1, r2, c2)] = _derive_edge_edge(bld, r1, c1, r2, c2)
    return table


def derive_qa5(g: Graph) -> Certificate:
    """Certify commutation of u[i,j] and u[k,l] for all edges (i,k), (j,l).

    Requires the regularity and common-neighbor hypotheses; raises
    ConditionsNotMet otherwise.  Conclusions are sorted by quadruple.
    """
    _require_hypotheses(g)
    bld = ProofBuilder(g)
    table = _derive_all_edge_edge(bld)
    conclusions = tuple(
        Conclusion(COMMUTES, i, j, k, l, table[(i, j, k, l)])
        for (i, j, k, l) in sorted(table)
    )
    return Certificate(CERT_VERSION, graph_digest(g), tuple(bld.steps), conclusions)


def _kill_extra_neighbor(
    bld: ProofBuilder,
    r1: int,
    c1: int,
    r2: int,
    c2: int,
    s: int,
    t: int,
    q: int,
    comm: dict,
) -> int:
    """Certify u[r1,c1]u[s,t]u[r2,c2]u[r1,q] = 0 for the extra neighbor q of t.

    A row-r2 unity expanded inside u[r1,c1]u[s,t]u[r1,q] survives only
    with middle columns c1 and c2.  The c1 survivor dies by column
    orthogonality after one certified swap, identifying the target term
    with the unexpanded product, which itself dies by row orthogonality
    after another swap.
    """
    g = bld.graph
    n = g.n
    g3 = monomial(((r1, c1), (s, t), (r1, q)))
    z1_rhs = expand_unity(g3, 2, r2, ROW, n)
    z1 = bld.add(g3, z1_rhs, ExpandUnity(2, r2, ROW))
    a_word = monomial(((r1, c1), (s, t), (r2, c1), (r1, q)))
    t_word = monomial(((r1, c1), (s, t), (r2, c2), (r1, q)))
    z2_rhs = local_reduce(g, z1_rhs)
    if z2_rhs != a_word + t_word:
        raise AssertionError("inner expansion has unexpected survivors")
    z2 = bld.add(z1_rhs, z2_rhs, LocalReduce())
    swap_c1 = Comm(s, t, r2, c1, certified_by=comm[(s, t, r2, c1)])
    a_swapped = apply_relation(a_word, swap_c1, 1)
    z3 = bld.add(a_word, a_swapped, RelationApplication(swap_c1, 1))
    z4 = bld.add(a_swapped, Poly.zero(), LocalReduce())
    z5 = bld.add(a_word, Poly.zero(), Substitution(z3, z4))
    z6 = bld.add(z1_rhs, t_word, Substitution(z2, z5))
    z7 = bld.add(g3, t_word, Substitution(z1, z6))
    swap_front = Comm(r1, c1, s, t, certified_by=comm[(r1, c1, s, t)])
    g3_swapped = apply_relation(g3, swap_front, 0)
    z8 = bld.add(g3, g3_swapped, RelationApplication(swap_front, 0))
    z9 = bld.add(g3_swapped, Poly.zero(), LocalReduce())
    z10 = bld.add(g3, Poly.zero(), Substitution(z8, z9))
    return bld.add(t_word, Poly.zero(), Substitution(z7, z10))


def _derive_nonedge(
    bld: ProofBuilder, r1: int, c1: int, r2: int, c2: int, comm: dict
) -> int:
    """Certify u[r1,c1]u[r2,c2] = u[r2,c2]u[r1,c1] for two non-adjacent pairs.

    Uses the unique common neighbor s of the rows and t of the columns.
    Returns the id of the final commutation step.
    """
    g = bld.graph
    n = g.n
    s = _unique_common_neighbor(g, r1, r2)
    t = _unique_common_neighbor(g, c1, c2)
    x0 = u(r1, c1) * u(r2, c2)

    # Pin the bridging factor: x0 = u[r1,c1]u[s,t]u[r2,c2].
    p1a_rhs = expand_unity(x0, 1, s, ROW, n)
    p1a = bld.add(x0, p1a_rhs, ExpandUnity(1, s, ROW))
    w1 = monomial(((r1, c1), (s, t), (r2, c2)))
    if local_reduce(g, p1a_rhs) != w1:
        raise AssertionError("bridge expansion must reduce to a single word")
    p1b = bld.add(p1a_rhs, w1, LocalReduce())
    cur = bld.add(x0, w1, Substitution(p1a, p1b))

    # Swing u[s,t] to the right, expand a trailing row-r1 unity, and
    # swing it back: x0 equals the sum over the neighbors p of t of
    # u[r1,c1]u[s,t]u[r2,c2]u[r1,p].
    swap = Comm(s, t, r2, c2, certified_by=comm[(s, t, r2, c2)])
    w2 = apply_relation(w1, swap, 1)
    p2a = bld.add(w1, w2, RelationApplication(swap, 1))
    p2b_rhs = expand_unity(w2, 3, r1, ROW, n)
    p2b = bld.add(w2, p2b_rhs, ExpandUnity(3, r1, ROW))
    sum_fwd = local_reduce(g, p2b_rhs)
    p2c = bld.add(p2b_rhs, sum_fwd, LocalReduce())
    p2d = bld.add(w2, sum_fwd, Substitution(p2b, p2c))
    sum_back = apply_relation(sum_fwd, swap, 1)
    p2e = bld.add(sum_fwd, sum_back, RelationApplication(swap, 1))
    cur = bld.add(x0, w2, Substitution(cur, p2a))
    cur = bld.add(x0, sum_fwd, Substitution(cur, p2d))
    cur = bld.add(x0, sum_back, Substitution(cur, p2e))
    cur_rhs = sum_back

    # The p = c2 term dies by column orthogonality.
    v = monomial(((r1, c1), (s, t), (r2, c2), (r1, c2)))
    p3a = bld.add(v, Poly.zero(), LocalReduce())
    cur_rhs = cur_rhs - v
    cur = bld.add(x0, cur_rhs, Substitution(cur, p3a))

    # Any neighbor of t beyond c1 and c2 dies by the swap argument.
    for q in g.neighbors(t):
        if q == c1 or q == c2:
            continue
        zq = _kill_extra_neighbor(bld, r1, c1, r2, c2, s, t, q, comm)
        t_word = monomial(((r1, c1), (s, t), (r2, c2), (r1, q)))
        cur_rhs = cur_rhs - t_word
        cur = bld.add(x0, cur_rhs, Substitution(cur, zq))

    witness = monomial(((r1, c1), (s, t), (r2, c2), (r1, c1)))
    if cur_rhs != witness:
        raise AssertionError("non-edge derivation did not isolate the bridge witness")

    # Replay the bridge expansion with the trailing factor in place to
    # trade the witness for the palindrome u[r1,c1]u[r2,c2]u[r1,c1].
    y = monomial(((r1, c1), (r2, c2), (r1, c1)))
    p4a_rhs = expand_unity(y, 1, s, ROW, n)
    p4a = bld.add(y, p4a_rhs, ExpandUnity(1, s, ROW))
    if local_reduce(g, p4a_rhs) != witness:
        raise AssertionError("palindrome expansion must reduce to the bridge witness")
    p4b = bld.add(p4a_rhs, witness, LocalReduce())
    p4c = bld.add(y, witness, Substitution(p4a, p4b))
    final = bld.add(x0, y, Substitution(cur, p4c))
    return bld.lemma_com(final)


def prove_no_quantum_symmetry(g: Graph) -> Certificate:
    """Certify that every ordered generator pair commutes or vanishes.

    The conclusions classify all n^2 x n^2 ordered pairs
    (u[i,j], u[k,l]), one conclusion per quadruple in lexicographic
    order.  Requires the regularity and common-neighbor hypotheses and
    common degree at most 3; raises ConditionsNotMet or
    UnsupportedDegree otherwise.
    """
    k = _require_hypotheses(g)
    if k > MAX_DEGREE:
        raise UnsupportedDegree(k)
    bld = ProofBuilder(g)
    comm = _derive_all_edge_edge(bld)
    adj1 = g.adj1
    conclusions = []
    for i in g.vertices():
        for j in g.vertices():
            for k2 in g.vertices():
                for l in g.vertices():
                    if i == k2:
                        if j == l:
                            w = u(i, j) * u(k2, l)
                            sid = bld.add(w, w, LocalReduce())
                            conclusions.append(Conclusion(COMMUTES, i, j, k2, l, sid))
                        else:
                            sid = bld.add(u(i, j) * u(k2, l), Poly.zero(), LocalReduce())
                            conclusions.append(Conclusion(ZERO_PRODUCT, i, j, k2, l, sid))
                    elif j == l or bool(adj1[i][k2]) != bool(adj1[j][l]):
                        sid = bld.add(u(i, j) * u(k2, l), Poly.zero(), LocalReduce())
                        conclusions.append(Conclusion(ZERO_PRODUCT, i, j, k2, l, sid))
                    elif adj1[i][k2]:
                        conclusions.append(
                            Conclusion(COMMUTES, i, j, k2, l, comm[(i, j, k2, l)])
                        )
                    else:
                        sid = _derive_nonedge(bld, i, j, k2, l, comm)
                        conclusions.append(Conclusion(COMMUTES, i, j, k2, l, sid))
    return Certificate(
        CERT_VERSION, graph_digest(g), tuple(bld.steps), tuple(conclusions)
    )


@dataclass(frozen=True)
class SanityReport:
    """Counts from evaluating certificate conclusions at automorphisms."""

    trials: int
    checks: int
    failures: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def sanity_eval(g: Graph, cert: Certificate, trials: int, seed: int = 0) -> SanityReport:
    """Spot-check conclusions under random automorphism evaluations.

    For each sampled automorphism, every zero-product claim must
    evaluate to 0 and every commutation claim's commutator must
    evaluate to 0.  Failures are reported with the conclusion index and
    the offending permutation; any failure means a bug, since a
    verified certificate holds in every permutation representation.
    """
    group = automorphism_group(g)
    if group.elements is None:
        raise ValueError("graph too large to sample automorphism elements")
    diffs = []
    for c in cert.conclusions:
        lhs, rhs = c.claim()
        diffs.append(lhs - rhs)
    rng = random.Random(seed)
    failures = []
    checks = 0
    for _ in range(trials):
        sigma = rng.choice(group.elements)
        for idx, d in enumerate(diffs):
            checks += 1
            if evaluate_perm(g, sigma, d) != 0:
                failures.append((idx, sigma.images))
    return SanityReport(trials=trials, checks=checks, failures=tuple(failures))
