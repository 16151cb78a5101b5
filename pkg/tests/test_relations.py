import pytest
from hypothesis import given, settings, strategies as st

from qsym import (
    ColOrth,
    ColSum,
    Comm,
    Idem,
    KILLED,
    Poly,
    RelationError,
    RowOrth,
    RowSum,
    SelfAdj,
    VanishA,
    VanishB,
    apply_relation,
    automorphism_group,
    cycle,
    equations,
    evaluate_perm,
    gen,
    local_reduce,
    monomial,
    petersen,
    relation_instances,
    rewrite_pair,
    u,
    validate_relation,
)

gens10 = st.tuples(st.integers(1, 10), st.integers(1, 10)).map(lambda t: gen(*t))
words10 = st.lists(gens10, max_size=5).map(tuple)
polys10 = st.lists(
    st.tuples(words10, st.integers(min_value=-2, max_value=2).filter(bool)),
    max_size=5,
).map(Poly)


def test_validate_relation_side_conditions():
    g = petersen()
    validate_relation(RowOrth(1, 2, 3), g)
    validate_relation(Idem(10, 10), g)
    validate_relation(VanishA(1, 1, 8, 3), g)  # rows 1,8 adjacent; cols 1,3 not
    validate_relation(VanishB(1, 1, 2, 8), g)  # rows 1,2 non-adjacent; cols 1,8 adjacent
    validate_relation(VanishA(1, 4, 8, 4), g)  # equal columns count as non-adjacent
    validate_relation(Comm(1, 1, 8, 8, certified_by=7), g)
    with pytest.raises(RelationError):
        validate_relation(RowOrth(1, 2, 2), g)  # columns must differ
    with pytest.raises(RelationError):
        validate_relation(RowOrth(1, 2, 11), g)  # out of range
    with pytest.raises(RelationError):
        validate_relation(VanishA(1, 1, 2, 3), g)  # rows 1,2 not adjacent
    with pytest.raises(RelationError):
        validate_relation(VanishA(1, 1, 8, 9), g)  # cols 1,9 adjacent
    with pytest.raises(RelationError):
        validate_relation(VanishB(1, 1, 8, 8), g)  # rows adjacent
    with pytest.raises(RelationError):
        validate_relation(Comm(1, 1, 8, 8, certified_by=-1), g)


def test_rewrite_pair_cases():
    a, b = gen(1, 2), gen(1, 3)
    assert rewrite_pair(RowOrth(1, 2, 3), a, b) is KILLED
    # The swapped product is a different orthogonality instance.
    assert rewrite_pair(RowOrth(1, 2, 3), b, a) is None
    assert rewrite_pair(RowOrth(1, 3, 2), b, a) is KILLED
    assert rewrite_pair(RowOrth(1, 2, 3), a, a) is None
    assert rewrite_pair(ColOrth(1, 2, 2), gen(1, 2), gen(2, 2)) is KILLED
    assert rewrite_pair(Idem(1, 2), a, a) == (a,)
    assert rewrite_pair(Idem(1, 3), a, a) is None
    v = VanishA(1, 1, 8, 3)
    assert rewrite_pair(v, gen(1, 1), gen(8, 3)) is KILLED
    assert rewrite_pair(v, gen(8, 3), gen(1, 1)) is KILLED  # both orientations
    c = Comm(1, 1, 8, 8)
    assert rewrite_pair(c, gen(1, 1), gen(8, 8)) == (gen(8, 8), gen(1, 1))
    assert rewrite_pair(c, gen(8, 8), gen(1, 1)) == (gen(1, 1), gen(8, 8))
    assert rewrite_pair(c, gen(1, 1), gen(8, 7)) is None
    # Sum and star relations are not pair rewrites.
    assert rewrite_pair(RowSum(1), a, b) is None
    assert rewrite_pair(SelfAdj(1, 2), a, a) is None


def test_apply_relation_semantics():
    g = petersen()
    p = monomial(((1, 1), (1, 1), (2, 2)))
    assert apply_relation(p, Idem(1, 1), 0) == monomial(((1, 1), (2, 2)))
    killed = monomial(((1, 1), (1, 2)))
    assert apply_relation(killed, RowOrth(1, 1, 2), 0).is_zero
    swapped = apply_relation(monomial(((1, 1), (8, 8))), Comm(1, 1, 8, 8), 0)
    assert swapped == monomial(((8, 8), (1, 1)))
    # Mixed sums: every term must match at the position.
    q = monomial(((1, 1), (1, 1))) + monomial(((1, 1), (3, 3)))
    with pytest.raises(ValueError):
        apply_relation(q, Idem(1, 1), 0)
    with pytest.raises(ValueError):
        apply_relation(p, Idem(1, 1), 5)  # position past the pair window
    with pytest.raises(ValueError):
        apply_relation(p, Idem(1, 1), -1)


def test_local_reduce_frozen_examples():
    g = petersen()
    assert local_reduce(g, monomial(((1, 1), (1, 2)))).is_zero
    assert local_reduce(g, monomial(((1, 1), (1, 1)))) == u(1, 1)
    assert local_reduce(cycle(5), monomial(((1, 1), (2, 3)))).is_zero
    # Rows 1,2 non-adjacent and columns 8,6 non-adjacent: irreducible.
    survivor = monomial(((1, 8), (2, 6)))
    assert local_reduce(g, survivor) == survivor
    # Scan restarts after an idempotent deletion.
    p = monomial(((1, 1), (1, 1), (1, 2)))
    assert local_reduce(g, p).is_zero
    assert local_reduce(g, Poly.one()) == Poly.one()


def test_local_reduce_expand_interplay():
    # Inserting a row unity inside an edge-edge product and reducing
    # keeps exactly the neighbors of the second column index.
    from qsym import ROW, expand_unity

    g = petersen()
    x = monomial(((1, 1), (8, 8)))
    expanded = expand_unity(x, 2, 1, ROW, 10)
    reduced = local_reduce(g, expanded)
    want = sum(
        (monomial(((1, 1), (8, 8), (1, s))) for s in g.neighbors(8)), Poly.zero()
    )
    assert reduced == want


def test_local_reduce_rejects_out_of_range():
    g = cycle(5)
    with pytest.raises(ValueError):
        local_reduce(g, u(1, 6))


@given(polys10)
def test_local_reduce_idempotent(p):
    g = petersen()
    once = local_reduce(g, p)
    assert local_reduce(g, once) == once


@given(polys10, polys10)
def test_local_reduce_linear(p, q):
    g = petersen()
    assert local_reduce(g, p + q) == local_reduce(g, p) + local_reduce(g, q)


def test_relation_instances_counts():
    g = petersen()
    instances = list(relation_instances(g))
    by_kind = {}
    for rel in instances:
        by_kind.setdefault(type(rel).__name__, []).append(rel)
    n, m = 10, 15
    assert len(by_kind["Idem"]) == n * n
    assert len(by_kind["SelfAdj"]) == n * n
    assert len(by_kind["RowSum"]) == n
    assert len(by_kind["ColSum"]) == n
    assert len(by_kind["RowOrth"]) == n * n * (n - 1)
    assert len(by_kind["ColOrth"]) == n * n * (n - 1)
    # Per directed edge: ordered column pairs that are non-adjacent,
    # equal allowed.
    non_adj_ordered = n * n - 2 * m
    assert len(by_kind["VanishA"]) == 2 * m * non_adj_ordered
    assert len(by_kind["VanishB"]) == 2 * m * non_adj_ordered
    assert "Comm" not in by_kind
    for rel in instances:
        validate_relation(rel, g)


@settings(max_examples=30)
@given(st.data())
def test_relation_equations_sound_under_automorphisms(data):
    g = petersen()
    elements = automorphism_group(g).elements
    sigma = data.draw(st.sampled_from(elements))
    rels = data.draw(st.lists(st.sampled_from(list(relation_instances(g))), min_size=1, max_size=20))
    for rel in rels:
        for lhs, rhs in equations(rel, g.n):
            assert evaluate_perm(g, sigma, lhs - rhs) == 0


@settings(max_examples=200)
@given(polys10, st.data())
def test_local_reduce_preserves_evaluation(p, data):
    g = petersen()
    elements = automorphism_group(g).elements
    sigma = data.draw(st.sampled_from(elements))
    assert evaluate_perm(g, sigma, p) == evaluate_perm(g, sigma, local_reduce(g, p))


@settings(max_examples=200)
@given(polys10, st.integers(1, 10), st.data())
def test_expand_unity_preserves_evaluation(p, idx, data):
    from qsym import ROW, COL, expand_unity

    g = petersen()
    elements = automorphism_group(g).elements
    sigma = data.draw(st.sampled_from(elements))
    side = data.draw(st.sampled_from([ROW, COL]))
    assert evaluate_perm(g, sigma, p) == evaluate_perm(
        g, sigma, expand_unity(p, 0, idx, side, 10)
    )
