import pytest
from hypothesis import given, strategies as st

from qsym import (
    Graph,
    GraphFormatError,
    SrgParams,
    check_moore_conditions,
    complement,
    complete,
    complete_bipartite,
    cycle,
    empty,
    format_graph_text,
    from_edge_list,
    kneser,
    kneser_vertices,
    parse_graph_text,
    petersen,
    srg_params,
)

# Adjacency of the 2-subset construction on {1..5}, worked out by hand:
# vertex i is the i-th 2-subset in lexicographic order, edges join
# disjoint subsets.
PETERSEN_NEIGHBORS = {
    1: (8, 9, 10),
    2: (6, 7, 10),
    3: (5, 7, 9),
    4: (5, 6, 8),
    5: (3, 4, 10),
    6: (2, 4, 9),
    7: (2, 3, 8),
    8: (1, 4, 7),
    9: (1, 3, 6),
    10: (1, 2, 5),
}


def test_petersen_adjacency_oracle():
    g = petersen()
    assert g.n == 10
    assert g.edge_count() == 15
    for v, nbrs in PETERSEN_NEIGHBORS.items():
        assert g.neighbors(v) == nbrs


def test_petersen_is_kneser_5_2():
    assert petersen() == kneser(5, 2)
    assert kneser_vertices(5, 2)[0] == (1, 2)
    assert len(kneser_vertices(5, 2)) == 10


def test_kneser_disjointness_defines_edges():
    g = kneser(5, 2)
    subsets = kneser_vertices(5, 2)
    for a in range(1, 11):
        for b in range(1, 11):
            if a == b:
                continue
            disjoint = not (set(subsets[a - 1]) & set(subsets[b - 1]))
            assert g.adjacent(a, b) == disjoint


def test_basic_constructors():
    assert complete(4).edge_count() == 6
    assert empty(4).edge_count() == 0
    assert cycle(5).edge_count() == 5
    assert complete_bipartite(3, 3).edge_count() == 9
    assert complement(petersen()).edge_count() == 45 - 15
    assert cycle(5).neighbors(1) == (2, 5)
    assert complete_bipartite(2, 3).neighbors(1) == (3, 4, 5)


def test_constructor_validation():
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        empty(0)
    with pytest.raises(ValueError):
        kneser(3, 2)
    with pytest.raises(ValueError):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(1, 4)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(1, 2), (2, 1)])


def test_graph_invariants_rejected():
    with pytest.raises(ValueError):
        Graph(2, ((0, 1), (0, 0)))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, ((1, 0), (0, 0)))  # loop
    with pytest.raises(ValueError):
        Graph(2, ((0,), (0, 0)))  # ragged


def test_common_neighbors_oracles():
    g = petersen()
    assert g.common_neighbors(1, 5) == (10,)
    assert g.common_neighbors(1, 8) == ()
    assert g.common_neighbors(2, 3) == (7,)
    with pytest.raises(ValueError):
        g.common_neighbors(1, 1)


def test_srg_params_oracles():
    assert srg_params(petersen()) == SrgParams(10, 3, 0, 1)
    assert srg_params(cycle(5)) == SrgParams(5, 2, 0, 1)
    assert srg_params(complement(petersen())) == SrgParams(10, 6, 3, 4)
    assert srg_params(complete_bipartite(3, 3)) == SrgParams(6, 3, 0, 3)
    # Degenerate or non-srg cases.
    assert srg_params(complete(4)) is None
    assert srg_params(empty(4)) is None
    assert srg_params(from_edge_list(4, [(1, 2), (2, 3)])) is None  # not regular
    assert srg_params(cycle(6)) is None  # non-uniform mu


def test_srg_counting_identity():
    params = srg_params(petersen())
    assert params.counting_identity_holds()
    assert srg_params(cycle(5)).counting_identity_holds()


def test_moore_conditions_positive():
    for g, k in ((petersen(), 3), (cycle(5), 2), (complete(2), 1)):
        report = check_moore_conditions(g)
        assert report.holds and report.k == k
        assert report.witness is None and report.reason is None


def test_moore_conditions_negative_witnesses():
    cases = [
        (complete(4), "adjacent pair"),
        (empty(4), "non-adjacent pair"),
        (complement(petersen()), "adjacent pair"),
        (complete_bipartite(3, 3), "non-adjacent pair"),
        (from_edge_list(3, [(1, 2)]), "degree"),
    ]
    for g, fragment in cases:
        report = check_moore_conditions(g)
        assert not report.holds
        assert report.k is None
        assert report.witness is not None and len(report.witness) == 2
        assert fragment in report.reason


def test_format_parse_round_trip():
    for g in (petersen(), cycle(5), empty(4), complete(4), complete_bipartite(2, 3)):
        assert parse_graph_text(format_graph_text(g)) == g


def test_parse_graph_text_comments_and_blanks():
    text = "# a triangle\n3 3\n\n1 2\n2 3\n# done\n1 3\n"
    g = parse_graph_text(text)
    assert g == complete(3)


def test_parse_graph_text_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError) as exc:
        parse_graph_text("3 1\n1 x\n")
    assert exc.value.line == 2
    with pytest.raises(GraphFormatError) as exc:
        parse_graph_text("")
    with pytest.raises(GraphFormatError) as exc:
        parse_graph_text("3 2\n1 2\n")
    assert "edge" in str(exc.value)
    with pytest.raises(GraphFormatError) as exc:
        parse_graph_text("2 1\n1 2\n2 1\n")


@given(st.integers(min_value=3, max_value=9))
def test_cycle_regularity(n):
    g = cycle(n)
    assert all(g.degree(v) == 2 for v in g.vertices())
    assert g.edge_count() == n


@given(st.integers(min_value=1, max_value=8))
def test_complement_involution(n):
    g = complete_bipartite(n, 2) if n > 2 else complete(n + 1)
    assert complement(complement(g)) == g


@given(st.integers(min_value=2, max_value=8), st.data())
def test_parse_format_random_graphs(n, data):
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    g = from_edge_list(n, sorted(chosen))
    assert parse_graph_text(format_graph_text(g)) == g
