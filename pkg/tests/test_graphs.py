import pytest
from hypothesis import given

from clique_blowup import (
    DuplicateEdgeError,
    Graph,
    InvalidParameterError,
    NotConnectedError,
    ParseError,
    SelfLoopError,
    bipartition,
    gen_family,
    incidence_rank,
    is_connected,
    parse_edge_list,
    serialize_edge_list,
)

from conftest import connected_graphs


class TestGraphModel:
    def test_normalizes_edge_order(self):
        g = Graph(3, [(2, 1), (1, 0), (2, 0)])
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_adjacency_and_degrees(self):
        g = gen_family("star", 4)
        assert g.adjacency == ((1, 2, 3), (0,), (0,), (0,))
        assert g.degrees == (3, 1, 1, 1)

    def test_rejects_self_loop(self):
        with pytest.raises(SelfLoopError):
            Graph(2, [(1, 1)])

    def test_rejects_duplicate_even_when_flipped(self):
        with pytest.raises(DuplicateEdgeError):
            Graph(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range_label(self):
        with pytest.raises(InvalidParameterError):
            Graph(2, [(0, 2)])

    def test_isolated_vertices_are_representable(self):
        g = Graph(3, [(0, 1)])
        assert g.degrees == (1, 1, 0)
        assert not is_connected(g)


class TestParse:
    def test_triangle(self):
        g = parse_edge_list("0 1\n1 2\n0 2")
        assert g == gen_family("complete", 3)

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            parse_edge_list("0 0")

    def test_duplicate_after_normalization(self):
        with pytest.raises(DuplicateEdgeError):
            parse_edge_list("0 1\n# comment\n\n1 0")

    def test_comments_and_blanks_skipped(self):
        g = parse_edge_list("# header\n0 1  # trailing\n\n1 2\n")
        assert g.edges == ((0, 1), (1, 2))

    @pytest.mark.parametrize("text", ["0", "0 1 2", "a b", "0 -1"])
    def test_malformed_line_reports_number(self, text):
        with pytest.raises(ParseError) as err:
            parse_edge_list("0 1\n" + text)
        assert err.value.line == 2

    def test_empty_text_gives_empty_graph(self):
        g = parse_edge_list("")
        assert g.vertex_count == 0 and g.edges == ()


class TestSerialize:
    def test_format(self):
        text = serialize_edge_list(gen_family("path", 3))
        assert text == "0 1\n1 2\n"
        assert not text.endswith("\n\n")

    def test_roundtrip_corpus(self, corpus):
        for _, g in corpus:
            assert parse_edge_list(serialize_edge_list(g)) == g

    @given(connected_graphs())
    def test_roundtrip_random(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g


class TestGenFamily:
    def test_complete(self):
        g = gen_family("complete", 3)
        assert (g.vertex_count, g.edge_count) == (3, 3)

    def test_cycle_is_bipartite_when_even(self):
        g = gen_family("cycle", 4)
        assert (g.vertex_count, g.edge_count) == (4, 4)
        assert bipartition(g).is_bipartite

    def test_path(self):
        assert gen_family("path", 3).edges == ((0, 1), (1, 2))

    def test_star_center(self):
        g = gen_family("star", 5)
        assert g.edge_count == 4
        assert g.degrees[0] == 4

    @pytest.mark.parametrize(
        "family,k", [("cycle", 2), ("complete", 1), ("path", 0), ("star", 0)]
    )
    def test_out_of_range(self, family, k):
        with pytest.raises(InvalidParameterError):
            gen_family(family, k)

    def test_unknown_family(self):
        with pytest.raises(InvalidParameterError):
            gen_family("wheel", 4)

    @pytest.mark.parametrize(
        "family,k,edges",
        [("complete", 5, 10), ("path", 6, 5), ("cycle", 7, 7), ("star", 6, 5)],
    )
    def test_edge_counts(self, family, k, edges):
        g = gen_family(family, k)
        assert g.vertex_count == k and g.edge_count == edges
        assert sum(g.degrees) == 2 * g.edge_count


class TestConnectivity:
    def test_triangle_connected(self):
        assert is_connected(gen_family("complete", 3))

    def test_two_disjoint_edges(self):
        assert not is_connected(Graph(4, [(0, 1), (2, 3)]))

    def test_single_vertex(self):
        assert is_connected(gen_family("path", 1))

    def test_empty_graph(self):
        assert not is_connected(Graph(0))


class TestBipartition:
    def test_even_cycle(self):
        b = bipartition(gen_family("cycle", 4))
        assert b.is_bipartite
        assert b.side("X") == (0, 2) and b.side("Y") == (1, 3)

    def test_triangle(self):
        assert not bipartition(gen_family("complete", 3)).is_bipartite

    def test_path(self):
        b = bipartition(gen_family("path", 3))
        assert b.is_bipartite
        assert b.side("X") == (0, 2) and b.side("Y") == (1,)

    def test_requires_connected(self):
        with pytest.raises(NotConnectedError):
            bipartition(Graph(4, [(0, 1), (2, 3)]))

    def test_edges_cross_sides_when_bipartite(self, corpus):
        for _, g in corpus:
            b = bipartition(g)
            if b.is_bipartite:
                assert all(b.side_of[u] != b.side_of[v] for u, v in g.edges)


class TestIncidenceRank:
    @pytest.mark.parametrize(
        "spec,rank",
        [
            (("complete", 3), 3),  # non-bipartite: full rank
            (("cycle", 4), 3),  # bipartite: one short
            (("path", 3), 2),
        ],
    )
    def test_fixtures(self, spec, rank):
        assert incidence_rank(gen_family(*spec)) == rank

    def test_requires_connected(self):
        with pytest.raises(NotConnectedError):
            incidence_rank(Graph(4, [(0, 1), (2, 3)]))

    @given(connected_graphs())
    def test_dichotomy(self, g):
        expected = g.vertex_count - (1 if bipartition(g).is_bipartite else 0)
        assert incidence_rank(g) == expected

    @given(connected_graphs())
    def test_degree_sum(self, g):
        assert sum(g.degrees) == 2 * g.edge_count
