import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vrhq import bounds, hypercube as hc
from vrhq.errors import DimensionTooLarge, InconsistentHeader, ParseError

labels64 = st.integers(min_value=0, max_value=(1 << 64) - 1)


def figure_graph():
    # three vertices, edges 0-1 and 0-2
    return hc.Graph.from_edges(3, [(0, 1), (0, 2)])


class TestHammingDistance:
    def test_examples(self):
        assert hc.hamming_distance(0b000, 0b000) == 0
        assert hc.hamming_distance(0b000, 0b111) == 3
        assert hc.hamming_distance(0b0101, 0b0110) == 2

    @given(labels64, labels64, labels64)
    @settings(max_examples=300, deadline=None)
    def test_metric_axioms(self, a, b, c):
        d = hc.hamming_distance
        assert d(a, b) >= 0
        assert (d(a, b) == 0) == (a == b)
        assert d(a, b) == d(b, a)
        assert d(a, c) <= d(a, b) + d(b, c)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            hc.hamming_distance(-1, 0)


class TestAntipode:
    def test_examples(self):
        assert hc.antipode(0b000, 3) == 0b111
        assert hc.antipode(0b0101, 4) == 0b1010

    def test_involution_and_distance(self):
        for n in range(1, 11):
            for v in range(1 << min(n, 6)):
                assert hc.antipode(hc.antipode(v, n), n) == v
                assert hc.hamming_distance(v, hc.antipode(v, n)) == n

    def test_range_check(self):
        with pytest.raises(ValueError):
            hc.antipode(8, 3)


class TestBuildHammingGraph:
    def test_four_cycle(self):
        g = hc.build_hamming_graph(2, 1)
        assert g.m == 4 and g.edge_count() == 4
        assert hc.degree_profile(g) == {2: 4}
        assert not g.has_edge(0, 3) and not g.has_edge(1, 2)  # antipodes cut

    def test_complement_6_4(self):
        g = hc.build_hamming_graph(6, 4, complemented=True)
        assert hc.degree_profile(g) == {7: 64}
        assert g.edge_count() == 64 * 7 // 2

    def test_complement_3_2_is_antipodal_matching(self):
        g = hc.build_hamming_graph(3, 2, complemented=True)
        assert hc.degree_profile(g) == {1: 8}
        for v in range(8):
            assert list(g.neighbors(v)) == [hc.antipode(v, 3)]

    def test_degrees_match_tail_degree(self):
        for n in range(1, 9):
            for r in range(0, n):
                g = hc.build_hamming_graph(n, r, complemented=True)
                want = bounds.tail_degree(n, r)
                assert all(d == want for d in g.degrees())

    def test_edge_partition(self):
        # plain and complemented rows partition the complete graph exactly
        for n in range(1, 11):
            for r in range(0, n):
                g = hc.build_hamming_graph(n, r)
                gc = hc.build_hamming_graph(n, r, complemented=True)
                full = (1 << g.m) - 1
                for v in range(g.m):
                    assert g.row(v) & gc.row(v) == 0
                    assert g.row(v) | gc.row(v) == full ^ (1 << v)

    @given(st.integers(min_value=0, max_value=255),
           st.integers(min_value=0, max_value=255),
           st.integers(min_value=0, max_value=255))
    @settings(max_examples=100, deadline=None)
    def test_xor_translation_is_automorphism(self, mask, u, v):
        g = hc.build_hamming_graph(8, 3)
        gc = hc.build_hamming_graph(8, 3, complemented=True)
        assert g.has_edge(u, v) == g.has_edge(u ^ mask, v ^ mask)
        assert gc.has_edge(u, v) == gc.has_edge(u ^ mask, v ^ mask)

    def test_ceiling(self):
        with pytest.raises(DimensionTooLarge):
            hc.build_hamming_graph(25, 3)
        with pytest.raises(DimensionTooLarge):
            hc.build_hamming_graph(7, 2, ceiling=6)

    def test_validation(self):
        with pytest.raises(ValueError):
            hc.build_hamming_graph(0, 0)
        with pytest.raises(ValueError):
            hc.build_hamming_graph(3, -1)

    def test_metadata(self):
        g = hc.build_hamming_graph(3, 1, complemented=True)
        assert g.hamming == hc.HammingSpec(3, 1, True)
        assert g.vertex_transitive
        assert not figure_graph().vertex_transitive


class TestGraph:
    def test_degree_profile_examples(self):
        assert hc.degree_profile(figure_graph()) == {2: 1, 1: 2}

    def test_from_edges_rejects_loops_and_range(self):
        with pytest.raises(ValueError):
            hc.Graph.from_edges(3, [(1, 1)])
        with pytest.raises(ValueError):
            hc.Graph.from_edges(3, [(0, 3)])

    def test_constructor_validates(self):
        with pytest.raises(ValueError):
            hc.Graph([0b010, 0b000, 0b000])  # asymmetric
        with pytest.raises(ValueError):
            hc.Graph([0b001, 0b000, 0b000])  # loop at 0
        with pytest.raises(ValueError):
            hc.Graph([0b1000, 0b000, 0b000])  # out of range

    def test_accessors(self):
        g = figure_graph()
        assert g.max_degree == 2
        assert sorted(g.neighbors(0)) == [1, 2]
        assert g.degree(1) == 1
        assert g.has_edge(0, 2) and not g.has_edge(1, 2)
        assert not g.has_isolated_vertex()
        assert hc.Graph.from_edges(2, []).has_isolated_vertex()

    def test_complement(self):
        g = figure_graph()
        gc = g.complement()
        assert gc.has_edge(1, 2) and not gc.has_edge(0, 1)
        back = gc.complement()
        assert back.rows() == g.rows()
        # complement of a Hamming graph flips the complemented flag
        h = hc.build_hamming_graph(3, 1)
        assert h.complement().hamming == hc.HammingSpec(3, 1, True)
        assert h.complement().rows() == hc.build_hamming_graph(3, 1, complemented=True).rows()


class TestDimacs:
    def test_parse_figure_graph(self):
        g = hc.read_dimacs("c the three-vertex example\np edge 3 2\ne 1 2\ne 1 3\n")
        assert g.rows() == figure_graph().rows()

    def test_round_trip_corpus(self):
        import random
        rng = random.Random(7)
        corpus = [figure_graph(),
                  hc.build_hamming_graph(2, 1),
                  hc.build_hamming_graph(3, 2, complemented=True),
                  hc.Graph.from_edges(1, []),
                  hc.Graph.from_edges(5, [])]
        while len(corpus) < 10:
            m = rng.randint(2, 12)
            edges = [(u, v) for u in range(m) for v in range(u + 1, m)
                     if rng.random() < 0.4]
            corpus.append(hc.Graph.from_edges(m, edges))
        for g in corpus:
            text = hc.write_dimacs(g)
            again = hc.read_dimacs(text)
            assert again.rows() == g.rows()
            assert hc.write_dimacs(again) == text

    def test_isolated_vertices_preserved_via_header(self):
        g = hc.read_dimacs("p edge 4 1\ne 2 3\n")
        assert g.m == 4 and g.degree(0) == 0 and g.degree(3) == 0

    def test_loop_rejected(self):
        with pytest.raises(ParseError) as exc:
            hc.read_dimacs("p edge 2 1\ne 1 1\n")
        assert exc.value.line == 2

    def test_header_mismatch(self):
        with pytest.raises(InconsistentHeader):
            hc.read_dimacs("p edge 3 2\ne 1 2\n")
        # duplicate edge lines collapse, leaving the header inconsistent
        with pytest.raises(InconsistentHeader):
            hc.read_dimacs("p edge 3 2\ne 1 2\ne 2 1\n")

    @pytest.mark.parametrize("text,line", [
        ("e 1 2\n", 1),                       # edge before header
        ("p edge 3 1\np edge 3 1\ne 1 2\n", 2),  # duplicate header
        ("p graph 3 1\ne 1 2\n", 1),          # wrong descriptor
        ("p edge 3 1\ne 1\n", 2),             # short edge line
        ("p edge 3 1\ne 1 9\n", 2),           # endpoint out of range
        ("p edge 3 1\nq 1 2\n", 2),           # unknown line type
        ("p edge x 1\ne 1 2\n", 1),           # non-integer header
        ("p edge 3 1\ne 1 y\n", 2),           # non-integer endpoint
    ])
    def test_parse_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as exc:
            hc.read_dimacs(text)
        assert exc.value.line == line

    def test_missing_header(self):
        with pytest.raises(ParseError):
            hc.read_dimacs("c nothing here\n")

    def test_writer_canonical_order(self):
        g = hc.Graph.from_edges(4, [(3, 1), (2, 0)])
        assert hc.write_dimacs(g) == "p edge 4 2\ne 1 3\ne 2 4\n"
