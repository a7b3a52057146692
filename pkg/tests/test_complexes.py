import itertools
import math

import pytest

from vrhq import complexes as cx, hypercube as hc
from vrhq.errors import DuplicateVertex, OddCount, ParseError, TooLarge

from tests.oracles import brute_pattern_sets, brute_rips_by_dim


def check_closure(k):
    for d in range(1, k.max_dim_requested + 1):
        have = set(k.simplices(d - 1))
        for simplex in k.simplices(d):
            for omit in range(len(simplex)):
                assert simplex[:omit] + simplex[omit + 1:] in have


class TestVietorisRips:
    def test_four_cycle(self):
        k = cx.vietoris_rips(2, 1, 2)
        assert k.f_vector() == (4, 4, 0)

    def test_full_simplex(self):
        k = cx.vietoris_rips(3, 3, 7)
        assert k.f_vector() == tuple(math.comb(8, i + 1) for i in range(8))

    def test_cross_polytope_boundary(self):
        k = cx.vietoris_rips(3, 2, 3)
        assert k.f_vector() == (8, 24, 32, 16)

    def test_matches_subset_enumeration_oracle(self):
        for n, r, d in [(2, 1, 2), (3, 2, 3), (3, 1, 2), (4, 1, 3), (4, 2, 3)]:
            k = cx.vietoris_rips(n, r, d)
            want = brute_rips_by_dim(n, r, d - 1)
            got = [k.simplices(i) for i in range(d)]
            assert got == want

    def test_closure(self):
        for n in range(1, 5):
            for r in range(0, n + 1):
                check_closure(cx.vietoris_rips(n, r, 4))

    def test_diameter_soundness_sampled(self):
        import random
        rng = random.Random(123)
        pool = []
        for n, r, d in [(3, 2, 3), (4, 2, 4), (4, 3, 5)]:
            k = cx.vietoris_rips(n, r, d)
            for dim in range(d + 1):
                pool.extend((r, s) for s in k.simplices(dim))
        for r, s in rng.sample(pool, min(10_000, len(pool))):
            assert all(hc.hamming_distance(a, b) <= r
                       for a, b in itertools.combinations(s, 2))

    def test_simplex_cap(self):
        with pytest.raises(TooLarge):
            cx.vietoris_rips(3, 3, 7, max_simplices=10)

    def test_truncation_pads_empty_dimensions(self):
        k = cx.vietoris_rips(2, 1, 5)
        assert k.f_vector() == (4, 4, 0, 0, 0, 0)


class TestIndependenceComplex:
    def test_identity_with_rips(self):
        for n in range(1, 5):
            for r in range(0, n):
                gc = hc.build_hamming_graph(n, r, complemented=True)
                assert cx.independence_complex(gc, 4) == cx.vietoris_rips(n, r, 4)

    def test_perfect_matching_gives_cross_polytope(self):
        g = hc.build_hamming_graph(3, 2, complemented=True)
        k = cx.independence_complex(g, 3)
        assert k.f_vector() == (8, 24, 32, 16)

    def test_complete_graph_gives_points(self):
        g = hc.Graph.from_edges(5, itertools.combinations(range(5), 2))
        assert cx.independence_complex(g, 2).f_vector() == (5, 0, 0)

    def test_empty_graph_gives_full_simplex(self):
        g = hc.Graph.from_edges(4, [])
        k = cx.independence_complex(g, 3)
        assert k.f_vector() == (4, 6, 4, 1)


class TestFVectorEuler:
    def test_examples(self):
        k = cx.vietoris_rips(2, 1, 1)
        assert cx.f_vector(k) == (4, 4)
        assert cx.euler_characteristic(k) == 0
        assert cx.euler_characteristic(cx.vietoris_rips(3, 2, 3)) == 8 - 24 + 32 - 16 == 0
        assert cx.euler_characteristic(cx.vietoris_rips(3, 3, 7)) == 1


class TestWitnessCheck:
    def test_q2_antipodal_pairs(self):
        rep = cx.cross_polytope_witness_check(2, 1, [0, 1, 2, 3])
        assert rep.is_cross_polytope_boundary and rep.is_matching_complement
        assert rep.is_total_dominating_in_complement
        assert rep.missing_pairs == ()
        assert rep.recovered_pairs == ((0, 3), (1, 2))

    def test_q3_antipodal_pairs(self):
        rep = cx.cross_polytope_witness_check(3, 2, range(8))
        assert rep.is_cross_polytope_boundary
        assert rep.is_total_dominating_in_complement
        assert rep.recovered_pairs == ((0, 7), (1, 6), (2, 5), (3, 4))

    def test_no_far_partner(self):
        rep = cx.cross_polytope_witness_check(3, 2, [0b000, 0b011, 0b101, 0b110])
        assert not rep.is_cross_polytope_boundary
        assert rep.is_matching_complement  # vacuous matching
        assert rep.missing_pairs == ((0, 0), (3, 3), (5, 5), (6, 6))
        assert rep.recovered_pairs == ()

    def test_ambiguous_partners(self):
        # at r = 0 every distinct pair is far, so four vertices have degree 3
        rep = cx.cross_polytope_witness_check(2, 0, [0, 1, 2, 3])
        assert not rep.is_matching_complement
        assert not rep.is_cross_polytope_boundary
        assert len(rep.missing_pairs) == 6

    def test_single_far_pair(self):
        rep = cx.cross_polytope_witness_check(2, 0, [0, 3])
        assert rep.is_cross_polytope_boundary
        assert rep.recovered_pairs == ((0, 3),)
        # two vertices cannot dominate the complete distance->=1 graph minus
        # themselves? they can: every vertex of Q_2 differs from 0 or 3
        assert rep.is_total_dominating_in_complement

    def test_pattern_without_domination(self):
        # {0, 3} at scale 1 in Q_3: far pair at distance 2, but vertex 7 is
        # adjacent to both in the distance->=2 graph ... check honestly
        rep = cx.cross_polytope_witness_check(3, 1, [0, 3])
        assert rep.is_cross_polytope_boundary
        view = [any(hc.hamming_distance(u, s) > 1 for s in (0, 3))
                for u in range(8)]
        assert rep.is_total_dominating_in_complement == all(view)

    def test_errors(self):
        with pytest.raises(OddCount):
            cx.cross_polytope_witness_check(2, 1, [0, 1, 2])
        with pytest.raises(DuplicateVertex):
            cx.cross_polytope_witness_check(2, 1, [0, 0, 1, 2])
        with pytest.raises(ValueError):
            cx.cross_polytope_witness_check(2, 1, [0, 1, 2, 4])


class TestPatternEnumeration:
    def test_q2_r1(self):
        got = sorted(v for v, _ in cx.enumerate_cross_polytope_patterns(2, 1))
        assert got == [(0, 1, 2, 3), (0, 3), (1, 2)]

    def test_matches_brute_force(self):
        for n in range(1, 4):
            for r in range(0, n):
                got = sorted(v for v, _ in cx.enumerate_cross_polytope_patterns(n, r))
                assert got == sorted(brute_pattern_sets(n, r)), (n, r)

    def test_every_result_passes_the_checker(self):
        for verts, pairs in cx.enumerate_cross_polytope_patterns(3, 2):
            rep = cx.cross_polytope_witness_check(3, 2, verts)
            assert rep.is_cross_polytope_boundary
            assert rep.recovered_pairs == tuple(sorted(pairs))

    def test_ceiling(self):
        with pytest.raises(TooLarge):
            cx.enumerate_cross_polytope_patterns(5, 3)


class TestFundamentalCycle:
    def test_two_pairs(self):
        cycle = cx.fundamental_cycle([(0, 3), (1, 2)])
        assert cycle == [(0, 1), (0, 2), (1, 3), (2, 3)]

    def test_disjointness_required(self):
        with pytest.raises(ValueError):
            cx.fundamental_cycle([(0, 1), (1, 2)])

    def test_count(self):
        pairs = [(v, hc.antipode(v, 3)) for v in range(4)]
        assert len(cx.fundamental_cycle(pairs)) == 16


class TestComplexFile:
    def test_round_trip(self):
        k = cx.vietoris_rips(3, 2, 3)
        text = cx.format_complex(k)
        assert text.splitlines()[0] == "dim 3 vertices 8"
        again = cx.parse_complex(text)
        assert again == k
        assert cx.format_complex(again) == text

    def test_file_io(self, tmp_path):
        k = cx.vietoris_rips(2, 1, 2)
        path = tmp_path / "k.cx"
        cx.write_complex_file(k, path)
        assert cx.read_complex_file(path) == k

    @pytest.mark.parametrize("text", [
        "",                                        # empty
        "dim x vertices 4\n",                      # bad header ints
        "vertices 4 dim 1\n",                      # wrong header order
        "dim 1 vertices 2\n0\n1\n0 1\n0 1\n",      # duplicate simplex
        "dim 1 vertices 2\n0\n1\n1 0\n",           # unsorted vertices
        "dim 1 vertices 2\n0\n1\n0 2\n",           # vertex out of range
        "dim 1 vertices 3\n0\n1\n0 2\n",           # missing facet (2 not listed)
        "dim 0 vertices 2\n0\n1\n0 1\n",           # simplex above header dim
        "dim 1 vertices 3\n0\n1\n2\n0 1\n2\n",     # descending dimension group
    ])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            cx.parse_complex(text)
