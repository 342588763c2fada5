import pytest

import oracles
from acqnet import (
    CapExceededError,
    Graph,
    PreconditionError,
    central_neighbor_pairs,
    cliqueless_hamlet_properties,
    cliqueless_neighborhood_points,
    cliqueless_points,
    complete_multipartite,
    complement,
    moore_check,
    singleton_check,
    spanning_star_centers,
    structure_witnesses,
)
from acqnet import corpus, named
from acqnet.detectors import cycles_of_length, edge_on_pentagon
from acqnet.span import girth, is_diameter_two, span_2club


def h7():
    return named.h7_graph()


class TestStarCenters:
    def test_k6_minus_edge(self, k6e):
        assert spanning_star_centers(k6e) == {2, 3, 4, 5}

    def test_star(self, s6):
        assert spanning_star_centers(s6) == {0}

    def test_petersen(self, petersen):
        assert spanning_star_centers(petersen) == frozenset()


class TestCentralPairs:
    def test_k23_all_cross_pairs(self, k23):
        pairs = {frozenset(p) for p in central_neighbor_pairs(k23)}
        assert pairs == {frozenset((a, b)) for a in (0, 1) for b in (2, 3, 4)}

    def test_petersen(self, petersen):
        assert central_neighbor_pairs(petersen) == []

    def test_k3(self):
        assert len(central_neighbor_pairs(named.complete_graph(3))) == 3

    def test_disconnected(self):
        with pytest.raises(PreconditionError):
            central_neighbor_pairs(named.empty_graph(2))

    def test_pairs_cover_everything(self):
        for n in range(3, 8):
            for g in corpus.connected_graphs(n):
                adj = oracles.adjacency(g)
                for u, v in central_neighbor_pairs(g):
                    assert v in adj[u]
                    assert adj[u] | adj[v] | {u, v} == set(g.labels)


class TestSingletons:
    def test_star(self, s6):
        singles, holds = singleton_check(s6)
        assert singles == {1, 2, 3, 4, 5} and holds

    def test_star_with_leaf_edges(self):
        # star center 0 with two of its leaves joined
        g = Graph(range(6), [(0, i) for i in range(1, 6)] + [(1, 2), (3, 4)])
        singles, holds = singleton_check(g)
        assert singles == {5} and holds

    def test_k23_vacuous(self, k23):
        assert singleton_check(k23) == (frozenset(), True)

    def test_requires_diameter_two(self, p5):
        with pytest.raises(PreconditionError):
            singleton_check(p5)


class TestCliqueless:
    def test_petersen(self, petersen):
        assert cliqueless_points(petersen) == set(petersen.labels)
        assert cliqueless_neighborhood_points(petersen) == set(petersen.labels)

    def test_k3(self):
        k3 = named.complete_graph(3)
        assert cliqueless_points(k3) == frozenset()
        assert cliqueless_neighborhood_points(k3) == frozenset()

    def test_h7_triangles(self):
        assert set(oracles.triangles(h7())) == {frozenset({2, 3, 7}), frozenset({3, 4, 7})}

    def test_h7_cliqueless_points(self):
        g = h7()
        on_triangle = set().union(*oracles.triangles(g))
        assert cliqueless_points(g) == set(g.labels) - on_triangle == {1, 5, 6}

    def test_h7_cliqueless_neighborhoods(self):
        # vertex 5 has neighbor 4, which lies on triangle {3, 4, 7}
        assert cliqueless_neighborhood_points(h7()) == frozenset()

    def test_locally_cliqueless_hamlet(self):
        g = named.locally_cliqueless_hamlet()
        assert is_diameter_two(g)
        assert span_2club(g).span == 4 and girth(g).girth == 3
        assert cliqueless_neighborhood_points(g) == {3}

    def test_neighborhood_points_subset_exhaustive(self):
        for n in range(1, 8):
            for g in corpus.graphs(n):
                pts = cliqueless_points(g)
                on_triangle = set().union(*oracles.triangles(g)) if g.n >= 3 else set()
                assert pts == set(g.labels) - on_triangle
                nbhd = cliqueless_neighborhood_points(g)
                adj = oracles.adjacency(g)
                assert nbhd == {v for v in g.labels if adj[v] <= pts}
                assert nbhd - {v for v in g.labels if not adj[v]} <= pts


class TestMultipartite:
    def test_k23(self, k23):
        parts = complete_multipartite(k23)
        assert sorted(map(sorted, parts)) == [[0, 1], [2, 3, 4]]

    def test_octahedron(self):
        parts = complete_multipartite(named.complete_multipartite_graph(2, 2, 2))
        assert sorted(map(len, parts)) == [2, 2, 2]

    def test_c5(self, c5):
        assert complete_multipartite(c5) is None

    def test_complete_graph_parts_are_singletons(self):
        assert len(complete_multipartite(named.complete_graph(4))) == 4

    def test_partition_is_valid_exhaustive(self):
        for n in range(1, 7):
            for g in corpus.graphs(n):
                parts = complete_multipartite(g)
                adj = oracles.adjacency(g)
                if parts is None:
                    # the complement must then contain an induced path on three vertices
                    co = oracles.adjacency(complement(g))
                    assert any(
                        b in co[a] and c in co[b] and c not in co[a]
                        for a in g.labels
                        for b in g.labels
                        for c in g.labels
                        if a != c
                    )
                    continue
                assert set().union(*parts) == set(g.labels)
                for p in parts:
                    for q in parts:
                        for u in p:
                            for v in q:
                                if u != v:
                                    assert (v in adj[u]) == (p is not q)


class TestMoore:
    def test_c5(self, c5):
        assert moore_check(c5)

    def test_petersen(self, petersen):
        assert moore_check(petersen)

    def test_k23(self, k23):
        assert not moore_check(k23)

    def test_regular_girth5_not_diameter_2(self):
        assert not moore_check(named.cycle_graph(10))

    def test_girth5_diameter2_is_regular_exhaustive(self):
        for n in range(3, 9):
            for g in corpus.connected_graphs(n):
                if is_diameter_two(g) and girth(g).girth == 5:
                    assert moore_check(g), g.edges()


class TestCycles:
    def test_counts_k4(self):
        k4 = named.complete_graph(4)
        assert len(list(cycles_of_length(k4, 3))) == 4
        assert len(list(cycles_of_length(k4, 4))) == 3

    def test_petersen_pentagons(self, petersen):
        assert len(list(cycles_of_length(petersen, 5))) == 12

    def test_against_oracle(self):
        def edges_of(cycle):
            return frozenset(frozenset((cycle[i - 1], cycle[i])) for i in range(len(cycle)))

        for n in range(3, 7):
            for g in corpus.graphs(n):
                for k in (3, 4, 5):
                    want = [edges_of(c) for c in oracles.simple_cycles(g, max_len=k) if len(c) == k]
                    got = [edges_of([g.label(i) for i in c]) for c in cycles_of_length(g, k)]
                    assert len(got) == len(set(got)) == len(want)
                    assert set(got) == set(want)

    def test_edge_on_pentagon(self, c5, k23):
        assert edge_on_pentagon(c5, 0, 1) is not None
        assert edge_on_pentagon(k23, 0, 2) is None


class TestHamletChecklist:
    def test_h6_all_pass(self, h6):
        check = cliqueless_hamlet_properties(h6)
        assert check.all_passed
        assert list(check.items()) == list("abcdef")

    def test_k33_refused(self):
        with pytest.raises(PreconditionError, match="span 3"):
            cliqueless_hamlet_properties(named.complete_bipartite_graph(3, 3))

    def test_petersen_refused(self, petersen):
        with pytest.raises(PreconditionError, match="girth 5"):
            cliqueless_hamlet_properties(petersen)

    def test_cap(self, h6):
        with pytest.raises(CapExceededError):
            cliqueless_hamlet_properties(h6, cycle_cap=5)

    def test_every_small_cliqueless_hamlet_passes(self):
        seen = 0
        for n in range(5, 9):
            for g in corpus.triangle_free_graphs(n):
                if is_diameter_two(g) and girth(g).girth == 4 and span_2club(g).span == 4:
                    assert cliqueless_hamlet_properties(g).all_passed
                    seen += 1
        assert seen > 0


class TestStructureWitnesses:
    def test_k23(self, k23):
        w = structure_witnesses(k23)
        assert w.star_centers == frozenset() and len(w.central_pairs) == 6
        assert w.singletons == frozenset() and not w.moore
        assert len(w.multipartite_parts) == 2

    def test_star(self, s6):
        w = structure_witnesses(s6)
        assert w.star_centers == {0} and len(w.singletons) == 5

    def test_disconnected(self):
        with pytest.raises(PreconditionError):
            structure_witnesses(named.empty_graph(2))
