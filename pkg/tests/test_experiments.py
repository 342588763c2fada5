import csv
import io
from itertools import combinations

import numpy as np
import pytest

import oracles
from acqnet import (
    CapExceededError,
    DiameterClassPair,
    PreconditionError,
    complement,
    complement_diameter_census,
    diameter2_fraction,
    random_graph,
    sabidussi_scan,
)
from acqnet import corpus, named
from acqnet.experiments import ALLOWED_CELLS, band, sabidussi_violation, trial_rng, write_csv


class TestRandomGraph:
    def test_p_one(self):
        g = random_graph(5, 1.0, 3)
        assert g.m == 10

    def test_p_zero(self):
        assert random_graph(5, 0.0, 3).m == 0

    def test_deterministic(self):
        assert random_graph(10, 0.5, 42) == random_graph(10, 0.5, 42)

    def test_bad_p(self):
        with pytest.raises(PreconditionError):
            random_graph(4, 1.5, 0)

    def test_matches_independent_draw(self):
        # pairs in row-major upper-triangle order, one uniform draw each
        rng = np.random.default_rng(7)
        draws = rng.random(45)
        pairs = list(combinations(range(10), 2))
        want = {frozenset(p) for p, x in zip(pairs, draws) if x < 0.5}
        assert oracles.edge_set(random_graph(10, 0.5, 7)) == want

    def test_nested_in_p(self):
        for seed in range(20):
            lo = oracles.edge_set(random_graph(12, 0.2, trial_rng(seed, 0)))
            hi = oracles.edge_set(random_graph(12, 0.6, trial_rng(seed, 0)))
            assert lo <= hi


class TestDiameter2Fraction:
    def test_complete(self):
        r = diameter2_fraction(4, 1.0, 25, 0)
        assert r.rate == 1.0 and r.counts == {"diameter_le_2": 25, "other": 0}

    def test_sparse_regression_baseline(self):
        # frozen: at p = 0.05 ten vertices are essentially never within two steps
        r = diameter2_fraction(10, 0.05, 1000, 2023)
        assert r.counts == {"diameter_le_2": 0, "other": 1000}

    def test_tallies_sum(self):
        r = diameter2_fraction(8, 0.4, 200, 5)
        assert sum(r.counts.values()) == r.trials == 200
        assert r.rate == r.counts["diameter_le_2"] / 200

    def test_reproducible(self):
        assert diameter2_fraction(12, 0.4, 100, 9) == diameter2_fraction(12, 0.4, 100, 9)

    def test_monotone_in_p(self):
        rates = [diameter2_fraction(12, p, 300, 11).rate for p in (0.2, 0.3, 0.4, 0.5, 0.6, 0.8)]
        assert rates == sorted(rates)

    def test_agrees_with_oracle(self):
        hits = sum(oracles.diameter(random_graph(9, 0.45, trial_rng(4, k))) <= 2 for k in range(150))
        assert diameter2_fraction(9, 0.45, 150, 4).counts["diameter_le_2"] == hits

    def test_zero_trials(self):
        with pytest.raises(PreconditionError):
            diameter2_fraction(5, 0.5, 0, 0)


class TestBands:
    @pytest.mark.parametrize("d, b", [(1, "1"), (2, "2"), (3, "3"), (4, "ge4"), (7, "ge4"), (float("inf"), "inf")])
    def test_band(self, d, b):
        assert band(d) == b

    def test_band_zero(self):
        with pytest.raises(PreconditionError):
            band(0)

    def test_c5(self, c5):
        assert DiameterClassPair.of(c5).key() == "(2,2)"

    def test_empty3(self):
        assert DiameterClassPair.of(named.empty_graph(3)).key() == "(inf,1)"

    def test_complement_of_p5(self, p5):
        pair = DiameterClassPair.of(complement(p5))
        assert pair.key() == "(2,ge4)" and pair.allowed

    def test_ten_allowed_cells(self):
        assert len(ALLOWED_CELLS) == 10


class TestCensus:
    def test_exhaustive_small(self):
        r = complement_diameter_census(5)
        assert r.details["forbidden"] == [] and r.rate == 1.0
        assert r.trials == sum(r.counts.values()) == 2 + 4 + 11 + 34

    def test_labeled_enumeration_gives_same_verdicts(self):
        # isomorphism-reduced census and the raw bitmask enumeration agree on occupied cells
        for n in range(2, 7):
            reduced = {DiameterClassPair.of(g).key() for g in corpus.graphs(n)}
            labeled = {DiameterClassPair.of(g).key() for g in corpus.labeled_graphs(n)}
            assert reduced == labeled

    def test_pairs_agree_with_oracle(self):
        for n in range(2, 7):
            for g in corpus.graphs(n):
                pair = DiameterClassPair.of(g)
                assert pair.class_g == band(oracles.diameter(g))
                assert pair.class_gbar == band(oracles.diameter(complement(g)))

    def test_sampled(self):
        r = complement_diameter_census(9, mode="sampled", trials=300, seed=1)
        assert r.trials == 300 and r.details["forbidden"] == []
        assert r == complement_diameter_census(9, mode="sampled", trials=300, seed=1)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            complement_diameter_census(10)

    def test_bad_mode(self):
        with pytest.raises(PreconditionError):
            complement_diameter_census(4, mode="bogus")

    def test_n_max_too_small(self):
        with pytest.raises(PreconditionError):
            complement_diameter_census(1)


class TestSabidussi:
    def test_named(self, c5):
        assert not sabidussi_violation(named.complete_graph(5))
        assert not sabidussi_violation(c5)

    def test_condition_not_met_is_not_a_violation(self, p5):
        assert not sabidussi_violation(p5)

    def test_scan(self):
        r = sabidussi_scan(9, 200, 3)
        assert r.trials == 200 and r.counts["violations"] == 0
        assert r.details["draws"] >= 200

    def test_exhaustive_small(self):
        for n in range(2, 8):
            for g in corpus.graphs(n):
                assert not sabidussi_violation(g)

    def test_bad_n(self):
        with pytest.raises(PreconditionError):
            sabidussi_scan(1, 10, 0)


class TestCsv:
    def test_rows(self):
        results = [diameter2_fraction(6, p, 20, 0) for p in (0.3, 0.7)]
        rows = list(csv.reader(io.StringIO(write_csv(results))))
        assert rows[0] == ["n", "p", "seed", "trials", "rate", "count_diameter_le_2", "count_other"]
        assert len(rows) == 3 and rows[1][:2] == ["6", "0.3"]

    def test_to_dict_roundtrip_keys(self):
        d = diameter2_fraction(6, 0.5, 10, 0).to_dict()
        assert list(d) == ["parameters", "counts", "rate", "seed", "trials", "details"]
