"""Randomized and exhaustive sweeps over diameters of graphs and complements.

Randomness comes from numpy's PCG64 generator. Trial ``k`` of a sweep with
master seed ``s`` draws from ``SeedSequence(s, spawn_key=(k,))``, so every
trial is reproducible on its own and trials can be evaluated in any order.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .corpus import MAX_CORPUS_N, graphs
from .errors import CapExceededError, PreconditionError
from .graph import INF, Graph, complement, degree_profile, diameter, has_diameter_at_most_two

# bands of the diameter of a graph and of its complement
BANDS = ("1", "2", "3", "ge4", "inf")

ALLOWED_CELLS = frozenset(
    {
        ("1", "inf"),
        ("2", "2"),
        ("2", "3"),
        ("2", "ge4"),
        ("2", "inf"),
        ("3", "2"),
        ("3", "3"),
        ("ge4", "2"),
        ("inf", "1"),
        ("inf", "2"),
    }
)


@dataclass(frozen=True)
class ExperimentResult:
    parameters: dict
    counts: dict
    rate: float
    seed: int | None
    trials: int
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "parameters": self.parameters,
            "counts": self.counts,
            "rate": self.rate,
            "seed": self.seed,
            "trials": self.trials,
            "details": self.details,
        }


def write_csv(results: Iterable[ExperimentResult], out=None) -> str:
    """One row per parameter point; count columns are the union over results."""
    results = list(results)
    param_keys = sorted({k for r in results for k in r.parameters})
    count_keys = sorted({k for r in results for k in r.counts})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([*param_keys, "seed", "trials", "rate", *(f"count_{k}" for k in count_keys)])
    for r in results:
        writer.writerow(
            [r.parameters.get(k, "") for k in param_keys]
            + [r.seed if r.seed is not None else "", r.trials, repr(r.rate)]
            + [r.counts.get(k, 0) for k in count_keys]
        )
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))


def random_graph(n: int, p: float, seed: int | np.random.Generator) -> Graph:
    """Binomial random graph: each pair is an edge independently with probability ``p``.

    Pair ``(i, j)`` is present iff its uniform draw is below ``p``, so two
    calls with the same seed and ``p1 <= p2`` give nested edge sets.
    """
    if not 0.0 <= p <= 1.0:
        raise PreconditionError("p must lie in [0, 1]")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph.from_edge_indices(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def diameter2_fraction(n: int, p: float, trials: int, seed: int) -> ExperimentResult:
    """Share of binomial random graphs whose diameter is at most two."""
    if trials < 1:
        raise PreconditionError("trials must be >= 1")
    hits = sum(has_diameter_at_most_two(random_graph(n, p, trial_rng(seed, k))) for k in range(trials))
    return ExperimentResult(
        parameters={"n": n, "p": p},
        counts={"diameter_le_2": hits, "other": trials - hits},
        rate=hits / trials,
        seed=seed,
        trials=trials,
    )


def band(d: float) -> str:
    if d == INF:
        return "inf"
    if d >= 4:
        return "ge4"
    if d < 1:
        raise PreconditionError("diameter bands start at 1")
    return str(int(d))


@dataclass(frozen=True)
class DiameterClassPair:
    class_g: str
    class_gbar: str

    @classmethod
    def of(cls, g: Graph) -> DiameterClassPair:
        return cls(band(diameter(g)), band(diameter(complement(g))))

    @property
    def allowed(self) -> bool:
        return (self.class_g, self.class_gbar) in ALLOWED_CELLS

    def key(self) -> str:
        return f"({self.class_g},{self.class_gbar})"


def complement_diameter_census(
    n_max: int,
    mode: str = "exhaustive",
    trials: int = 1000,
    seed: int = 0,
    p: float = 0.5,
) -> ExperimentResult:
    """Tally (band of d(G), band of d(complement)) over graphs on 2..n_max vertices.

    Exhaustive mode walks one graph per isomorphism class (``n_max <= 9``);
    sampled mode draws ``trials`` binomial random graphs with a uniformly
    chosen order in ``2..n_max``. ``rate`` is the share landing in allowed
    cells and must be 1.
    """
    if n_max < 2:
        raise PreconditionError("n_max must be >= 2")
    if mode == "exhaustive":
        if n_max > MAX_CORPUS_N:
            raise CapExceededError(f"exhaustive census supports n_max <= {MAX_CORPUS_N}")
        population = (g for n in range(2, n_max + 1) for g in graphs(n))
        run_seed = None
    elif mode == "sampled":
        run_seed = seed

        def draw():
            for k in range(trials):
                rng = trial_rng(seed, k)
                yield random_graph(int(rng.integers(2, n_max + 1)), p, rng)

        population = draw()
    else:
        raise PreconditionError(f"unknown census mode {mode!r}")

    tally: Counter[str] = Counter()
    forbidden: list[str] = []
    total = 0
    for g in population:
        pair = DiameterClassPair.of(g)
        tally[pair.key()] += 1
        total += 1
        if not pair.allowed:
            forbidden.append(pair.key())
    witnessed = sorted(k for k in tally if k not in forbidden)
    return ExperimentResult(
        parameters={"n_max": n_max, "mode": mode},
        counts=dict(sorted(tally.items())),
        rate=(total - len(forbidden)) / total,
        seed=run_seed,
        trials=total,
        details={"forbidden": sorted(set(forbidden)), "witnessed_cells": witnessed},
    )


def sabidussi_scan(
    n: int,
    trials: int,
    seed: int,
    p_range: tuple[float, float] = (0.5, 0.9),
    max_draws: int | None = None,
) -> ExperimentResult:
    """Check that minimum degree >= (n-1)/2 forces diameter <= 2 on random graphs.

    Draws binomial random graphs on ``n`` vertices, with the edge
    probability of each draw uniform in ``p_range``, until ``trials``
    graphs meet the degree condition. ``counts["violations"]`` is the
    number of those with diameter above two.
    """
    if n < 2:
        raise PreconditionError("n must be >= 2")
    max_draws = max_draws if max_draws is not None else 200 * trials
    kept = violations = draws = 0
    while kept < trials and draws < max_draws:
        rng = trial_rng(seed, draws)
        draws += 1
        g = random_graph(n, float(rng.uniform(*p_range)), rng)
        if 2 * degree_profile(g).min_degree < n - 1:
            continue
        kept += 1
        if not has_diameter_at_most_two(g):
            violations += 1
    return ExperimentResult(
        parameters={"n": n, "p_low": p_range[0], "p_high": p_range[1]},
        counts={"violations": violations, "ok": kept - violations},
        rate=(kept - violations) / kept if kept else float("nan"),
        seed=seed,
        trials=kept,
        details={"draws": draws},
    )



def sabidussi_violation(g: Graph) -> bool:
    """True iff ``g`` meets the minimum-degree condition yet has diameter above two."""
    if 2 * degree_profile(g).min_degree < g.n - 1:
        return False
    return not has_diameter_at_most_two(g) and g.n > 1
