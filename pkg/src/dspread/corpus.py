"""Corpus sweeps: stress bounds over many graphs, probe the bipartite
minimum-spread conjecture, and generate reproducible random graphs.

Summaries merge as a commutative monoid, so a sweep may be split across
workers and recombined; the shipped results are computed sequentially for
bit-exact reproducibility.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .bounds import CLAIMED, DEFAULT_TOL, EQ_TOL, PROVEN, EvalContext, evaluate_all
from .eigen import spectral_spread, sym_eigen
from .families import FamilySpec, generate
from .graphs import (
    Graph,
    distance_profile,
    encode_graph6,
    is_bipartite,
    is_connected,
    parse_graph6,
)
from .matrices import generalized_distance_matrix

ALPHA_GRID = (0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0)


@dataclass
class BoundTally:
    applicable: int = 0
    holds: int = 0
    equalities: int = 0
    worst_gap: Optional[float] = None
    worst_key: Optional[str] = None
    _worst_margin: Optional[float] = None

    def update(self, report, key: str) -> None:
        self.applicable += 1
        if report.holds:
            self.holds += 1
        if report.equality:
            self.equalities += 1
        # margin to violation: gap for lower bounds, -gap for upper bounds
        margin = report.gap if report.direction == "lower" else -report.gap
        if self._worst_margin is None or margin < self._worst_margin:
            self._worst_margin = margin
            self.worst_gap = report.gap
            self.worst_key = key

    def merge(self, other: "BoundTally") -> None:
        self.applicable += other.applicable
        self.holds += other.holds
        self.equalities += other.equalities
        if other._worst_margin is not None and (
            self._worst_margin is None or other._worst_margin < self._worst_margin
        ):
            self._worst_margin = other._worst_margin
            self.worst_gap = other.worst_gap
            self.worst_key = other.worst_key


@dataclass
class CorpusSummary:
    graphs_seen: int = 0
    skipped_disconnected: int = 0
    tallies: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)

    def merge(self, other: "CorpusSummary") -> "CorpusSummary":
        self.graphs_seen += other.graphs_seen
        self.skipped_disconnected += other.skipped_disconnected
        for bid, tally in other.tallies.items():
            if bid in self.tallies:
                self.tallies[bid].merge(tally)
            else:
                self.tallies[bid] = tally
        self.violations.extend(other.violations)
        self.discrepancies.extend(other.discrepancies)
        return self

    def to_json(self) -> dict:
        return {
            "graphs_seen": self.graphs_seen,
            "skipped_disconnected": self.skipped_disconnected,
            "bounds": {
                bid: {
                    "applicable": t.applicable,
                    "holds": t.holds,
                    "equalities": t.equalities,
                    "worst_gap": t.worst_gap,
                    "worst_key": t.worst_key,
                }
                for bid, t in sorted(self.tallies.items())
            },
            "violations": sorted(
                self.violations, key=lambda v: (v["graph6"], v["bound_id"], v["alpha"])
            ),
            "discrepancies": sorted(
                self.discrepancies, key=lambda v: (v["graph6"], v["bound_id"], v["alpha"])
            ),
        }


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[str]:
    """Yield graph6 payload lines, skipping blanks and '#' comments."""
    for line in lines:
        s = line.strip()
        if s and not s.startswith("#"):
            yield s


def load_corpus(path) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return [parse_graph6(s) for s in iter_graph6_lines(fh)]


def sweep(
    graphs: Iterable[Graph],
    alphas: Sequence[float] = ALPHA_GRID,
    tol: float = DEFAULT_TOL,
    eq_tol: float = EQ_TOL,
) -> CorpusSummary:
    """Evaluate the whole bound registry on every (graph, alpha).

    Disconnected graphs are counted and skipped. Violations list failed
    proven bounds; claimed-formula mismatches land in discrepancies.
    """
    summary = CorpusSummary()
    for g in graphs:
        if not is_connected(g):
            summary.skipped_disconnected += 1
            continue
        summary.graphs_seen += 1
        key = encode_graph6(g)
        ctx = EvalContext(g)
        for alpha in alphas:
            for report in evaluate_all(g, alpha, tol=tol, eq_tol=eq_tol, ctx=ctx):
                if not report.applicable:
                    continue
                tally = summary.tallies.setdefault(report.bound_id, BoundTally())
                tally.update(report, f"{key}@{alpha:g}")
                if report.status == PROVEN and not report.holds:
                    summary.violations.append(
                        {
                            "graph6": key,
                            "bound_id": report.bound_id,
                            "alpha": alpha,
                            "gap": report.gap,
                        }
                    )
                elif report.status == CLAIMED:
                    missed = (not report.equality) if report.exact_claim else (not report.holds)
                    if missed:
                        summary.discrepancies.append(
                            {
                                "graph6": key,
                                "bound_id": report.bound_id,
                                "alpha": alpha,
                                "claimed": report.bound_value,
                                "actual": report.actual_value,
                                "gap": report.gap,
                            }
                        )
    return summary


@dataclass
class ConjectureResult:
    """Minimum-spread scan of an exhaustive bipartite corpus of one order."""

    n: int
    alpha: float
    graphs_seen: int
    candidate_min_graph: str
    candidate_min_spread: float
    conjectured_graph_spread: float
    confirmed: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "graphs_seen": self.graphs_seen,
            "candidate_min_graph": self.candidate_min_graph,
            "candidate_min_spread": self.candidate_min_spread,
            "conjectured_graph_spread": self.conjectured_graph_spread,
            "confirmed": self.confirmed,
        }


def _is_balanced_complete_bipartite(g: Graph) -> bool:
    parts = is_bipartite(g)
    if parts is None:
        return False
    sizes = sorted((len(parts[0]), len(parts[1])))
    if sizes != [g.n // 2, g.n - g.n // 2]:
        return False
    return g.edge_count == sizes[0] * sizes[1]


def check_problem_39(
    graphs: Iterable[Graph], n: int, alpha: float, eq_tol: float = EQ_TOL
) -> ConjectureResult:
    """Does the balanced complete bipartite graph minimize the spread?

    The corpus must be the complete set of connected bipartite graphs of
    order n; missing the conjectured graph raises ValueError. Ties in the
    minimum are broken by graph6 string so reruns are bit-identical.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    best: Optional[tuple[float, str]] = None
    conjectured_spread: Optional[float] = None
    count = 0
    for g in graphs:
        if g.n != n:
            raise ValueError(f"corpus graph of order {g.n} in an order-{n} scan")
        if not is_connected(g) or is_bipartite(g) is None:
            raise ValueError("corpus contains a non-(connected bipartite) graph")
        count += 1
        m = generalized_distance_matrix(distance_profile(g), alpha)
        spread = spectral_spread(sym_eigen(m, vectors=False))
        key = encode_graph6(g)
        if best is None or (spread, key) < best:
            best = (spread, key)
        if _is_balanced_complete_bipartite(g):
            conjectured_spread = spread
    if count == 0:
        raise ValueError("empty corpus")
    if conjectured_spread is None:
        raise ValueError(
            "incomplete corpus: balanced complete bipartite graph not present"
        )
    return ConjectureResult(
        n=n,
        alpha=alpha,
        graphs_seen=count,
        candidate_min_graph=best[1],
        candidate_min_spread=best[0],
        conjectured_graph_spread=conjectured_spread,
        confirmed=conjectured_spread <= best[0] + eq_tol,
    )


def check_theorem_36_ordering(n: int, alpha: float, tol: float = DEFAULT_TOL) -> bool:
    """Spreads of complete bipartite graphs K_{a,n-a} computed numerically:
    non-increasing in a on 1..n//2, with the star the strict maximum."""
    if n < 4:
        raise ValueError("need n >= 4")
    spreads = []
    for a in range(1, n // 2 + 1):
        g = generate(FamilySpec("kbip", (a, n - a)))
        m = generalized_distance_matrix(distance_profile(g), alpha)
        spreads.append(spectral_spread(sym_eigen(m, vectors=False)))
    ordered = all(spreads[i] >= spreads[i + 1] - tol for i in range(len(spreads) - 1))
    star_max = all(spreads[0] >= s - tol for s in spreads[1:])
    return ordered and star_max


def random_connected_graph(
    n: int, edge_prob: float, seed: int, max_tries: int = 200
) -> Graph:
    """Erdos-Renyi sample conditioned on connectivity.

    Uses the stdlib Mersenne Twister, which is stable across platforms and
    Python versions for a fixed seed, so corpora regenerate identically.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not 0.0 < edge_prob <= 1.0:
        raise ValueError("edge_prob must lie in (0, 1]")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < edge_prob
        ]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    raise ValueError(
        f"no connected sample in {max_tries} tries (n={n}, p={edge_prob})"
    )
