"""Structured graph families and their analytic generalized-distance spectra.

The generators use a canonical labeling (clique / first part at the low
indices) so positional partitions line up with the block structure the
closed forms assume. Every closed form is meant to be cross-checked against
the numeric solver: formulas carry a "verified" or "claimed" status, and the
numeric spectrum is always the ground truth.

The one "claimed" case: the star spread at small positive alpha. The closed
form picks the quotient root as the smallest eigenvalue, but the co-neighbor
eigenvalue alpha*(2n-1)-2 drops below that root for small alpha (try n=4,
alpha=0.1), so the formula value is reported next to the numeric spread
instead of being trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigen import spectral_spread, sym_eigen
from .graphs import Graph, distance_profile
from .matrices import generalized_distance_matrix


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance, e.g. kind="kbip", params=(2, 3)."""

    kind: str
    params: tuple[int, ...]


_ARITY = {"complete": 1, "kbip": 2, "split": 2, "path": 1, "cycle": 1, "star": 1}


def parse_family(text: str) -> FamilySpec:
    """Parse CLI strings like "complete:4", "kbip:2,3", "split:2,5"."""
    kind, sep, rest = text.partition(":")
    kind = kind.strip()
    if not sep or kind not in _ARITY:
        raise ValueError(f"unknown family spec {text!r}")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise ValueError(f"non-integer parameter in family spec {text!r}") from None
    if len(params) != _ARITY[kind]:
        raise ValueError(
            f"family {kind!r} takes {_ARITY[kind]} parameter(s), got {len(params)}"
        )
    spec = FamilySpec(kind=kind, params=params)
    generate(spec)  # validate parameter ranges eagerly
    return spec


def generate(spec: FamilySpec) -> Graph:
    """Build the named graph with canonical vertex labeling."""
    kind, p = spec.kind, spec.params
    if kind == "complete":
        (n,) = p
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "kbip":
        r, s = p
        if r < 1 or s < 1:
            raise ValueError("complete bipartite graph needs r, s >= 1")
        return Graph.from_edges(r + s, [(u, r + v) for u in range(r) for v in range(s)])
    if kind == "star":
        (n,) = p
        if n < 2:
            raise ValueError("star needs n >= 2")
        return generate(FamilySpec("kbip", (1, n - 1)))
    if kind == "split":
        t, n = p
        if not 1 <= t <= n - 1:
            raise ValueError("complete split graph needs 1 <= t <= n-1")
        edges = [(u, v) for u in range(t) for v in range(u + 1, t)]
        edges += [(u, v) for u in range(t) for v in range(t, n)]
        return Graph.from_edges(n, edges)
    if kind == "path":
        (n,) = p
        if n < 1:
            raise ValueError("path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = p
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    raise ValueError(f"unknown family kind {kind!r}")


@dataclass
class AnalyticSpectrum:
    """Closed-form eigenvalues as (value, multiplicity) pairs."""

    entries: list[tuple[float, int]]

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> np.ndarray:
        """Expand to a descending eigenvalue vector."""
        out: list[float] = []
        for val, mult in self.entries:
            out.extend([val] * mult)
        return np.array(sorted(out, reverse=True))


def _entries(pairs: list[tuple[float, int]]) -> AnalyticSpectrum:
    kept = [(float(v), int(m)) for v, m in pairs if m > 0]
    kept.sort(key=lambda e: -e[0])
    return AnalyticSpectrum(entries=kept)


def spectrum_complete(n: int, alpha: float) -> AnalyticSpectrum:
    """{n-1 once, n*alpha-1 with multiplicity n-1}."""
    if n < 1:
        raise ValueError("n >= 1 required")
    if n == 1:
        return _entries([(0.0, 1)])
    return _entries([(n - 1.0, 1), (n * alpha - 1.0, n - 1)])


def spectrum_complete_bipartite(r: int, s: int, alpha: float) -> AnalyticSpectrum:
    """Co-neighbor eigenvalues of both parts plus the two quotient roots."""
    if r < 1 or s < 1:
        raise ValueError("r, s >= 1 required")
    disc = (r * r + s * s) * (alpha - 2.0) ** 2 + 2.0 * r * s * (alpha * alpha - 2.0)
    root = math.sqrt(max(disc, 0.0))
    base = alpha * (s + r) + 2.0 * (s + r) - 4.0
    return _entries(
        [
            (alpha * (2 * r + s) - 2.0, r - 1),
            (alpha * (2 * s + r) - 2.0, s - 1),
            ((base + root) / 2.0, 1),
            ((base - root) / 2.0, 1),
        ]
    )


def spectrum_complete_split(t: int, n: int, alpha: float) -> AnalyticSpectrum:
    """Clique and independent-set co-neighbor eigenvalues plus quotient roots."""
    if not 1 <= t <= n - 1:
        raise ValueError("1 <= t <= n-1 required")
    theta = (
        (5.0 - 4.0 * alpha) * t * t
        + (6.0 * alpha * n - 8.0 * n - 4.0 * alpha + 6.0) * t
        + n * n * (alpha - 2.0) ** 2
        + 2.0 * n * alpha
        - 4.0 * n
        + 1.0
    )
    root = math.sqrt(max(theta, 0.0))
    base = 2.0 * n - t + alpha * n - 3.0
    return _entries(
        [
            (alpha * n - 1.0, t - 1),
            (alpha * (2 * n - t) - 2.0, n - t - 1),
            ((base + root) / 2.0, 1),
            ((base - root) / 2.0, 1),
        ]
    )


def co_neighbor_eigenvalue(
    g: Graph, subset: tuple[int, ...], alpha: float
) -> tuple[float, int]:
    """Eigenvalue contributed by a set of vertices sharing a neighborhood.

    For an independent set with identical open neighborhoods the value is
    alpha*(Tr+2)-2; for a clique with identical closed neighborhoods it is
    alpha*(Tr+1)-1. Either way the multiplicity is at least |S|-1.
    Raises ValueError when the subset is not of either shape or transmissions
    differ across it.
    """
    vs = sorted(set(subset))
    if len(vs) < 2:
        raise ValueError("co-neighbor set needs at least 2 vertices")
    pairs = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]]
    all_edges = all(g.has_edge(u, v) for u, v in pairs)
    no_edges = not any(g.has_edge(u, v) for u, v in pairs)
    if not (all_edges or no_edges):
        raise ValueError("set is neither independent nor a clique")
    inside = set(vs)
    nbhds = [set(g.adjacency[v]) - inside for v in vs]
    if any(nb != nbhds[0] for nb in nbhds[1:]):
        raise ValueError("vertices do not share a neighborhood outside the set")
    profile = distance_profile(g)
    trs = {int(profile.tr[v]) for v in vs}
    if len(trs) != 1:
        raise ValueError("transmissions differ across the set")
    tr = trs.pop()
    if no_edges:
        return alpha * (tr + 2.0) - 2.0, len(vs) - 1
    return alpha * (tr + 1.0) - 1.0, len(vs) - 1


def sigma_complete_bipartite(a: int, n: int, alpha: float) -> float:
    """Discriminant of the two quotient eigenvalues of K_{a,n-a}."""
    return (
        n * n * alpha * alpha
        - (n * n + 2 * a * a - 2 * a * n) * 4.0 * alpha
        + 4.0 * (n * n - 3.0 * a * n + 3.0 * a * a)
    )


@dataclass
class SpreadFormula:
    """A closed-form spread value with its trust status and the numeric truth."""

    value: float
    status: str  # "verified" | "claimed"
    numeric: float


def numeric_spread(g: Graph, alpha: float) -> float:
    """Spread of the generalized distance matrix, straight from the solver."""
    m = generalized_distance_matrix(distance_profile(g), alpha)
    return spectral_spread(sym_eigen(m, vectors=False))


def spread_complete_bipartite(a: int, n: int, alpha: float) -> SpreadFormula:
    """Closed-form spread of K_{a,n-a} for 1 <= a <= n/2.

    Exact for a >= 2 (any alpha) and for the star at alpha = 0. The star
    formula at alpha > 0 is returned with status "claimed": it misses the
    co-neighbor eigenvalue when that one is the actual minimum.
    """
    if not 1 <= a <= n - a:
        raise ValueError("need 1 <= a <= n/2")
    numeric = numeric_spread(generate(FamilySpec("kbip", (a, n - a))), alpha)
    if a == 1:
        if alpha == 0.0:
            value = n + math.sqrt(n * n - 3.0 * n + 3.0)
            status = "verified"
        else:
            value = math.sqrt(max(sigma_complete_bipartite(1, n, alpha), 0.0))
            status = "claimed"
    else:
        value = (
            n * (2.0 - alpha)
            - 2.0 * a * alpha
            + math.sqrt(max(sigma_complete_bipartite(a, n, alpha), 0.0))
        ) / 2.0
        status = "verified"
    return SpreadFormula(value=value, status=status, numeric=numeric)


def matches_numeric(analytic: AnalyticSpectrum, values: np.ndarray, tol: float = 1e-8) -> bool:
    """Multiset comparison of a closed-form spectrum against solver output."""
    a = analytic.values()
    b = np.sort(np.asarray(values))[::-1]
    if len(a) != len(b):
        return False
    return bool(np.max(np.abs(a - b)) <= tol)
