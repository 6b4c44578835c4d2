"""Orientation completions of a symmetric base graph.

A completion of a symmetric base R adds exactly one oriented arc per
non-adjacent vertex pair, so that (1) the base is contained, (2) every
pair of distinct vertices is related in at least one direction, and
(3) both directions occur only on base edges. Completions are indexed
by one orientation bit per non-edge pair, in canonical sorted pair
order, so the family (of size 2^|pairs|) is enumerable and sampleable
without being materialized.

``enumerate_orientations`` is the sibling family that picks one
direction per base edge instead (no symmetric arcs survive).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import ArityError, Digraph, UGraph

CLAUSE_BASE_CONTAINED = "base-contained"
CLAUSE_TOTALITY = "totality"
CLAUSE_SYMMETRY_ONLY_ON_BASE = "symmetry-only-on-base"


@dataclass(frozen=True)
class NonEdgeSet:
    """The sorted unordered pairs of distinct vertices not adjacent in the base."""

    base: UGraph
    pairs: tuple[tuple[int, int], ...]

    @property
    def count(self) -> int:
        """Size of the completion family: 2 ** len(pairs)."""
        return 1 << len(self.pairs)


@dataclass(frozen=True)
class Completion:
    """One completion: base, orientation bits, and the realized relation."""

    base: UGraph
    bits: tuple[bool, ...]
    realized: Digraph


def non_edge_pairs(base: UGraph) -> NonEdgeSet:
    """All unordered non-adjacent pairs of the base, lexicographically sorted."""
    pairs = tuple(
        (a, b)
        for a in range(base.n)
        for b in range(a + 1, base.n)
        if (a, b) not in base.edges
    )
    return NonEdgeSet(base, pairs)


def build_completion(base: UGraph, bits) -> Completion:
    """Realize the completion selected by one orientation bit per non-edge pair.

    bit False orients (min, max); True orients (max, min).
    """
    bits = tuple(bool(b) for b in bits)
    pairs = non_edge_pairs(base).pairs
    if len(bits) != len(pairs):
        raise ArityError(f"need {len(pairs)} orientation bits, got {len(bits)}")
    edges = set(base.edges)
    for (a, b), bit in zip(pairs, bits):
        edges.add((b, a) if bit else (a, b))
    realized = Digraph(base.n, frozenset(edges))
    violations = completion_violations(base, realized)
    assert not violations, f"construction violated {violations}"
    return Completion(base, bits, realized)


def completion_violations(base: UGraph, s: Digraph) -> list[str]:
    """Which completion clauses s breaks, checked over all ordered pairs."""
    if s.n != base.n:
        raise ArityError(f"size mismatch: base n={base.n}, candidate n={s.n}")
    out = []
    if not base.edges <= s.edges:
        out.append(CLAUSE_BASE_CONTAINED)
    if any(
        (a, b) not in s.edges and (b, a) not in s.edges
        for a in range(s.n)
        for b in range(a + 1, s.n)
    ):
        out.append(CLAUSE_TOTALITY)
    if any(
        (b, a) in s.edges and (a, b) not in base.edges
        for a, b in s.edges
    ):
        out.append(CLAUSE_SYMMETRY_ONLY_ON_BASE)
    return out


def is_completion(base: UGraph, s: Digraph) -> bool:
    return not completion_violations(base, s)


def completion_from_index(base: UGraph, index: int) -> Completion:
    """The completion whose bits spell index in binary, lowest pair first."""
    pairs = non_edge_pairs(base).pairs
    bits = tuple(bool((index >> i) & 1) for i in range(len(pairs)))
    return build_completion(base, bits)


def enumerate_completions(base: UGraph):
    """Yield all 2^|pairs| completions in index order. Exponential; small bases only."""
    for index in range(non_edge_pairs(base).count):
        yield completion_from_index(base, index)


def sample_distinct_completions(base: UGraph, count: int, seed: int) -> list[Completion]:
    """Uniformly sample distinct completions without enumerating the family."""
    family = non_edge_pairs(base).count
    if count > family:
        raise ArityError(f"requested {count} distinct completions, family has {family}")
    rng = random.Random(seed)
    if family <= 1 << 20:
        indices = rng.sample(range(family), count)
    else:
        chosen = set()
        while len(chosen) < count:
            chosen.add(rng.getrandbits(len(non_edge_pairs(base).pairs)))
        indices = sorted(chosen)
    return [completion_from_index(base, i) for i in indices]


def orientation_count(base: UGraph) -> int:
    return 1 << len(base.undirected_edges())


def orientation_from_index(base: UGraph, index: int) -> Digraph:
    """One direction per base edge; bit i reverses the i-th sorted edge."""
    pairs = base.undirected_edges()
    edges = []
    for i, (a, b) in enumerate(pairs):
        edges.append((b, a) if (index >> i) & 1 else (a, b))
    return Digraph(base.n, frozenset(edges))


def enumerate_orientations(base: UGraph):
    """Yield all 2^|edges| orientations of the base, in index order."""
    for index in range(orientation_count(base)):
        yield orientation_from_index(base, index)


def sample_distinct_orientations(base: UGraph, count: int, seed: int) -> list[Digraph]:
    total = orientation_count(base)
    if count > total:
        raise ArityError(f"requested {count} distinct orientations, family has {total}")
    rng = random.Random(seed)
    nbits = len(base.undirected_edges())
    if total <= 1 << 20:
        indices = rng.sample(range(total), count)
    else:
        chosen = set()
        while len(chosen) < count:
            chosen.add(rng.getrandbits(nbits))
        indices = sorted(chosen)
    return [orientation_from_index(base, i) for i in indices]
