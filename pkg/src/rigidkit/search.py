"""Producing rigid base graphs: known-rigid tournaments plus searched graphs.

Exhaustive mode enumerates every labeled loopless (di)graph on n vertices
below a hard size cap; random mode samples edge sets across a density
sweep. Cheap refuters (vertex swaps and folds) reject most non-rigid
graphs before the full engine runs, and every reported find is
re-certified on an independent path: the naive all-maps oracle when
n <= 6, the pruned engine otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .core import Digraph, GraphError, UGraph, make_ugraph
from .homs import is_rigid, naive_homs

EXHAUSTIVE_CAP_SYMMETRIC = 7
EXHAUSTIVE_CAP_DIRECTED = 5
NAIVE_CERTIFY_CAP = 6
DENSITY_SWEEP = (0.3, 0.4, 0.5, 0.6)


@dataclass(frozen=True)
class SearchReport:
    n: int
    symmetric: bool
    mode: str
    graphs_examined: int
    rigid_found: tuple[Digraph, ...]
    exhausted: bool
    seed: int | None = None
    budget: int | None = None

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "symmetric": self.symmetric,
            "mode": self.mode,
            "graphs_examined": self.graphs_examined,
            "rigid_found": [
                {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
                for g in self.rigid_found
            ],
            "exhausted": self.exhausted,
            "seed": self.seed,
            "budget": self.budget,
        }


def transitive_tournament(n: int) -> Digraph:
    """Edges (i, j) for all i < j. Rigid at every finite size."""
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    return Digraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def _swap_refutes(g: Digraph) -> bool:
    """True if some transposition of two vertices is an automorphism."""
    edges = g.edges
    for u in range(g.n):
        for v in range(u + 1, g.n):
            swap = {u: v, v: u}
            if all(
                (swap.get(a, a), swap.get(b, b)) in edges for a, b in edges
            ):
                return True
    return False


def _fold_refutes(g: Digraph) -> bool:
    """True if mapping some vertex u onto another vertex v (rest fixed) is an endo.

    Valid exactly when u and v are non-adjacent both ways and u's out/in
    neighborhoods are contained in v's.
    """
    out, inn = g.out_bits, g.in_bits
    for u in range(g.n):
        bu = 1 << u
        for v in range(g.n):
            if u == v:
                continue
            bv = 1 << v
            if (out[u] | inn[u]) & bv or (out[v] | inn[v]) & bu:
                continue
            if out[u] & ~out[v] == 0 and inn[u] & ~inn[v] == 0:
                return True
    return False


def _is_rigid_fast(g: Digraph) -> bool:
    if g.n >= 2 and (_fold_refutes(g) or _swap_refutes(g)):
        return False
    return is_rigid(g).rigid


def certify_rigid(g: Digraph) -> bool:
    """Independent re-check of a reported find: naive oracle below the cap."""
    if g.n <= NAIVE_CERTIFY_CAP:
        endos = naive_homs(g, g)
        return len(endos) == 1 and endos[0].is_identity()
    return is_rigid(g).rigid


def _symmetric_from_mask(n: int, mask: int, pairs) -> UGraph:
    edges = []
    for i, (a, b) in enumerate(pairs):
        if (mask >> i) & 1:
            edges.append((a, b))
    return make_ugraph(n, edges)


def _directed_from_mask(n: int, mask: int, arcs) -> Digraph:
    return Digraph(n, frozenset(arc for i, arc in enumerate(arcs) if (mask >> i) & 1))


def search_rigid(
    n: int,
    symmetric: bool,
    mode: str,
    budget: int | None = None,
    seed: int | None = None,
    stop_after: int | None = None,
) -> SearchReport:
    """Search loopless (di)graphs on n vertices for rigid ones.

    Exhaustive mode covers every labeled graph (refused beyond the size
    caps); random mode needs a budget and seed and samples edge sets at
    densities cycling through the sweep. stop_after ends either mode once
    that many rigid graphs are found.
    """
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    if mode == "exhaustive":
        cap = EXHAUSTIVE_CAP_SYMMETRIC if symmetric else EXHAUSTIVE_CAP_DIRECTED
        if n > cap:
            raise GraphError(
                f"exhaustive mode refused for n={n} "
                f"({'symmetric' if symmetric else 'directed'} cap is {cap}); use random mode"
            )
        return _search_exhaustive(n, symmetric, stop_after)
    if mode == "random":
        if budget is None or seed is None:
            raise GraphError("random mode requires budget and seed")
        return _search_random(n, symmetric, budget, seed, stop_after)
    raise GraphError(f"unknown mode {mode!r}")


def _search_exhaustive(n: int, symmetric: bool, stop_after: int | None) -> SearchReport:
    found = []
    examined = 0
    exhausted = True
    if symmetric:
        pairs = list(combinations(range(n), 2))
        space = 1 << len(pairs)
        build = lambda mask: _symmetric_from_mask(n, mask, pairs)
    else:
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
        space = 1 << len(arcs)
        build = lambda mask: _directed_from_mask(n, mask, arcs)
    for mask in range(space):
        g = build(mask)
        examined += 1
        if _is_rigid_fast(g) and certify_rigid(g):
            found.append(g)
            if stop_after is not None and len(found) >= stop_after:
                exhausted = mask == space - 1
                break
    return SearchReport(n, symmetric, "exhaustive", examined, tuple(found), exhausted)


def _search_random(n: int, symmetric: bool, budget: int, seed: int,
                   stop_after: int | None) -> SearchReport:
    rng = random.Random(seed)
    found = []
    seen = set()
    examined = 0
    if symmetric:
        slots = list(combinations(range(n), 2))
    else:
        slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    for i in range(budget):
        p = DENSITY_SWEEP[i % len(DENSITY_SWEEP)]
        chosen = [e for e in slots if rng.random() < p]
        g = make_ugraph(n, chosen) if symmetric else Digraph(n, frozenset(chosen))
        examined += 1
        if _is_rigid_fast(g) and certify_rigid(g):
            if g.edges not in seen:
                seen.add(g.edges)
                found.append(g)
            if stop_after is not None and len(found) >= stop_after:
                break
    return SearchReport(
        n, symmetric, "random", examined, tuple(found), False, seed=seed, budget=budget
    )
