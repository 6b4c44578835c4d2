"""Homomorphism enumeration between finite relational structures.

A homomorphism source -> target is a total vertex map f with
(a, b) in source  =>  (f(a), f(b)) in target. Non-edges impose nothing.

The engine runs backtracking over source vertices in descending-degree
order (ties broken by lower index), keeps candidate sets as target-vertex
bitmasks, and forward-checks after each assignment: assigning f(u) = t
prunes the candidates of every unassigned neighbor of u against t's
out/in neighborhoods. Search discovery order is deterministic; returned
maps are sorted lexicographically by assignment vector. When a limit
truncates the enumeration, the truncated set is the first maps found in
engine order, then sorted for presentation.

``naive_homs`` is the independent slow path kept for certification; it
shares no search code with the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import ArityError, Digraph, GraphError, OutOfRangeError, VertexMap


@dataclass(frozen=True)
class HomQuery:
    """One enumeration request: source, target, pinned assignments, result cap."""

    source: Digraph
    target: Digraph
    pins: tuple[tuple[int, int], ...] = ()
    limit: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "pins", tuple(sorted(dict(self.pins).items())))
        for u, t in self.pins:
            if not 0 <= u < self.source.n:
                raise OutOfRangeError(f"pin key {u} out of range for source n={self.source.n}")
            if not 0 <= t < self.target.n:
                raise OutOfRangeError(f"pin value {t} out of range for target n={self.target.n}")
        if self.limit is not None and self.limit < 0:
            raise GraphError(f"limit must be non-negative, got {self.limit}")


@dataclass(frozen=True)
class RigidityCertificate:
    """Verdict of an endomorphism search, with a witness when not rigid."""

    rigid: bool
    counterexample: VertexMap | None
    maps_examined: int

    @property
    def verdict(self) -> str:
        return "rigid" if self.rigid else "not-rigid"

    def to_json_obj(self) -> dict:
        return {
            "verdict": self.verdict,
            "counterexample": None if self.counterexample is None else self.counterexample.to_json_obj(),
            "maps_examined": self.maps_examined,
        }


def _search(source: Digraph, target: Digraph, pins: dict[int, int],
            limit: int | None, counter: list[int] | None = None):
    """Core backtracker. Yields image tuples (indexed by source vertex) in
    deterministic discovery order."""
    ns, nt = source.n, target.n
    if limit == 0:
        return
    if ns == 0:
        yield ()
        return
    full = (1 << nt) - 1

    s_out, s_in = source.out_bits, source.in_bits
    t_out, t_in = target.out_bits, target.in_bits

    # Static candidate filter: a vertex with out-neighbors needs an image
    # with at least one successor, likewise for in-neighbors.
    has_succ = 0
    has_pred = 0
    for t in range(nt):
        if t_out[t]:
            has_succ |= 1 << t
        if t_in[t]:
            has_pred |= 1 << t

    dom = [full] * ns
    for u in range(ns):
        if s_out[u]:
            dom[u] &= has_succ
        if s_in[u]:
            dom[u] &= has_pred
    for u, t in pins.items():
        dom[u] &= 1 << t
    if any(d == 0 for d in dom):
        return

    order = sorted(range(ns), key=lambda u: (-source.degree(u), u))
    # Neighbor lists restricted to vertices assigned later than u.
    pos = {u: i for i, u in enumerate(order)}
    later_out = [[] for _ in range(ns)]
    later_in = [[] for _ in range(ns)]
    for a, b in source.edges:
        if pos[a] < pos[b]:
            later_out[a].append(b)
        else:
            later_in[b].append(a)

    image = [-1] * ns
    nodes = 0

    def extend(depth: int):
        nonlocal nodes
        if depth == ns:
            yield tuple(image)
            return
        u = order[depth]
        cands = dom[u]
        while cands:
            bit = cands & -cands
            cands ^= bit
            t = bit.bit_length() - 1
            nodes += 1
            image[u] = t
            trail = []
            ok = True
            for w in later_out[u]:
                old = dom[w]
                new = old & t_out[t]
                if new != old:
                    trail.append((w, old))
                    dom[w] = new
                    if new == 0:
                        ok = False
                        break
            if ok:
                for w in later_in[u]:
                    old = dom[w]
                    new = old & t_in[t]
                    if new != old:
                        trail.append((w, old))
                        dom[w] = new
                        if new == 0:
                            ok = False
                            break
            if ok:
                yield from extend(depth + 1)
            for w, old in reversed(trail):
                dom[w] = old
            image[u] = -1

    found = 0
    for img in extend(0):
        if counter is not None:
            counter[0] = nodes
        yield img
        found += 1
        if limit is not None and found >= limit:
            return
    if counter is not None:
        counter[0] = nodes


def enumerate_homs(q: HomQuery) -> list[VertexMap]:
    """All homomorphisms satisfying the query, sorted by assignment vector."""
    pins = dict(q.pins)
    domain = tuple(range(q.source.n))
    images = sorted(_search(q.source, q.target, pins, q.limit))
    return [VertexMap(domain, img) for img in images]


def stream_hom_images(source: Digraph, target: Digraph,
                      pins: dict[int, int] | None = None, limit: int | None = None):
    """Image tuples in engine discovery order, stopping at limit. For callers
    that only need early termination, not the sorted presentation order."""
    yield from _search(source, target, pins or {}, limit)


def count_homs(source: Digraph, target: Digraph, pins: dict[int, int] | None = None,
               cap: int | None = None) -> int:
    """Number of homomorphisms, optionally capped (returns min(count, cap))."""
    n = 0
    for _ in _search(source, target, pins or {}, cap):
        n += 1
    return n


def is_homomorphism(source: Digraph, target: Digraph, mapping: dict[int, int]) -> bool:
    """Direct edge-by-edge check that mapping preserves every source edge."""
    if set(mapping) != set(range(source.n)):
        raise ArityError(f"mapping must be total on 0..{source.n - 1}, got keys {sorted(mapping)}")
    return all((mapping[a], mapping[b]) in target.edges for a, b in source.edges)


def is_rigid(g: Digraph) -> RigidityCertificate:
    """Rigid iff the only endomorphism g -> g is the identity.

    Searches with limit 2: the identity always occurs, so a second map (or a
    single non-identity map) refutes rigidity.
    """
    counter = [0]
    found = []
    for img in _search(g, g, {}, 2, counter):
        found.append(img)
        if len(found) >= 2:
            break
    identity = tuple(range(g.n))
    witness = next((img for img in found if img != identity), None)
    if witness is None:
        return RigidityCertificate(True, None, counter[0])
    return RigidityCertificate(False, VertexMap(identity, witness), counter[0])


def naive_homs(source: Digraph, target: Digraph, pins: dict[int, int] | None = None) -> list[VertexMap]:
    """Brute-force oracle: test every target.n ** source.n map. For small n only."""
    pins = pins or {}
    domain = tuple(range(source.n))
    edges = source.sorted_edges()
    out = []
    for img in product(range(target.n), repeat=source.n):
        if any(img[u] != t for u, t in pins.items()):
            continue
        if all((img[a], img[b]) in target.edges for a, b in edges):
            out.append(VertexMap(domain, img))
    return out
