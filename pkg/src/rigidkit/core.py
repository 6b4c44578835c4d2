"""Finite binary relations as digraphs: construction, induced substructures, serialization.

Vertices are always 0..n-1. Edges are ordered pairs; loops are rejected at
construction because every relation of interest here is irreflexive.
All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property


class GraphError(ValueError):
    """Base class for graph construction and IO errors."""


class OutOfRangeError(GraphError):
    """An edge endpoint or vertex reference is >= n."""


class LoopError(GraphError):
    """An edge (v, v) was supplied; relations here avoid the diagonal."""


class ParseError(GraphError):
    """Malformed edge-list text. Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ArityError(GraphError):
    """Mismatched sizes between structures that must agree."""


@dataclass(frozen=True)
class Digraph:
    """A finite binary relation: vertex count plus a set of ordered pairs."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise OutOfRangeError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise LoopError(f"loop ({u}, {v}) rejected")

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges in canonical lexicographic order; the basis of every serialization."""
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    @cached_property
    def out_bits(self) -> tuple[int, ...]:
        """Successor sets as bitmasks, indexed by vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_bits(self) -> tuple[int, ...]:
        """Predecessor sets as bitmasks, indexed by vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        """Total degree: out plus in."""
        return bin(self.out_bits[v]).count("1") + bin(self.in_bits[v]).count("1")

    def is_symmetric(self) -> bool:
        return all((v, u) in self.edges for u, v in self.edges)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.sorted_edges()]})

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -> {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class UGraph(Digraph):
    """A symmetric relation: (u, v) present iff (v, u) present."""

    def __post_init__(self):
        super().__post_init__()
        for u, v in self.edges:
            if (v, u) not in self.edges:
                raise GraphError(f"edge ({u}, {v}) lacks its reverse; UGraph must be symmetric")

    def undirected_edges(self) -> list[tuple[int, int]]:
        """One representative (min, max) per symmetric pair, sorted."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.edges})

    def to_digraph(self) -> Digraph:
        return Digraph(self.n, self.edges)


def make_digraph(n: int, edges) -> Digraph:
    """Validated digraph from any iterable of ordered pairs; duplicates collapse."""
    return Digraph(n, frozenset((int(u), int(v)) for u, v in edges))


def make_ugraph(n: int, edges) -> UGraph:
    """Undirected graph from pairs given in either or both directions."""
    closure = set()
    for u, v in edges:
        closure.add((int(u), int(v)))
        closure.add((int(v), int(u)))
    return UGraph(n, frozenset(closure))


def symmetric_closure(g: Digraph) -> UGraph:
    """Smallest symmetric relation containing g. Idempotent."""
    return make_ugraph(g.n, g.edges)


def weakly_connected(g: Digraph) -> bool:
    """Connectivity of the underlying undirected graph. Vacuous below 2 vertices."""
    if g.n <= 1:
        return True
    adj = [g.out_bits[v] | g.in_bits[v] for v in range(g.n)]
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            nxt |= adj[bit.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def induced_substructure(g: Digraph, s) -> tuple[Digraph, dict[int, int]]:
    """Relabel the subset s contiguously, keeping edges with both endpoints in s.

    Returns the induced graph on 0..|s|-1 (vertices in ascending original
    order) and the label map new -> old that inverts the relabeling.
    """
    subset = sorted(set(s))
    for v in subset:
        if not (0 <= v < g.n):
            raise OutOfRangeError(f"vertex {v} out of range for n={g.n}")
    index = {old: new for new, old in enumerate(subset)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    label_map = {new: old for new, old in enumerate(subset)}
    return Digraph(len(subset), edges), label_map


def encode(g: Digraph) -> str:
    """Edge-list text: first line "n m", then one sorted "u v" line per edge."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def decode(text: str) -> Digraph:
    """Parse edge-list text. Inverse of encode on canonical output.

    Non-canonical input (unsorted or duplicated lines) is accepted and
    canonicalized; decode(encode(g)) == g bit-exactly.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("missing header 'n m'", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'n m', got {lines[0]!r}", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"expected integers in header, got {lines[0]!r}", 1) from None
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise ParseError(f"header promises {m} edges, found {len(body)}", len(lines))
    edges = []
    for i, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected integers, got {ln!r}", i) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range in ({u}, {v}) for n={n}", i)
        if u == v:
            raise ParseError(f"loop ({u}, {v}) rejected", i)
        edges.append((u, v))
    return Digraph(n, frozenset(edges))


def from_json(text: str) -> Digraph:
    data = json.loads(text)
    return make_digraph(data["n"], data["edges"])


@dataclass(frozen=True)
class VertexMap:
    """A total map from a sorted vertex subset into a target vertex set."""

    domain: tuple[int, ...]
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.domain) != len(self.image):
            raise ArityError("domain and image lengths differ")
        if tuple(sorted(self.domain)) != tuple(self.domain):
            raise GraphError("domain must be sorted")
        if len(set(self.domain)) != len(self.domain):
            raise GraphError("domain has repeated vertices")

    def __call__(self, v: int) -> int:
        return self.image[self.domain.index(v)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain, self.image))

    def is_identity(self) -> bool:
        return self.domain == self.image

    def to_json_obj(self) -> dict:
        return {"domain": list(self.domain), "image": list(self.image)}
