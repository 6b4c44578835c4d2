"""Disjoint unions of same-size components, witness-set verification, and
the pigeonhole collision finder.

The union of components S_0..S_{m-1} on n vertices each relates global
vertices (c1*n + v1, c2*n + v2) exactly when c1 == c2 and (v1, v2) is an
edge of S_{c1}: edges exist only within a component.

verify_diamond checks, per vertex x, that no non-identity map from a
bounded witness set A(x) containing x into the whole structure preserves
edges. verify_star checks, per ordered pair x != y, that no edge-preserving
map from A(x, y) sends x to y. Both reduce to pinned homomorphism searches.
When a witness is exactly one component and its induced graph is weakly
connected, any homomorphic image sits inside a single component (edges
never cross components), so the search decomposes into per-component
searches; this confinement is checked, never assumed.

find_witness_collision groups witness sets by the local relation induced
through the canonical ascending bijection; two distinct sets with equal
local relations yield a verified non-identity isomorphism between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, partial

from .core import (
    ArityError,
    Digraph,
    GraphError,
    VertexMap,
    induced_substructure,
    weakly_connected,
)
from .homs import is_homomorphism, stream_hom_images
from .parallel import get_shared_context, parallel_map


class WitnessError(GraphError):
    """A witness set violates {x} <= A(x) or the size bound."""


@dataclass(frozen=True)
class UnionStructure:
    """Ordered same-size components with (component, vertex) addressing."""

    component_size: int
    components: tuple[Digraph, ...]

    def __post_init__(self):
        if not self.components:
            raise ArityError("need at least one component")
        if self.component_size < 1:
            raise ArityError(f"component size must be >= 1, got {self.component_size}")
        for i, c in enumerate(self.components):
            if c.n != self.component_size:
                raise ArityError(
                    f"component {i} has {c.n} vertices, expected {self.component_size}"
                )

    @property
    def n(self) -> int:
        return self.component_size * len(self.components)

    def global_index(self, component: int, vertex: int) -> int:
        if not (0 <= component < len(self.components)):
            raise ArityError(f"component {component} out of range")
        if not (0 <= vertex < self.component_size):
            raise ArityError(f"local vertex {vertex} out of range")
        return component * self.component_size + vertex

    def address(self, global_index: int) -> tuple[int, int]:
        if not (0 <= global_index < self.n):
            raise ArityError(f"global index {global_index} out of range")
        return divmod(global_index, self.component_size)

    def component_vertices(self, component: int) -> range:
        base = component * self.component_size
        return range(base, base + self.component_size)

    @cached_property
    def flat(self) -> Digraph:
        n = self.component_size
        edges = frozenset(
            (c * n + a, c * n + b)
            for c, comp in enumerate(self.components)
            for a, b in comp.edges
        )
        return Digraph(self.n, edges)


def build_union(components) -> UnionStructure:
    components = tuple(components)
    if not components:
        raise ArityError("need at least one component")
    return UnionStructure(components[0].n, components)


@dataclass(frozen=True)
class WitnessEntry:
    key: int | tuple[int, int]
    witness: tuple[int, ...]
    passed: bool
    counterexample: VertexMap | None

    def to_json_obj(self) -> dict:
        return {
            "key": list(self.key) if isinstance(self.key, tuple) else self.key,
            "witness": list(self.witness),
            "status": "pass" if self.passed else "fail",
            "counterexample": None if self.counterexample is None else self.counterexample.to_json_obj(),
        }


@dataclass(frozen=True)
class WitnessReport:
    mode: str
    k: int
    strict: bool
    entries: tuple[WitnessEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "mode": self.mode,
            "k": self.k,
            "strict": self.strict,
            "overall": "pass" if self.passed else "fail",
            "entries": [e.to_json_obj() for e in self.entries],
        }


def _as_union(u) -> UnionStructure:
    if isinstance(u, UnionStructure):
        return u
    return UnionStructure(u.n, (u,))


def _check_witness(witness, x: int, n: int, k: int, strict: bool) -> tuple[int, ...]:
    ws = tuple(sorted(set(witness)))
    if x not in ws:
        raise WitnessError(f"witness for {x} must contain it, got {list(ws)}")
    for v in ws:
        if not (0 <= v < n):
            raise WitnessError(f"witness vertex {v} out of range for n={n}")
    if strict:
        if len(ws) >= k:
            raise WitnessError(f"strict bound requires |witness| < {k}, got {len(ws)}")
    elif len(ws) > k:
        raise WitnessError(f"bound requires |witness| <= {k}, got {len(ws)}")
    return ws


def resolve_diamond_witnesses(u: UnionStructure, provider) -> dict[int, tuple[int, ...]]:
    """Per-vertex witness sets from a built-in name, mapping, or callable."""
    if provider == "component":
        out = {}
        for x in range(u.n):
            c, _ = u.address(x)
            out[x] = tuple(u.component_vertices(c))
        return out
    if provider == "full":
        full = tuple(range(u.n))
        return {x: full for x in range(u.n)}
    if callable(provider):
        return {x: tuple(sorted(set(provider(x)))) for x in range(u.n)}
    if isinstance(provider, dict):
        missing = set(range(u.n)) - set(provider)
        if missing:
            raise WitnessError(f"witness map missing vertices {sorted(missing)}")
        return {x: tuple(sorted(set(provider[x]))) for x in range(u.n)}
    raise WitnessError(f"unknown witness provider {provider!r}")


def _is_full_component(u: UnionStructure, witness: tuple[int, ...]) -> int | None:
    if len(witness) != u.component_size:
        return None
    c, v = u.address(witness[0])
    if v != 0:
        return None
    return c if witness == tuple(u.component_vertices(c)) else None


def _diamond_check(u: UnionStructure, witness: tuple[int, ...]):
    """(passed, counterexample) for one witness set against the whole structure."""
    pattern, labels = induced_substructure(u.flat, witness)
    identity = tuple(labels[i] for i in range(pattern.n))
    domain = tuple(witness)

    c = _is_full_component(u, witness)
    if c is not None and weakly_connected(pattern):
        # Edges never cross components and the witness graph is weakly
        # connected, so every image lies inside one component: search each
        # component separately.
        n = u.component_size
        for d, comp in enumerate(u.components):
            for img in stream_hom_images(pattern, comp, limit=2 if d == c else 1):
                glob = tuple(t + d * n for t in img)
                if glob != identity:
                    return False, VertexMap(domain, glob)
        return True, None

    for img in stream_hom_images(pattern, u.flat, limit=2):
        if img != identity:
            return False, VertexMap(domain, img)
    return True, None


def _diamond_worker(witness):
    return _diamond_check(get_shared_context(), witness)


def verify_diamond(u, witness_provider="component", k: int | None = None,
                   strict: bool = False, workers: int | None = None) -> WitnessReport:
    """Per-vertex check: the only edge-preserving map A(x) -> structure is the
    identity inclusion. Overall pass iff every vertex passes."""
    u = _as_union(u)
    if k is None:
        k = u.n
    raw = resolve_diamond_witnesses(u, witness_provider)
    checked = {x: _check_witness(ws, x, u.n, k, strict) for x, ws in raw.items()}

    unique = sorted(set(checked.values()))
    results = parallel_map(_diamond_worker, unique, workers=workers, shared=u)
    verdict = dict(zip(unique, results))

    entries = []
    for x in range(u.n):
        passed, cex = verdict[checked[x]]
        entries.append(WitnessEntry(x, checked[x], passed, cex))
    return WitnessReport("diamond", k, strict, tuple(entries))


def resolve_star_witnesses(u: UnionStructure, provider) -> dict[tuple[int, int], tuple[int, ...]]:
    pairs = [(x, y) for x in range(u.n) for y in range(u.n) if x != y]
    if provider == "component":
        comp = resolve_diamond_witnesses(u, "component")
        return {(x, y): comp[x] for x, y in pairs}
    if provider == "full":
        full = tuple(range(u.n))
        return {p: full for p in pairs}
    if callable(provider):
        return {(x, y): tuple(sorted(set(provider(x, y)))) for x, y in pairs}
    if isinstance(provider, dict):
        missing = set(pairs) - set(provider)
        if missing:
            raise WitnessError(f"witness map missing pairs {sorted(missing)[:5]}...")
        return {p: tuple(sorted(set(provider[p]))) for p in pairs}
    raise WitnessError(f"unknown witness provider {provider!r}")


def _star_check(u: UnionStructure, witness: tuple[int, ...], x: int, y: int):
    pattern, labels = induced_substructure(u.flat, witness)
    x_idx = witness.index(x)
    domain = tuple(witness)

    c = _is_full_component(u, witness)
    if c is not None and weakly_connected(pattern):
        d, y_local = u.address(y)
        for img in stream_hom_images(pattern, u.components[d], {x_idx: y_local}, limit=1):
            glob = tuple(t + d * u.component_size for t in img)
            return False, VertexMap(domain, glob)
        return True, None

    for img in stream_hom_images(pattern, u.flat, {x_idx: y}, limit=1):
        return False, VertexMap(domain, img)
    return True, None


def _star_worker(item):
    u = get_shared_context()
    (x, y), witness = item
    return _star_check(u, witness, x, y)


def verify_star(u, witness_provider="component", k: int | None = None,
                strict: bool = False, workers: int | None = None) -> WitnessReport:
    """Per-ordered-pair check: no edge-preserving map A(x, y) -> structure
    sends x to y. Overall pass iff every pair passes."""
    u = _as_union(u)
    if k is None:
        k = u.n
    raw = resolve_star_witnesses(u, witness_provider)
    checked = {
        (x, y): _check_witness(ws, x, u.n, k, strict) for (x, y), ws in raw.items()
    }
    items = sorted(checked.items())
    results = parallel_map(_star_worker, items, workers=workers, shared=u)
    entries = tuple(
        WitnessEntry(pair, ws, passed, cex)
        for ((pair, ws), (passed, cex)) in zip(items, results)
    )
    return WitnessReport("star", k, strict, entries)


@dataclass(frozen=True)
class WitnessRelation:
    """A witness set with the local relation its ascending bijection induces."""

    vertices: tuple[int, ...]
    local: Digraph


@dataclass(frozen=True)
class CollisionResult:
    witnesses: tuple[WitnessRelation, ...]
    collision: tuple[int, int] | None
    mapping: VertexMap | None

    @property
    def found(self) -> bool:
        return self.collision is not None

    def to_json_obj(self) -> dict:
        return {
            "witnesses": [
                {"vertices": list(w.vertices),
                 "local_edges": [list(e) for e in w.local.sorted_edges()]}
                for w in self.witnesses
            ],
            "collision": list(self.collision) if self.collision else None,
            "mapping": None if self.mapping is None else self.mapping.to_json_obj(),
        }


def find_witness_collision(u, witnesses) -> CollisionResult:
    """First pair of distinct witness sets inducing equal local relations.

    The returned mapping composes the two ascending bijections and is
    re-verified as an edge-preserving isomorphism in both directions.
    Grouping is by (size, local relation); sets isomorphic only under some
    non-canonical bijection do not collide.
    """
    u = _as_union(u)
    relations = []
    for ws in witnesses:
        vs = tuple(sorted(set(ws)))
        if not vs:
            raise WitnessError("witness sets must be nonempty")
        for v in vs:
            if not (0 <= v < u.n):
                raise WitnessError(f"witness vertex {v} out of range")
        local, _ = induced_substructure(u.flat, vs)
        relations.append(WitnessRelation(vs, local))

    seen: dict[tuple, int] = {}
    for j, rel in enumerate(relations):
        key = (len(rel.vertices), rel.local.edges)
        i = seen.get(key)
        if i is not None and relations[i].vertices != rel.vertices:
            first = relations[i]
            mapping = VertexMap(first.vertices, rel.vertices)
            _verify_collision(u, first, rel, mapping)
            return CollisionResult(tuple(relations), (i, j), mapping)
        if i is None:
            seen[key] = j
    return CollisionResult(tuple(relations), None, None)


def _verify_collision(u: UnionStructure, a: WitnessRelation, b: WitnessRelation,
                      mapping: VertexMap) -> None:
    """Soundness re-check: equal local relations make the position-identity
    map an isomorphism of the induced substructures, both directions."""
    assert not mapping.is_identity()
    position_identity = {i: i for i in range(len(a.vertices))}
    assert is_homomorphism(a.local, b.local, position_identity)
    assert is_homomorphism(b.local, a.local, position_identity)
    lookup = mapping.as_dict()
    for x in a.vertices:
        for y in a.vertices:
            if ((x, y) in u.flat.edges) != ((lookup[x], lookup[y]) in u.flat.edges):
                raise AssertionError("collision mapping failed edge verification")
