"""The successor-chain relation with one extra arc, checked on finite prefixes.

The relation on 0..M-1 has edges (i, i+1) plus (0, 2) once M >= 3. For a
vertex i, the witness set {0..i+2} admits no edge-preserving map into the
prefix other than the identity inclusion: a map moving any chain vertex is
forced along the chain and eventually needs an arc like (c, c+2) with
c > 0, which does not exist. verify_omega certifies that by exhaustive
search instead of reproducing the argument, and the codomain-stability
sweep gives the finite evidence that truncating the infinite chain at M
loses nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Digraph, GraphError, VertexMap, induced_substructure
from .homs import stream_hom_images


class BoundError(GraphError):
    """The codomain bound is too small to embed the witness set."""


@dataclass(frozen=True)
class OmegaPrefix:
    bound: int
    graph: Digraph


@dataclass(frozen=True)
class OmegaCertificate:
    vertex: int
    bound: int
    witness: tuple[int, ...]
    hom_count: int
    counterexample: VertexMap | None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json_obj(self) -> dict:
        return {
            "vertex": self.vertex,
            "bound": self.bound,
            "witness": list(self.witness),
            "hom_count": self.hom_count,
            "status": "pass" if self.passed else "fail",
            "counterexample": None if self.counterexample is None else self.counterexample.to_json_obj(),
        }


def omega_prefix(m: int) -> OmegaPrefix:
    """The chain 0 -> 1 -> ... -> m-1 plus the arc (0, 2) when it fits."""
    if m < 0:
        raise GraphError(f"bound must be non-negative, got {m}")
    edges = {(i, i + 1) for i in range(m - 1)}
    if m >= 3:
        edges.add((0, 2))
    return OmegaPrefix(m, Digraph(m, frozenset(edges)))


def witness_set(i: int) -> tuple[int, ...]:
    """All chain vertices up to i+2."""
    return tuple(range(i + 3))


def verify_omega(i: int, m: int) -> OmegaCertificate:
    """Exhaustively check that the witness of i admits only the identity
    inclusion into the m-prefix."""
    if i < 0:
        raise GraphError(f"vertex must be non-negative, got {i}")
    if m < i + 3:
        raise BoundError(f"bound {m} cannot embed witness of {i}; need m >= {i + 3}")
    prefix = omega_prefix(m)
    ws = witness_set(i)
    pattern, labels = induced_substructure(prefix.graph, ws)
    identity = tuple(labels[j] for j in range(pattern.n))
    count = 0
    counterexample = None
    for img in stream_hom_images(pattern, prefix.graph):
        count += 1
        if img != identity and counterexample is None:
            counterexample = VertexMap(ws, img)
    return OmegaCertificate(i, m, ws, count, counterexample)


def shift_map_is_hom(i: int, m: int, c: int) -> bool:
    """Whether j -> j + c embeds the witness of i into the m-prefix; the
    chain alone allows it, the extra (0, 2) arc forbids it for c >= 1."""
    if c < 1 or i + 2 + c >= m:
        raise GraphError(f"shift {c} out of range for witness {i}, bound {m}")
    prefix = omega_prefix(m)
    ws = witness_set(i)
    pattern, _ = induced_substructure(prefix.graph, ws)
    mapping = {j: j + c for j in range(pattern.n)}
    return all((mapping[a], mapping[b]) in prefix.graph.edges for a, b in pattern.edges)


def stability_sweep(i: int, slack_range) -> dict[int, bool]:
    """Verdicts of verify_omega(i, i+3+slack) across the given slacks."""
    return {s: verify_omega(i, i + 3 + s).passed for s in slack_range}
