"""Finite hypergraphs on vertex set {0..n-1} with set-valued edges.

Edges are stored as ascending vertex tuples, the edge set ordered
lexicographically, so equal hypergraphs compare equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .perms import Perm


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]
    k: Optional[int] = None

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]] = (),
        k: Optional[int] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for edge in edges:
            e = tuple(sorted(edge))
            if not e:
                raise ValueError("empty edge")
            if len(set(e)) != len(e):
                raise ValueError(f"repeated vertex in edge {e!r}")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e!r} out of range for n={n}")
            normalized.add(e)
        edge_tuple = tuple(sorted(normalized))
        sizes = {len(e) for e in edge_tuple}
        if k is not None:
            if k <= 0:
                raise ValueError("uniformity tag must be positive")
            if sizes - {k}:
                raise ValueError(f"edges of size {sizes} under uniformity tag {k}")
        elif len(sizes) == 1:
            k = next(iter(sizes))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edge_tuple)
        object.__setattr__(self, "k", k)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class SubgraphSpec:
    """A sub-hypergraph given by kept vertices and kept edge indices."""

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int], edge_indices: Iterable[int] = ()):
        object.__setattr__(self, "vertices", tuple(sorted(set(vertices))))
        object.__setattr__(self, "edge_indices", tuple(sorted(set(edge_indices))))


def degree(h: Hypergraph, v: int) -> int:
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range")
    return sum(1 for e in h.edges if v in e)


def degrees(h: Hypergraph) -> tuple[int, ...]:
    counts = [0] * h.n
    for e in h.edges:
        for v in e:
            counts[v] += 1
    return tuple(counts)


def is_k_uniform(h: Hypergraph, k: int) -> bool:
    return all(len(e) == k for e in h.edges)


def set_complement(h: Hypergraph) -> Hypergraph:
    """Replace each edge by its vertex-set complement (an (n-k)-graph).

    Requires a k-uniform input with k < n; automorphism groups are
    unchanged under this map.
    """
    if h.k is None:
        raise ValueError("set complement needs a uniform hypergraph")
    if h.k >= h.n:
        raise ValueError("set complement needs k < n")
    full = set(range(h.n))
    edges = [tuple(sorted(full - set(e))) for e in h.edges]
    return Hypergraph(h.n, edges, k=h.n - h.k)


def induced_sub(h: Hypergraph, vertices: Iterable[int]) -> Hypergraph:
    """Induced sub-hypergraph: keeps edges entirely inside `vertices`.

    Vertices are reindexed order-preservingly; `sub_vertex_map` recovers
    the original label of each new index.
    """
    keep = sorted(set(vertices))
    if keep and (keep[0] < 0 or keep[-1] >= h.n):
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(keep)}
    keep_set = set(keep)
    edges = [
        tuple(index[v] for v in e) for e in h.edges if keep_set.issuperset(e)
    ]
    return Hypergraph(len(keep), edges, k=h.k if h.k is not None else None)


def sub_vertex_map(vertices: Iterable[int]) -> tuple[int, ...]:
    """Original label of each reindexed vertex of an induced/spec subgraph."""
    return tuple(sorted(set(vertices)))


def sub_from_spec(h: Hypergraph, spec: SubgraphSpec) -> Hypergraph:
    """Sub-hypergraph with chosen vertices and a subset of their edges."""
    keep = spec.vertices
    if keep and (keep[0] < 0 or keep[-1] >= h.n):
        raise ValueError("vertex out of range")
    keep_set = set(keep)
    index = {v: i for i, v in enumerate(keep)}
    edges = []
    for ei in spec.edge_indices:
        if not 0 <= ei < h.m:
            raise ValueError(f"edge index {ei} out of range")
        e = h.edges[ei]
        if not keep_set.issuperset(e):
            raise ValueError(f"edge {e!r} not inside kept vertices")
        edges.append(tuple(index[v] for v in e))
    return Hypergraph(len(keep), edges, k=h.k if h.k is not None else None)


def support(h: Hypergraph, edge_indices: Iterable[int]) -> tuple[int, ...]:
    """Sorted union of the chosen edges."""
    verts: set[int] = set()
    for ei in edge_indices:
        verts.update(h.edges[ei])
    return tuple(sorted(verts))


def relabel(h: Hypergraph, p: Perm) -> Hypergraph:
    """Image of the hypergraph under a vertex permutation."""
    if len(p) != h.n:
        raise ValueError("permutation length mismatch")
    return Hypergraph(h.n, [tuple(sorted(p[v] for v in e)) for e in h.edges], k=h.k)


def is_automorphism(h: Hypergraph, p: Sequence[int]) -> bool:
    edge_set = h.edge_set()
    return all(tuple(sorted(p[v] for v in e)) in edge_set for e in h.edges)


# HGF text format: header "n m k" (k=0 when no uniformity tag), one line
# per edge with ascending vertex indices, "#" comment lines, LF endings.


def to_hgf(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m} {h.k if h.k is not None else 0}"]
    for e in h.edges:
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def parse_hgf(text: str) -> Hypergraph:
    rows = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty HGF document")
    header = rows[0].split()
    if len(header) != 3:
        raise ValueError(f"bad HGF header: {rows[0]!r}")
    try:
        n, m, k = (int(x) for x in header)
    except ValueError as exc:
        raise ValueError(f"bad HGF header: {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        try:
            e = tuple(int(x) for x in row.split())
        except ValueError as exc:
            raise ValueError(f"bad edge line: {row!r}") from exc
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ValueError(f"edge indices not ascending: {row!r}")
        edges.append(e)
    return Hypergraph(n, edges, k=k if k > 0 else None)


def to_hgf_stream(graphs: Iterable[Hypergraph]) -> str:
    """Multi-document HGF: documents separated by `---` lines."""
    return "---\n".join(to_hgf(g) for g in graphs)


def parse_hgf_stream(text: str) -> list[Hypergraph]:
    docs = text.split("---")
    return [parse_hgf(doc) for doc in docs if doc.strip()]


def serialize_labels(labels: Sequence[str]) -> str:
    """Label sidecar: one `index name` row per vertex."""
    return "".join(f"{i} {name}\n" for i, name in enumerate(labels))
