"""Exhaustive scans and isomorph-free enumeration of small k-graphs.

Two independent enumeration strategies cover the same ground: a
vectorized scan of all labeled edge sets with orbit-minimum
deduplication, and canonical augmentation growing one edge at a time.
Their class counts must agree; tests enforce it.

Labeled scans sieve each edge-set bitmask against precomputed bit
permutations (the whole symmetric group when n! is small, else all
transpositions with an engine fallback), so only hard instances reach
the backtracking engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from .autom import (
    automorphisms,
    canonical_form,
    canonical_key,
    find_nonidentity_automorphism,
    is_asymmetric,
    structure_engine,
)
from .errors import ResourceGuardError
from .hypergraph import Hypergraph
from .perms import Perm, identity, transposition
from .verify import verify_minimal_asymmetric

_BIT_LIMIT = 24
_FULL_SIEVE_LIMIT = 5040
_CHUNK = 1 << 16


@dataclass(frozen=True)
class SearchOutcome:
    """Census of one (k, n) cell of the enumeration."""

    k: int
    n: int
    total_labeled: int
    iso_classes: int
    asymmetric_classes: int
    witnesses: tuple[Hypergraph, ...]


@dataclass(frozen=True)
class LemmaScan:
    """Result of a full labeled scan for asymmetric instances."""

    k: int
    n: int
    total_labeled: int
    scanned: int
    all_symmetric: bool
    witness: Optional[Hypergraph]


def _edge_space(n: int, k: int) -> list[tuple[int, ...]]:
    c = math.comb(n, k)
    if c > _BIT_LIMIT:
        raise ResourceGuardError(
            f"edge space C({n},{k}) = {c} exceeds the {_BIT_LIMIT}-bit scan guard"
        )
    return list(combinations(range(n), k))


class _Remap:
    """A bit permutation on edge-index masks, applied via two tables."""

    def __init__(self, perm: Perm, edges: Sequence[tuple[int, ...]], index):
        c = len(edges)
        self.lo_bits = min(12, c)
        img = [1 << index[tuple(sorted(perm[v] for v in e))] for e in edges]
        self.lo = self._table(img[: self.lo_bits])
        self.hi = self._table(img[self.lo_bits :])
        self.lo_mask = (1 << self.lo_bits) - 1

    @staticmethod
    def _table(img: list[int]) -> np.ndarray:
        t = np.zeros(1 << len(img), dtype=np.int64)
        idx = np.arange(t.size)
        for b, bit in enumerate(img):
            t[((idx >> b) & 1).astype(bool)] |= bit
        return t

    def apply(self, masks: np.ndarray) -> np.ndarray:
        return self.lo[masks & self.lo_mask] | self.hi[masks >> self.lo_bits]


def _sieve_perms(n: int, full: bool) -> list[Perm]:
    if full:
        ident = identity(n)
        return [p for p in permutations(range(n)) if p != ident]
    return [transposition(n, a, b) for a, b in combinations(range(n), 2)]


def _mask_graph(n: int, k: int, edges, mask: int) -> Hypergraph:
    chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
    return Hypergraph(n, chosen, k=k)


def _scan_labeled(
    k: int,
    n: int,
    half: bool,
    start_mask: int = 0,
    checkpoint_path: Optional[str] = None,
) -> tuple[int, Optional[int], int]:
    """Scan labeled edge sets ascending for an asymmetric instance.

    Returns (scanned, first asymmetric mask or None, total space size).
    With `half` set, masks with more than C/2 edges are skipped; the
    edge-set complement within the full k-subset family preserves the
    automorphism group, so the skipped half is covered by the scanned
    one.
    """
    edges = _edge_space(n, k)
    c = len(edges)
    index = {e: i for i, e in enumerate(edges)}
    full_sieve = math.factorial(n) <= _FULL_SIEVE_LIMIT
    sieve = [_Remap(p, edges, index) for p in _sieve_perms(n, full_sieve)]
    total = 1 << c
    limit = c // 2
    scanned = 0
    for lo in range(start_mask, total, _CHUNK):
        block = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        if half:
            block = block[np.bitwise_count(block) <= limit]
        if block.size:
            sym = np.zeros(block.size, dtype=bool)
            for remap in sieve:
                np.logical_or(sym, remap.apply(block) == block, out=sym)
            scanned += int(block.size)
            for mask in block[~sym].tolist():
                if full_sieve:
                    return scanned, mask, total
                if find_nonidentity_automorphism(_mask_graph(n, k, edges, mask)) is None:
                    return scanned, mask, total
        if checkpoint_path is not None:
            write_checkpoint(checkpoint_path, k, n, min(lo + _CHUNK, total) - 1)
    return scanned, None, total


def verify_lemma_all_symmetric(
    k: int,
    n: int,
    half: bool = False,
    start_mask: int = 0,
    checkpoint_path: Optional[str] = None,
) -> LemmaScan:
    """Does every labeled k-graph on n vertices have a non-identity
    automorphism?  Scans the whole labeled space with early exit per
    instance."""
    scanned, bad, total = _scan_labeled(k, n, half, start_mask, checkpoint_path)
    witness = None if bad is None else _mask_graph(n, k, _edge_space(n, k), bad)
    return LemmaScan(k, n, total, scanned, bad is None, witness)


def min_asymmetric_order(
    k: int, n_max: int
) -> tuple[Optional[int], Optional[Hypergraph]]:
    """Least n in 2..n_max carrying an asymmetric k-graph, with witness.

    One-vertex structures are ignored as trivially asymmetric.
    """
    for n in range(2, n_max + 1):
        _, mask, _ = _scan_labeled(k, n, half=True)
        if mask is not None:
            return n, _mask_graph(n, k, _edge_space(n, k), mask)
    return None, None


def enumerate_k_graphs(k: int, n: int) -> list[Hypergraph]:
    """One canonical representative per isomorphism class of k-graphs
    on n vertices, ordered by edge count then edge list.

    Labeled-scan strategy: every edge-set bitmask is mapped to the
    minimum of its orbit under the vertex permutations; orbit minima
    are the class representatives.  Falls back to canonical-key
    deduplication when the permutation count is impractical.
    """
    edges = _edge_space(n, k)
    c = len(edges)
    index = {e: i for i, e in enumerate(edges)}
    total = 1 << c
    if math.factorial(n) <= _FULL_SIEVE_LIMIT:
        masks = np.arange(total, dtype=np.int64)
        orbit_min = masks.copy()
        for p in _sieve_perms(n, full=True):
            np.minimum(orbit_min, _Remap(p, edges, index).apply(masks), out=orbit_min)
        rep_masks = masks[orbit_min == masks].tolist()
    else:
        seen: set[bytes] = set()
        rep_masks = []
        for mask in range(total):
            key = canonical_key(_mask_graph(n, k, edges, mask))
            if key not in seen:
                seen.add(key)
                rep_masks.append(mask)
    reps = [canonical_form(_mask_graph(n, k, edges, mask)) for mask in rep_masks]
    reps.sort(key=lambda h: (h.m, h.edges))
    return reps


def scan_classes(k: int, n: int, keep_witnesses: bool = True) -> SearchOutcome:
    """Class census at (k, n): labeled count, classes, asymmetric classes."""
    reps = enumerate_k_graphs(k, n)
    asym = tuple(r for r in reps if is_asymmetric(r))
    return SearchOutcome(
        k=k,
        n=n,
        total_labeled=1 << math.comb(n, k),
        iso_classes=len(reps),
        asymmetric_classes=len(asym),
        witnesses=asym if keep_witnesses else (),
    )


def _edge_orbit(
    edge: tuple[int, ...], gens: Sequence[Perm]
) -> set[tuple[int, ...]]:
    orbit = {edge}
    queue = [edge]
    while queue:
        e = queue.pop()
        for g in gens:
            img = tuple(sorted(g[v] for v in e))
            if img not in orbit:
                orbit.add(img)
                queue.append(img)
    return orbit


def _augmentation_accepts(child: Hypergraph, added: tuple[int, ...]) -> bool:
    """Canonical-deletion test: the new edge must lie in the same
    automorphism orbit as the edge with the largest canonical image."""
    _, sigma = structure_engine(child.n, child.edges, False).canonical()
    deletion = max(child.edges, key=lambda e: tuple(sorted(sigma[v] for v in e)))
    if deletion == added:
        return True
    gens = automorphisms(child).generators
    return deletion in _edge_orbit(added, gens)


def classes_by_edge_count(
    n: int, k: int, max_edges: Optional[int] = None
) -> Iterator[tuple[int, list[Hypergraph]]]:
    """Canonical augmentation: yields (edge count, class representatives)
    for m = 0, 1, 2, ... in turn.

    Independent of the labeled-scan strategy and free of its bitmask
    guard; levels grow one edge at a time, so the caller bounds the
    work by stopping the iteration.
    """
    all_edges = list(combinations(range(n), k))
    top = len(all_edges) if max_edges is None else min(max_edges, len(all_edges))
    current = [Hypergraph(n, (), k=k)]
    yield 0, current
    m = 0
    while m < top:
        grown: list[Hypergraph] = []
        for parent in current:
            gens = automorphisms(parent).generators
            present = parent.edge_set()
            candidates = [e for e in all_edges if e not in present]
            visited: set[tuple[int, ...]] = set()
            for cand in candidates:
                if cand in visited:
                    continue
                visited |= _edge_orbit(cand, gens)
                child = Hypergraph(n, parent.edges + (cand,), k=k)
                if _augmentation_accepts(child, cand):
                    grown.append(child)
        m += 1
        yield m, grown
        current = grown


def find_minimal_asymmetric(k: int, n: int) -> list[Hypergraph]:
    """All class representatives on n vertices that are asymmetric with
    every non-trivial induced subgraph symmetric."""
    return [r for r in enumerate_k_graphs(k, n) if verify_minimal_asymmetric(r).holds]


def write_checkpoint(path: str, k: int, n: int, last_mask: int) -> None:
    Path(path).write_text(f"{k} {n} {last_mask}\n", encoding="ascii")


def read_checkpoint(path: str) -> tuple[int, int, int]:
    parts = Path(path).read_text(encoding="ascii").split()
    if len(parts) != 3:
        raise ValueError(f"bad checkpoint file {path!r}")
    k, n, last_mask = (int(x) for x in parts)
    return k, n, last_mask
