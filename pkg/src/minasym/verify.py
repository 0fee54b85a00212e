"""Minimality verifiers for asymmetric hypergraphs.

The subgraph scans run over edge subsets and use the isolated-vertex
reduction: appending two or more isolated vertices always yields a
swap, and appending exactly one changes nothing (the lone isolated
vertex is fixed by every automorphism).  Each edge subset therefore
stands for all its vertex extensions, and only its support matters.
"""

from __future__ import annotations

import random
import time
from multiprocessing import Pool
from typing import Optional

from .autom import find_nonidentity_automorphism, has_involution, is_asymmetric
from .errors import ResourceGuardError
from .hypergraph import (
    Hypergraph,
    SubgraphSpec,
    induced_sub,
    sub_from_spec,
    support,
    to_hgf,
)
from .report import VerificationReport, perm_line

_EXHAUSTIVE_EDGE_LIMIT = 20
_PARALLEL_THRESHOLD = 1 << 14


def _support_graph(h: Hypergraph, mask: int) -> tuple[Hypergraph, tuple[int, ...]]:
    picked = [i for i in range(h.m) if mask >> i & 1]
    verts = support(h, picked)
    spec = SubgraphSpec(verts, picked)
    return sub_from_spec(h, spec), verts


def _strong_violation(h: Hypergraph, mask: int) -> bool:
    """Does this edge subset induce a non-trivial asymmetric subgraph?"""
    sub, verts = _support_graph(h, mask)
    if not 1 < len(verts) < h.n:
        return False
    return is_asymmetric(sub)


def _involution_violation(h: Hypergraph, mask: int) -> bool:
    """Does this edge subset stand for a proper subgraph without any
    involution?"""
    sub, verts = _support_graph(h, mask)
    if mask == (1 << h.m) - 1 and len(verts) == h.n:
        return False  # the whole graph, out of scope
    if len(verts) < 2:
        return False
    return has_involution(sub) is None


def _involution_violation_nontrivial(h: Hypergraph, mask: int) -> bool:
    """Like the proper-subgraph check, but only subgraphs with
    1 < |X'| < n count; spanning supports admit none."""
    sub, verts = _support_graph(h, mask)
    if len(verts) < 2 or len(verts) >= h.n:
        return False
    return has_involution(sub) is None


_CHECKS = {
    "strong": _strong_violation,
    "invfree": _involution_violation,
    "invfree-nontrivial": _involution_violation_nontrivial,
}


def _scan_chunk(args) -> tuple[Optional[int], int]:
    n, edges, k, kind, start, end = args
    h = Hypergraph(n, edges, k=k)
    check = _CHECKS[kind]
    checked = 0
    for mask in range(start, end):
        if mask == 0:
            continue
        checked += 1
        if check(h, mask):
            return mask, checked
    return None, checked


def _scan_edge_subsets(
    h: Hypergraph, kind: str, workers: int
) -> tuple[Optional[int], int]:
    """First violating edge-subset mask in ascending order, plus the
    number of subsets checked before stopping."""
    total = 1 << h.m
    if workers <= 1 or total < _PARALLEL_THRESHOLD:
        return _scan_chunk((h.n, h.edges, h.k, kind, 0, total))
    chunk = max(1, total // (workers * 64))
    tasks = [
        (h.n, h.edges, h.k, kind, lo, min(lo + chunk, total))
        for lo in range(0, total, chunk)
    ]
    checked = 0
    with Pool(workers) as pool:
        for bad, part in pool.imap(_scan_chunk, tasks):
            checked += part
            if bad is not None:
                pool.terminate()
                return bad, checked
    return None, checked


def _shrink_edge_mask(h: Hypergraph, mask: int, kind: str) -> int:
    """Greedily drop edges while the violation persists."""
    check = _CHECKS[kind]
    improved = True
    while improved:
        improved = False
        for i in range(h.m):
            if not mask >> i & 1:
                continue
            candidate = mask & ~(1 << i)
            if candidate and check(h, candidate):
                mask = candidate
                improved = True
    return mask


def _witness_block(h: Hypergraph, mask: int) -> str:
    sub, verts = _support_graph(h, mask)
    picked = [i for i in range(h.m) if mask >> i & 1]
    lines = [
        "# vertices " + " ".join(map(str, verts)),
        "# edges " + " ".join(map(str, picked)),
    ]
    return "\n".join(lines) + "\n" + to_hgf(sub)


def _sample_masks(h: Hypergraph, kind: str, samples: int, seed: int, stratified: bool):
    rng = random.Random(seed)
    produced = 0
    misses = 0
    full = (1 << h.m) - 1
    while produced < samples:
        if stratified:
            size = rng.randrange(1, h.m)
            picked = rng.sample(range(h.m), size)
            mask = 0
            for i in picked:
                mask |= 1 << i
        else:
            mask = rng.getrandbits(h.m)
        verts = support(h, [i for i in range(h.m) if mask >> i & 1])
        if kind == "strong":
            ok = mask != 0 and 1 < len(verts) < h.n
        elif kind == "invfree-nontrivial":
            ok = mask != 0 and 1 < len(verts) < h.n
        else:
            ok = mask != 0 and not (mask == full and len(verts) == h.n)
        if not ok:
            misses += 1
            if misses > 10000 + 10 * samples:
                raise ValueError("cannot draw valid subgraph samples")
            continue
        produced += 1
        yield mask


def _verify_subgraphs(
    h: Hypergraph,
    property_name: str,
    kind: str,
    self_check,
    mode: str,
    samples: int,
    seed: Optional[int],
    workers: int,
    stratified: bool,
) -> VerificationReport:
    start = time.perf_counter()
    if mode == "auto":
        mode = "exhaustive" if h.m <= _EXHAUSTIVE_EDGE_LIMIT else "sampled"
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "sampled" and seed is None:
        raise ValueError("sampled mode needs a seed")
    used_seed = seed if mode == "sampled" else 0

    def finish(holds, checked, witness=""):
        elapsed = int((time.perf_counter() - start) * 1000)
        return VerificationReport(
            property_name, holds, mode, checked, used_seed, elapsed, witness
        )

    bad_perm = self_check(h)
    if bad_perm is not None:
        return finish(False, 0, to_hgf(h) + perm_line(bad_perm))

    if mode == "exhaustive":
        bad, checked = _scan_edge_subsets(h, kind, workers)
        if bad is not None:
            bad = _shrink_edge_mask(h, bad, kind)
            return finish(False, checked, _witness_block(h, bad))
        return finish(True, checked)

    checked = 0
    check = _CHECKS[kind]
    for mask in _sample_masks(h, kind, samples, used_seed, stratified):
        checked += 1
        if check(h, mask):
            mask = _shrink_edge_mask(h, mask, kind)
            return finish(False, checked, _witness_block(h, mask))
    return finish(True, checked)


def verify_asymmetric(h: Hypergraph) -> VerificationReport:
    """Report whether the hypergraph has no non-identity automorphism."""
    start = time.perf_counter()
    bad = find_nonidentity_automorphism(h)
    elapsed = int((time.perf_counter() - start) * 1000)
    witness = "" if bad is None else to_hgf(h) + perm_line(bad)
    return VerificationReport(
        "asymmetric", bad is None, "exhaustive", 0, 0, elapsed, witness
    )


def verify_strongly_minimal(
    h: Hypergraph,
    mode: str = "auto",
    samples: int = 10000,
    seed: Optional[int] = None,
    workers: int = 1,
    stratified: bool = False,
) -> VerificationReport:
    """Asymmetric, and every non-trivial sub-k-graph is symmetric.

    Exhaustive mode scans all edge subsets whose support misses at
    least one vertex; spanning subsets admit no non-trivial extension
    and are skipped.  Sampled mode draws edge subsets at p=1/2 each,
    resampling invalid draws.
    """
    return _verify_subgraphs(
        h,
        "strong-minimal",
        "strong",
        find_nonidentity_automorphism,
        mode,
        samples,
        seed,
        workers,
        stratified,
    )


def verify_minimal_involution_free(
    h: Hypergraph,
    mode: str = "auto",
    samples: int = 10000,
    seed: Optional[int] = None,
    workers: int = 1,
    stratified: bool = False,
    nontrivial_only: bool = False,
) -> VerificationReport:
    """No involution, while every proper sub-hypergraph on at least two
    vertices (spanning ones included) has one.

    With nontrivial_only, spanning sub-hypergraphs are exempt too: only
    those on 1 < n' < n vertices must admit an involution.
    """
    kind = "invfree-nontrivial" if nontrivial_only else "invfree"
    return _verify_subgraphs(
        h,
        "minimal-involution-free",
        kind,
        has_involution,
        mode,
        samples,
        seed,
        workers,
        stratified,
    )


def verify_minimal_asymmetric(h: Hypergraph, workers: int = 1) -> VerificationReport:
    """Asymmetric, and every induced subgraph on 1 < n' < n vertices is
    symmetric."""
    start = time.perf_counter()
    if h.n > _EXHAUSTIVE_EDGE_LIMIT:
        raise ResourceGuardError(
            f"induced-subgraph scan over 2^{h.n} vertex subsets refused"
        )

    def finish(holds, checked, witness=""):
        elapsed = int((time.perf_counter() - start) * 1000)
        return VerificationReport(
            "minimal-asymmetric", holds, "exhaustive", checked, 0, elapsed, witness
        )

    bad = find_nonidentity_automorphism(h)
    if bad is not None:
        return finish(False, 0, to_hgf(h) + perm_line(bad))
    checked = 0
    for mask in range(1, 1 << h.n):
        verts = [v for v in range(h.n) if mask >> v & 1]
        if not 1 < len(verts) < h.n:
            continue
        checked += 1
        if is_asymmetric(induced_sub(h, verts)):
            verts = _shrink_vertices(h, verts)
            sub = induced_sub(h, verts)
            witness = "# vertices " + " ".join(map(str, verts)) + "\n" + to_hgf(sub)
            return finish(False, checked, witness)
    return finish(True, checked)


def _shrink_vertices(h: Hypergraph, verts: list[int]) -> list[int]:
    """Greedily drop vertices while the induced subgraph stays
    asymmetric and non-trivial."""
    improved = True
    while improved:
        improved = False
        for v in list(verts):
            candidate = [u for u in verts if u != v]
            if len(candidate) > 1 and is_asymmetric(induced_sub(h, candidate)):
                verts = candidate
                improved = True
    return verts
