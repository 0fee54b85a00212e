"""Automorphism machinery for hypergraphs and tuple structures.

The engine colors vertices and edges, refines the colors to a fixpoint
(vertex color <- incident edge colors, edge color <- endpoint colors),
and backtracks over individualization choices.  Candidate bijections are
only ever read off discrete colorings and are verified edge-by-edge, so
every reported automorphism is genuine regardless of refinement power.

Group order goes through a deterministic Schreier-Sims stabilizer chain
over the returned generators.  A factorial brute-force oracle (n <= 9)
provides an independent route for cross-checking.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from .errors import ResourceGuardError
from .hypergraph import Hypergraph
from .perms import Perm, compose, identity, inverse, is_identity, is_involution


@dataclass(frozen=True)
class AutomResult:
    """Automorphism group summary: generators, order, and involution data."""

    generators: tuple[Perm, ...]
    group_order: int
    is_asymmetric: bool
    has_involution: bool
    involution_witness: Optional[Perm]


class _Engine:
    """Search over color-preserving vertex bijections of one structure.

    `ordered=False` treats edges as sets (hypergraphs); `ordered=True`
    keeps positions significant (relational tuple systems).
    """

    def __init__(
        self,
        n: int,
        edges: Sequence[tuple[int, ...]],
        ordered: bool,
        pinned: Optional[frozenset[int]] = None,
    ):
        self.n = n
        self.edges = tuple(edges)
        self.m = len(self.edges)
        self.ordered = ordered
        self.edge_set = frozenset(self.edges)
        inc: list[list] = [[] for _ in range(n)]
        for ei, e in enumerate(self.edges):
            if ordered:
                for pos, v in enumerate(e):
                    inc[v].append((ei, pos))
            else:
                for v in e:
                    inc[v].append(ei)
        self.inc = [tuple(x) for x in inc]
        if pinned:
            base = [1 if v in pinned else 0 for v in range(n)]
        else:
            base = [0] * n
        self.base = self._refine(base)

    # -- coloring ---------------------------------------------------

    def _refine(self, vcol: Sequence[int]) -> tuple[list[int], list[int]]:
        """Refine to a stable (vertex colors, edge colors) pair."""
        n, m = self.n, self.m
        edges, inc, ordered = self.edges, self.inc, self.ordered
        vcol = list(vcol)
        ecol = [0] * m
        nv = ne = -1
        while True:
            esig = []
            for ei in range(m):
                cols = [vcol[v] for v in edges[ei]]
                if not ordered:
                    cols.sort()
                esig.append((ecol[ei], tuple(cols)))
            ranks = {s: i for i, s in enumerate(sorted(set(esig)))}
            ecol = [ranks[s] for s in esig]
            ne2 = len(ranks)

            vsig = []
            for v in range(n):
                if ordered:
                    around = sorted((ecol[ei], pos) for ei, pos in inc[v])
                else:
                    around = sorted(ecol[ei] for ei in inc[v])
                vsig.append((vcol[v], tuple(around)))
            vranks = {s: i for i, s in enumerate(sorted(set(vsig)))}
            vcol = [vranks[s] for s in vsig]
            nv2 = len(vranks)

            if nv2 == nv and ne2 == ne:
                return vcol, ecol
            nv, ne = nv2, ne2

    def _individualize(self, state, v: int, marker: int):
        vcol = list(state[0])
        vcol[v] = marker
        return self._refine(vcol)

    def _marker(self, depth: int) -> int:
        return self.n + 1 + depth

    @staticmethod
    def _compatible(dom, cod) -> bool:
        return Counter(dom[0]) == Counter(cod[0]) and Counter(dom[1]) == Counter(cod[1])

    def _select_cell(self, vcol) -> Optional[int]:
        """Color of the smallest non-singleton vertex cell, lowest color first."""
        counts = Counter(vcol)
        best = None
        for color, size in counts.items():
            if size > 1 and (best is None or (size, color) < best):
                best = (size, color)
        return None if best is None else best[1]

    def _extract(self, dom, cod) -> Optional[Perm]:
        """Bijection matching discrete colors; verified before acceptance."""
        n = self.n
        by_color = {c: v for v, c in enumerate(cod[0])}
        perm = tuple(by_color[c] for c in dom[0])
        if self._preserves(perm):
            return perm
        return None

    def _preserves(self, perm: Sequence[int]) -> bool:
        es = self.edge_set
        if self.ordered:
            return all(tuple(perm[v] for v in e) in es for e in self.edges)
        return all(tuple(sorted(perm[v] for v in e)) in es for e in self.edges)

    # -- searches ---------------------------------------------------

    def _cell_members(self, vcol, color) -> list[int]:
        return [v for v in range(self.n) if vcol[v] == color]

    def _find_ext(self, dom, cod, depth: int) -> Optional[Perm]:
        """First color-respecting automorphism extending dom->cod, if any."""
        if not self._compatible(dom, cod):
            return None
        color = self._select_cell(dom[0])
        if color is None:
            return self._extract(dom, cod)
        t = self._cell_members(dom[0], color)[0]
        marker = self._marker(depth)
        dom_next = self._individualize(dom, t, marker)
        for v in self._cell_members(cod[0], color):
            found = self._find_ext(dom_next, self._individualize(cod, v, marker), depth + 1)
            if found is not None:
                return found
        return None

    def find_nonidentity(self) -> Optional[Perm]:
        return self._noniden_rec(self.base, 0)

    def _noniden_rec(self, state, depth: int) -> Optional[Perm]:
        color = self._select_cell(state[0])
        if color is None:
            return None
        cell = self._cell_members(state[0], color)
        t = cell[0]
        marker = self._marker(depth)
        on_path = self._individualize(state, t, marker)
        for v in cell:
            if v == t:
                found = self._noniden_rec(on_path, depth + 1)
            else:
                found = self._find_ext(on_path, self._individualize(state, v, marker), depth + 1)
            if found is not None:
                return found
        return None

    def generators(self) -> list[Perm]:
        """Generating set of the full color-preserving automorphism group.

        Walks the identity path; each level contributes the stabilizer's
        generators plus one coset representative per new orbit point.
        """
        return self._gens_rec(self.base, 0)

    def _gens_rec(self, state, depth: int) -> list[Perm]:
        color = self._select_cell(state[0])
        if color is None:
            return []
        cell = self._cell_members(state[0], color)
        t = cell[0]
        marker = self._marker(depth)
        on_path = self._individualize(state, t, marker)
        gens = self._gens_rec(on_path, depth + 1)
        orbit = _orbit_of(t, gens)
        for v in cell[1:]:
            if v in orbit:
                continue
            rep = self._find_ext(on_path, self._individualize(state, v, marker), depth + 1)
            if rep is not None:
                gens.append(rep)
                orbit = _orbit_of(t, gens)
        return gens

    def find_involution(self) -> Optional[Perm]:
        """First automorphism of order two, searched as paired assignments."""
        return self._inv_rec(self.base, self.base, 0)

    def _inv_rec(self, dom, cod, depth: int) -> Optional[Perm]:
        if not self._compatible(dom, cod):
            return None
        color = self._select_cell(dom[0])
        if color is None:
            perm = self._extract(dom, cod)
            if perm is not None and is_involution(perm):
                return perm
            return None
        t = self._cell_members(dom[0], color)[0]
        mark_a = self._marker(depth)
        mark_b = self._marker(depth + 1)
        for v in self._cell_members(cod[0], color):
            if v == t:
                found = self._inv_rec(
                    self._individualize(dom, t, mark_a),
                    self._individualize(cod, t, mark_a),
                    depth + 1,
                )
            else:
                # pair t<->v, so v's domain color must match t's codomain color
                if dom[0][v] != cod[0][t]:
                    continue
                dom2 = list(dom[0])
                dom2[t], dom2[v] = mark_a, mark_b
                cod2 = list(cod[0])
                cod2[v], cod2[t] = mark_a, mark_b
                found = self._inv_rec(
                    self._refine(dom2), self._refine(cod2), depth + 2
                )
            if found is not None:
                return found
        return None

    # -- canonical labeling ------------------------------------------

    def canonical(self) -> tuple[tuple, Perm]:
        """Minimal relabeled edge encoding over the search tree, with the
        relabeling that realizes it.  Leaves with equal encodings reveal
        automorphisms, which prune sibling branches orbit-wise."""
        best: list = [None, None]
        auts: list[Perm] = []
        first_leaf: dict = {}

        def leaf(state):
            sigma = state[0]
            enc = self._encode(sigma)
            if enc in first_leaf:
                other = first_leaf[enc]
                aut = compose(inverse(other), sigma)
                if not is_identity(aut) and len(auts) < 64:
                    auts.append(aut)
            else:
                first_leaf[enc] = tuple(sigma)
            if best[0] is None or enc < best[0]:
                best[0] = enc
                best[1] = tuple(sigma)

        def rec(state, depth, prefix):
            color = self._select_cell(state[0])
            if color is None:
                leaf(state)
                return
            cell = self._cell_members(state[0], color)
            marker = self._marker(depth)
            explored: list[int] = []
            for v in cell:
                if explored and _in_explored_orbit(v, explored, prefix, auts):
                    continue
                explored.append(v)
                rec(self._individualize(state, v, marker), depth + 1, prefix + (v,))

        rec(self.base, 0, ())
        return best[0], best[1]

    def _encode(self, sigma) -> tuple:
        if self.ordered:
            relabeled = sorted(tuple(sigma[v] for v in e) for e in self.edges)
        else:
            relabeled = sorted(tuple(sorted(sigma[v] for v in e)) for e in self.edges)
        return (self.n, tuple(relabeled))


def _orbit_of(point: int, gens: Sequence[Perm]) -> set[int]:
    orbit = {point}
    queue = [point]
    while queue:
        p = queue.pop()
        for g in gens:
            q = g[p]
            if q not in orbit:
                orbit.add(q)
                queue.append(q)
    return orbit


def _in_explored_orbit(v, explored, prefix, auts) -> bool:
    """Is v reachable from an explored sibling by a found automorphism
    fixing the individualized prefix pointwise?"""
    usable = [g for g in auts if all(g[p] == p for p in prefix)]
    if not usable:
        return False
    seen = set(explored)
    queue = list(explored)
    while queue:
        p = queue.pop()
        for g in usable:
            q = g[p]
            if q == v:
                return True
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return False


# -- Schreier-Sims ----------------------------------------------------


def group_order(gens: Sequence[Perm], n: int) -> int:
    """Order of <gens> via a stabilizer chain with ascending base points."""
    chain = _stabilizer_chain(gens, n)
    result = 1
    for _, transversal, _ in chain:
        result *= len(transversal)
    return result


def _stabilizer_chain(gens: Sequence[Perm], n: int):
    """Stabilizer chain in the standard strong-generator formulation.

    Level i holds the generators known to fix base[:i] pointwise and the
    transversal of base[i] under them.  Schreier generators that fail to
    sift become strong generators of every level they fix, and affected
    levels are re-closed deepest-first.
    """
    initial = [tuple(g) for g in gens if not is_identity(g)]
    if not initial:
        return []
    base: list[int] = [min(p for g in initial for p in range(n) if g[p] != p)]
    sgens: list[list[Perm]] = [list(initial)]
    trans: list[dict[int, Perm]] = [{}]

    def rebuild(i: int) -> None:
        transversal = {base[i]: identity(n)}
        queue = [base[i]]
        qi = 0
        while qi < len(queue):
            p = queue[qi]
            qi += 1
            for g in sgens[i]:
                q = g[p]
                if q not in transversal:
                    transversal[q] = compose(g, transversal[p])
                    queue.append(q)
        trans[i] = transversal

    def strip(g: Perm, start: int) -> tuple[Perm, int]:
        j = start
        while j < len(base):
            p = g[base[j]]
            if p not in trans[j]:
                return g, j
            g = compose(inverse(trans[j][p]), g)
            j += 1
        return g, j

    def close(i: int) -> None:
        # precondition: all deeper levels are closed
        rebuild(i)
        transversal = trans[i]
        for p in list(transversal):
            u_p = transversal[p]
            for s in sgens[i]:
                schreier = compose(inverse(transversal[s[p]]), compose(s, u_p))
                if is_identity(schreier):
                    continue
                residue, j = strip(schreier, i + 1)
                if is_identity(residue):
                    continue
                if j == len(base):
                    base.append(min(q for q in range(n) if residue[q] != q))
                    sgens.append([])
                    trans.append({})
                for level in range(i + 1, j + 1):
                    sgens[level].append(residue)
                for level in range(j, i, -1):
                    close(level)

    close(0)
    return [(base[i], trans[i], sgens[i]) for i in range(len(base))]


# -- public hypergraph API --------------------------------------------


def structure_engine(
    n: int,
    edges: Sequence[tuple[int, ...]],
    ordered: bool,
    stabilize: Optional[Sequence[int]] = None,
) -> _Engine:
    pinned = frozenset(stabilize) if stabilize is not None else None
    if pinned is not None and any(not 0 <= v < n for v in pinned):
        raise ValueError("stabilized vertex out of range")
    return _Engine(n, edges, ordered, pinned)


def _twin_swap(
    n: int,
    edges: Sequence[tuple[int, ...]],
    stabilize: Optional[Sequence[int]] = None,
) -> Optional[Perm]:
    """Swap of two vertices with identical incident edge sets, if any.

    Such a swap fixes every edge, so it is always an involution.  With a
    stabilized set, both vertices must be on the same side of it.
    """
    pinned = frozenset(stabilize) if stabilize is not None else frozenset()
    inc: dict[int, list[int]] = {v: [] for v in range(n)}
    for ei, e in enumerate(edges):
        for v in set(e):
            inc[v].append(ei)
    groups: dict = {}
    for v in range(n):
        key = (tuple(inc[v]), v in pinned)
        prev = groups.get(key)
        if prev is not None:
            images = list(range(n))
            images[prev], images[v] = v, prev
            return tuple(images)
        groups[key] = v
    return None


def find_nonidentity_automorphism(
    h: Hypergraph, stabilize: Optional[Sequence[int]] = None
) -> Optional[Perm]:
    twin = _twin_swap(h.n, h.edges, stabilize)
    if twin is not None:
        return twin
    return structure_engine(h.n, h.edges, False, stabilize).find_nonidentity()


def is_asymmetric(h: Hypergraph) -> bool:
    """No non-identity automorphism; exits at the first witness found."""
    return find_nonidentity_automorphism(h) is None


def has_involution(
    h: Hypergraph, stabilize: Optional[Sequence[int]] = None
) -> Optional[Perm]:
    """An order-two automorphism if one exists, else None."""
    twin = _twin_swap(h.n, h.edges, stabilize)
    if twin is not None:
        return twin
    return structure_engine(h.n, h.edges, False, stabilize).find_involution()


def automorphisms(
    h: Hypergraph, stabilize: Optional[Sequence[int]] = None
) -> AutomResult:
    return _assemble(h.n, h.edges, False, stabilize)


def automorphisms_stabilizing(h: Hypergraph, vertices: Sequence[int]) -> AutomResult:
    """Automorphisms mapping the given vertex set onto itself."""
    return automorphisms(h, stabilize=vertices)


def _assemble(
    n: int,
    edges: Sequence[tuple[int, ...]],
    ordered: bool,
    stabilize: Optional[Sequence[int]] = None,
) -> AutomResult:
    engine = structure_engine(n, edges, ordered, stabilize)
    gens = engine.generators()
    order = group_order(gens, n)
    witness = None
    if order % 2 == 0:
        if not ordered:
            witness = _twin_swap(n, edges, stabilize)
        if witness is None:
            witness = engine.find_involution()
        if witness is None:
            raise AssertionError("even group order but no involution found")
    return AutomResult(
        generators=tuple(gens),
        group_order=order,
        is_asymmetric=order == 1,
        has_involution=witness is not None,
        involution_witness=witness,
    )


def brute_force_automorphisms(
    h: Hypergraph, stabilize: Optional[Sequence[int]] = None
) -> AutomResult:
    """All automorphisms by scanning every permutation; guard n <= 9."""
    return brute_force_structure(h.n, h.edges, False, stabilize)


def brute_force_structure(
    n: int,
    edges: Sequence[tuple[int, ...]],
    ordered: bool,
    stabilize: Optional[Sequence[int]] = None,
) -> AutomResult:
    if n > 9:
        raise ResourceGuardError(f"brute force automorphisms limited to n <= 9, got {n}")
    pinned = frozenset(stabilize) if stabilize is not None else None
    edge_set = frozenset(edges)
    found = []
    for p in permutations(range(n)):
        if pinned is not None and {p[v] for v in pinned} != pinned:
            continue
        if ordered:
            ok = all(tuple(p[v] for v in e) in edge_set for e in edges)
        else:
            ok = all(tuple(sorted(p[v] for v in e)) in edge_set for e in edges)
        if ok:
            found.append(p)
    witness = next((p for p in found if is_involution(p)), None)
    gens = tuple(p for p in found if not is_identity(p))
    return AutomResult(
        generators=gens,
        group_order=len(found),
        is_asymmetric=len(found) == 1,
        has_involution=witness is not None,
        involution_witness=witness,
    )


# -- canonical forms ---------------------------------------------------


def canonical_key(h: Hypergraph) -> bytes:
    """Label-invariant key: equal exactly for isomorphic hypergraphs."""
    enc, _ = structure_engine(h.n, h.edges, False).canonical()
    return repr(("H", enc)).encode()


def canonical_form(h: Hypergraph) -> Hypergraph:
    """Canonically relabeled copy; a fixed point of re-canonicalization."""
    _, sigma = structure_engine(h.n, h.edges, False).canonical()
    relabeled = [tuple(sorted(sigma[v] for v in e)) for e in h.edges]
    return Hypergraph(h.n, relabeled, k=h.k)
