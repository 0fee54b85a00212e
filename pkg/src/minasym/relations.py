"""k-ary relational structures: ordered-tuple analogues of hypergraphs."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .autom import AutomResult, _assemble, brute_force_structure, structure_engine
from .constructions import _build_gkt_circ
from .perms import Perm
from .report import VerificationReport, perm_line


@dataclass(frozen=True)
class RelationalStructure:
    n: int
    arity: int
    tuples: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, arity: int, tuples: Iterable[Iterable[int]] = ()):
        if n < 0 or arity <= 0:
            raise ValueError("need n >= 0 and positive arity")
        normalized = set()
        for t in tuples:
            t = tuple(t)
            if len(t) != arity:
                raise ValueError(f"tuple {t!r} does not have arity {arity}")
            if any(not 0 <= v < n for v in t):
                raise ValueError(f"tuple {t!r} out of range for n={n}")
            normalized.add(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "tuples", tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.tuples)


def automorphisms_rel(r: RelationalStructure) -> AutomResult:
    """Automorphism group under position-preserving tuple maps."""
    return _assemble(r.n, r.tuples, ordered=True)


def brute_force_automorphisms_rel(r: RelationalStructure) -> AutomResult:
    return brute_force_structure(r.n, r.tuples, ordered=True)


def is_asymmetric_rel(r: RelationalStructure) -> bool:
    return find_nonidentity_automorphism_rel(r) is None


def find_nonidentity_automorphism_rel(r: RelationalStructure) -> Optional[Perm]:
    return structure_engine(r.n, r.tuples, ordered=True).find_nonidentity()


def canonical_key_rel(r: RelationalStructure) -> bytes:
    enc, _ = structure_engine(r.n, r.tuples, ordered=True).canonical()
    return repr(("R", r.arity, enc)).encode()


def multiplicity(r: RelationalStructure) -> int:
    """Largest number of tuples sharing one arity-sized entry set."""
    counts = Counter(
        frozenset(t) for t in r.tuples if len(frozenset(t)) == r.arity
    )
    return max(counts.values(), default=0)


def induced_rel(r: RelationalStructure, vertices: Iterable[int]) -> RelationalStructure:
    keep = sorted(set(vertices))
    if keep and (keep[0] < 0 or keep[-1] >= r.n):
        raise ValueError("vertex out of range")
    keep_set = set(keep)
    index = {v: i for i, v in enumerate(keep)}
    kept = [
        tuple(index[v] for v in t)
        for t in r.tuples
        if keep_set.issuperset(t)
    ]
    return RelationalStructure(len(keep), r.arity, kept)


def cyclic_closure(r: RelationalStructure) -> RelationalStructure:
    """Close the relation under all cyclic rotations of each tuple."""
    k = r.arity
    rotated = set()
    for t in r.tuples:
        for d in range(k):
            rotated.add(t[d:] + t[:d])
    return RelationalStructure(r.n, k, rotated)


def is_cyclic(r: RelationalStructure) -> bool:
    return cyclic_closure(r).tuples == r.tuples


def gen_single_arc() -> RelationalStructure:
    """One directed edge on two points: the smallest asymmetric binary
    relation, and critical: deleting either point kills asymmetry."""
    return RelationalStructure(2, 2, [(0, 1)])


def _anchored_ring_tuples(t: int):
    """Arity-3 tuple pairs read off the anchored ring on 3t+1 hubs: each
    chain edge becomes two tuples that agree on the designated third
    coordinate (the next ring vertex; the anchor for the extra edge)."""
    base, labels = _build_gkt_circ(3, t)
    index = {lab: i for i, lab in enumerate(labels)}
    ring = 3 * t
    tuples = []
    for i in range(ring):
        u, v, w = index[f"u{i}"], index[f"v0_{i}"], index[f"v0_{(i + 1) % ring}"]
        tuples.append((v, u, w))
        tuples.append((u, v, w))
    u0, v0, x = index["u0"], index["v0_0"], index["x"]
    tuples.append((v0, u0, x))
    tuples.append((u0, v0, x))
    return base.n, tuples, labels


def gen_r3t(t: int) -> RelationalStructure:
    """Ternary relation of multiplicity two derived from the anchored
    ring; asymmetric while every proper induced substructure is
    symmetric."""
    if t < 1:
        raise ValueError("need t >= 1")
    n, tuples, _ = _anchored_ring_tuples(t)
    return RelationalStructure(n, 3, tuples)


def r3t_labels(t: int) -> tuple[str, ...]:
    _, _, labels = _anchored_ring_tuples(t)
    return tuple(labels)


def _build_hcirc(k: int, t: int):
    if k < 4:
        raise ValueError("need arity k >= 4")
    if t < 1:
        raise ValueError("need t >= 1")
    n, base_tuples, labels = _anchored_ring_tuples(t)
    labels = list(labels)
    # base_tuples come in pairs per underlying edge, in edge order
    out = []
    for ei in range(len(base_tuples) // 2):
        fresh = []
        for j in range(1, k - 2):
            fresh.append(len(labels))
            labels.append(f"w{j}_{ei}")
        a, b = base_tuples[2 * ei], base_tuples[2 * ei + 1]
        out.append(a + tuple(fresh))
        out.append(b + tuple(fresh))
    return RelationalStructure(len(labels), k, out), tuple(labels)


def gen_hcirc(k: int, t: int) -> RelationalStructure:
    """Arity-k extension of the ternary ring relation: each tuple pair
    is padded with its own k-3 fresh trailing elements."""
    return _build_hcirc(k, t)[0]


def hcirc_labels(k: int, t: int) -> tuple[str, ...]:
    return _build_hcirc(k, t)[1]


def verify_minimal_asymmetric_rel(r: RelationalStructure) -> VerificationReport:
    """Asymmetric, with every induced substructure on 1 < n' < n points
    symmetric.  Induced substructures only; always exhaustive."""
    start = time.perf_counter()
    checked = 0
    witness = ""
    holds = True
    bad = find_nonidentity_automorphism_rel(r)
    if bad is not None:
        holds = False
        witness = to_rel(r) + perm_line(bad)
    else:
        n = r.n
        for mask in range(1, 1 << n):
            verts = [v for v in range(n) if mask >> v & 1]
            if not 1 < len(verts) < n:
                continue
            checked += 1
            sub = induced_rel(r, verts)
            if is_asymmetric_rel(sub):
                holds = False
                witness = "# vertices " + " ".join(map(str, verts)) + "\n" + to_rel(sub)
                break
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        property_name="minimal-asymmetric-rel",
        holds=holds,
        mode="exhaustive",
        samples=checked,
        seed=0,
        elapsed_ms=elapsed,
        witness_text=witness,
    )


def is_critical_asymmetric(r: RelationalStructure) -> tuple[bool, Optional[int]]:
    """Does deleting any single point destroy asymmetry?

    Binary relations only, and the input must itself be asymmetric.
    Returns (True, None) or (False, offending point).
    """
    if r.arity != 2:
        raise ValueError("critical asymmetry is defined for binary relations")
    if not is_asymmetric_rel(r):
        raise ValueError("input relation is not asymmetric")
    for v in range(r.n):
        rest = [u for u in range(r.n) if u != v]
        if len(rest) <= 1:
            continue
        sub = induced_rel(r, rest)
        if is_asymmetric_rel(sub):
            return False, v
    return True, None


# REL text format: header "n m k", then one line per tuple with the
# entries in relation order; "#" comments; LF endings.


def to_rel(r: RelationalStructure) -> str:
    lines = [f"{r.n} {r.m} {r.arity}"]
    for t in r.tuples:
        lines.append(" ".join(str(v) for v in t))
    return "\n".join(lines) + "\n"


def parse_rel(text: str) -> RelationalStructure:
    rows = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty REL document")
    header = rows[0].split()
    if len(header) != 3:
        raise ValueError(f"bad REL header: {rows[0]!r}")
    try:
        n, m, k = (int(x) for x in header)
    except ValueError as exc:
        raise ValueError(f"bad REL header: {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} tuple lines, found {len(rows) - 1}")
    tuples = []
    for row in rows[1:]:
        try:
            tuples.append(tuple(int(x) for x in row.split()))
        except ValueError as exc:
            raise ValueError(f"bad tuple line: {row!r}") from exc
    return RelationalStructure(n, k, tuples)
