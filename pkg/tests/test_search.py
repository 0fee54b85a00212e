"""Labeled-space scans, class enumeration, and checkpointing."""

import itertools
import math

import pytest

from minasym import (
    Hypergraph,
    ResourceGuardError,
    canonical_form,
    canonical_key,
    classes_by_edge_count,
    enumerate_k_graphs,
    find_minimal_asymmetric,
    gen_figure2,
    is_asymmetric,
    is_automorphism,
    min_asymmetric_order,
    read_checkpoint,
    scan_classes,
    transposition,
    verify_lemma_all_symmetric,
    write_checkpoint,
)


def test_full_scan_is_complete_when_symmetric():
    scan = verify_lemma_all_symmetric(3, 5)
    assert scan.all_symmetric
    assert scan.witness is None
    assert scan.total_labeled == 1024
    assert scan.scanned == 1024


def test_scan_finds_an_asymmetric_witness():
    scan = verify_lemma_all_symmetric(2, 6)
    assert not scan.all_symmetric
    assert scan.witness is not None
    assert is_asymmetric(scan.witness)
    assert scan.total_labeled == 1 << 15


def test_half_scan_respects_the_complement_bound():
    scan = verify_lemma_all_symmetric(2, 6, half=True)
    assert not scan.all_symmetric
    assert scan.witness.m <= 15 // 2
    assert scan.scanned < scan.total_labeled


def test_min_order_small_uniformities():
    assert min_asymmetric_order(2, 7)[0] == 6
    assert min_asymmetric_order(3, 7)[0] == 6
    assert min_asymmetric_order(4, 6)[0] == 6
    n, w = min_asymmetric_order(3, 6)
    assert is_asymmetric(w)
    assert w.n == n == 6


def test_min_order_none_below_threshold():
    n, w = min_asymmetric_order(3, 5)
    assert n is None and w is None


def test_min_order_consistent_with_full_scans():
    n0, _ = min_asymmetric_order(3, 6)
    for n in range(2, n0):
        assert verify_lemma_all_symmetric(3, n).all_symmetric


def test_enumerate_matches_known_class_counts():
    # unlabeled graph counts on 4 and 5 vertices, then the 3-uniform
    # count on 5 vertices, which mirrors the 2-uniform one by edge
    # complementation inside the 5-point triple space
    assert len(enumerate_k_graphs(2, 4)) == 11
    assert len(enumerate_k_graphs(2, 5)) == 34
    assert len(enumerate_k_graphs(3, 5)) == 34


def test_enumerate_reps_are_canonical_and_distinct():
    reps = enumerate_k_graphs(2, 5)
    keys = {canonical_key(r) for r in reps}
    assert len(keys) == len(reps)


def test_scan_classes_outcome():
    out = scan_classes(3, 5)
    assert (out.k, out.n) == (3, 5)
    assert out.total_labeled == 1024
    assert out.iso_classes == 34
    assert out.asymmetric_classes == 0
    assert out.witnesses == ()
    out6 = scan_classes(2, 6)
    assert out6.iso_classes == 156
    assert out6.asymmetric_classes == 8
    assert len(out6.witnesses) == 8
    assert all(is_asymmetric(w) for w in out6.witnesses)


def test_augmentation_agrees_with_scan_dedup():
    for k, n in [(2, 4), (2, 5), (3, 5), (4, 5), (2, 6)]:
        scan_keys = {}
        for r in enumerate_k_graphs(k, n):
            scan_keys.setdefault(r.m, set()).add(canonical_key(r))
        aug_keys = {}
        for m, layer in classes_by_edge_count(n, k):
            if layer:
                aug_keys[m] = {canonical_key(r) for r in layer}
        assert scan_keys == aug_keys, (k, n)


def test_augmentation_is_duplicate_free():
    total = 0
    for _, layer in classes_by_edge_count(6, 2):
        keys = {canonical_key(r) for r in layer}
        assert len(keys) == len(layer)
        total += len(layer)
    assert total == 156


def test_augmentation_max_edges_cutoff():
    levels = [m for m, layer in classes_by_edge_count(5, 2, max_edges=3)]
    assert levels == [0, 1, 2, 3]


def test_find_minimal_asymmetric_graphs_on_six_points():
    found = find_minimal_asymmetric(2, 6)
    # all eight asymmetric graph classes on six points are minimal:
    # every proper induced subgraph lives on at most five points
    assert len(found) == 8
    assert all(is_asymmetric(g) for g in found)


def test_find_minimal_asymmetric_triple_systems_on_six_points():
    found = find_minimal_asymmetric(3, 6)
    # same collapse as for 2-graphs: nothing asymmetric lives on
    # fewer points, so minimal count == asymmetric class count
    assert len(found) == 1010
    assert len(found) == scan_classes(3, 6, keep_witnesses=False).asymmetric_classes
    assert canonical_form(gen_figure2()) in found
    by_edges = sorted(h.m for h in found)
    assert by_edges[0] == 4 and by_edges[1] == 5


def test_scan_verdict_explained_by_swappable_pairs():
    """On k+1 points a k-edge is the complement of one vertex, so any
    instance short of the full edge set admits a transposition fixing
    the marked-vertex set; extracting it replays the scan verdict."""
    for k in (3, 4, 5, 6):
        n = k + 1
        all_edges = list(itertools.combinations(range(n), k))
        assert verify_lemma_all_symmetric(k, n).all_symmetric
        for mask in range(1 << len(all_edges)):
            chosen = [e for i, e in enumerate(all_edges) if mask >> i & 1]
            if len(chosen) == len(all_edges):
                continue
            h = Hypergraph(n, chosen, k=k)
            swap = next(
                (
                    transposition(n, a, b)
                    for a, b in itertools.combinations(range(n), 2)
                    if is_automorphism(h, transposition(n, a, b))
                ),
                None,
            )
            assert swap is not None


def test_bit_guard_refuses_oversized_spaces():
    with pytest.raises(ResourceGuardError):
        verify_lemma_all_symmetric(2, 8)
    with pytest.raises(ResourceGuardError):
        enumerate_k_graphs(3, 10)
    assert math.comb(8, 2) > 24


def test_complement_duality_of_class_counts():
    a = scan_classes(2, 5, keep_witnesses=False)
    b = scan_classes(3, 5, keep_witnesses=False)
    assert a.iso_classes == b.iso_classes
    assert a.asymmetric_classes == b.asymmetric_classes


def test_checkpoint_round_trip(tmp_path):
    path = str(tmp_path / "scan.ck")
    write_checkpoint(path, 3, 6, 12345)
    assert read_checkpoint(path) == (3, 6, 12345)
    (tmp_path / "bad.ck").write_text("1 2\n")
    with pytest.raises(ValueError):
        read_checkpoint(str(tmp_path / "bad.ck"))


def test_scan_writes_resumable_checkpoints(tmp_path):
    path = str(tmp_path / "scan.ck")
    scan = verify_lemma_all_symmetric(3, 5, checkpoint_path=path)
    assert scan.all_symmetric
    k, n, last = read_checkpoint(path)
    assert (k, n) == (3, 5)
    assert last == scan.total_labeled - 1
    resumed = verify_lemma_all_symmetric(3, 5, start_mask=last + 1, checkpoint_path=path)
    assert resumed.all_symmetric
    assert resumed.scanned == 0


def test_resume_skips_scanned_prefix():
    full = verify_lemma_all_symmetric(2, 5)
    partial = verify_lemma_all_symmetric(2, 5, start_mask=512)
    assert partial.scanned == full.scanned - 512
    assert partial.all_symmetric
