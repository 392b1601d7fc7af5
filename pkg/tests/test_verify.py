from __future__ import annotations

import itertools
import random

import pytest

from krboot.apsets import ApSet
from krboot.constructions import ConstructionOutput, build_chain, build_h6, build_hprime
from krboot.graphs import UniformHypergraph, two_skeleton
from krboot.verify import (
    check_ap_free,
    check_induced_free,
    check_pair_condition,
    check_residue_lemma,
    verify_construction,
)


def naive_offenders(h: UniformHypergraph, r: int) -> set[tuple[int, ...]]:
    """Reference: every r-set spanning >= C(r,2) - 1 skeleton edges must be an edge."""
    skel = two_skeleton(h)
    edges = set(h.edges)
    bad = set()
    for sub in itertools.combinations(range(h.n), r):
        spanned = sum(skel.has_edge(a, b) for a, b in itertools.combinations(sub, 2))
        if spanned >= r * (r - 1) // 2 - 1 and sub not in edges:
            bad.add(sub)
    return bad


OVERLAP3 = UniformHypergraph(7, 5, [(0, 1, 2, 3, 4), (2, 3, 4, 5, 6)])


def test_induced_free_passes_on_chain_and_h6():
    assert check_induced_free(build_chain(3).hypergraph, 5).passed
    rep = check_induced_free(build_h6(20).hypergraph, 6)
    assert rep.passed and rep.witness is None
    assert rep.stats["pairs"] == 120 * 119 // 2


def test_induced_free_rejects_uniformity_mismatch():
    with pytest.raises(ValueError):
        check_induced_free(build_chain(2).hypergraph, 6)


def test_induced_free_fails_on_triple_overlap():
    rep = check_induced_free(OVERLAP3, 5)
    assert not rep.passed
    assert rep.witness_kind == "near-clique"
    # witness re-check straight from the definition
    skel = two_skeleton(OVERLAP3)
    spanned = sum(
        skel.has_edge(a, b) for a, b in itertools.combinations(rep.witness, 2)
    )
    assert spanned >= 9
    assert rep.witness not in set(OVERLAP3.edges)
    assert rep.witness in naive_offenders(OVERLAP3, 5)


def test_induced_free_verbose_lists_every_offender():
    rep = check_induced_free(OVERLAP3, 5, verbose=True)
    assert set(rep.failures) == naive_offenders(OVERLAP3, 5)
    assert (1, 2, 3, 4, 5) in rep.failures  # near-clique missing only the 1-6 pair
    assert rep.witness == rep.failures[0]


def test_induced_free_matches_naive_on_random_hypergraphs():
    rng = random.Random(420)
    for _ in range(60):
        n = rng.randint(5, 9)
        m = rng.randint(1, 4)
        edges = set()
        while len(edges) < m:
            edges.add(tuple(sorted(rng.sample(range(n), 4))))
        h = UniformHypergraph(n, 4, sorted(edges))
        rep = check_induced_free(h, 4)
        bad = naive_offenders(h, 4)
        assert rep.passed == (not bad)
        if bad:
            assert rep.witness in bad


def test_pair_condition_passes_on_builders():
    for c in (build_chain(1), build_chain(4), build_h6(50)):
        assert check_pair_condition(c.hypergraph, c.f_pairs).passed


def test_pair_condition_catches_tampering():
    c = build_chain(3)
    pairs = list(c.f_pairs)
    pairs[0] = (0, 1)  # inside edge 0 only, so containment in edge 1 is missing
    rep = check_pair_condition(c.hypergraph, pairs)
    assert not rep.passed and rep.witness == (0, 1)
    assert rep.witness_kind == "pair-containment"


def test_pair_condition_catches_extra_containment():
    # duplicate edge: the pair of edge 0 now also sits inside edge 2
    h = UniformHypergraph(8, 5, [(0, 1, 2, 3, 4), (3, 4, 5, 6, 7), (0, 1, 2, 3, 4)])
    pairs = [(3, 4), (6, 7), (0, 1)]
    rep = check_pair_condition(h, pairs)
    assert not rep.passed and rep.witness == (0, 2)


def test_pair_condition_last_pair_must_be_private():
    c = build_chain(2)
    pairs = [c.f_pairs[0], c.f_pairs[0]]  # final pair also lives in edge 0
    rep = check_pair_condition(c.hypergraph, pairs)
    assert not rep.passed and rep.witness[0] == 1


def test_pair_condition_length_mismatch_rejected():
    c = build_chain(2)
    with pytest.raises(ValueError):
        check_pair_condition(c.hypergraph, c.f_pairs[:1])


def test_ap_free_checker():
    assert check_ap_free(ApSet(5, (1, 2, 4, 5))).passed
    assert check_ap_free(ApSet(9, ())).passed
    assert check_ap_free(ApSet(9, (7,))).passed
    rep = check_ap_free(ApSet(5, (1, 3, 5)))
    assert not rep.passed and rep.witness == (1, 3, 5)
    a, b, c = rep.witness
    assert a + c == 2 * b
    rep2 = check_ap_free(ApSet(10, (2, 3, 4, 9)))
    assert rep2.witness == (2, 3, 4)


def test_residue_lemma_small_range():
    for n in (10, 20, 30, 50):
        rep = check_residue_lemma(n)
        assert rep.passed and rep.stats["combinations"] > 0
    with pytest.raises(ValueError):
        check_residue_lemma(9)


def test_verify_construction_merges_both_checks():
    rep = verify_construction(build_chain(3), 5)
    assert rep.passed
    assert rep.stats["cond_i"] == 1 and rep.stats["cond_ii"] == 1
    assert rep.stats["cond_i_pairs"] > 0 and rep.stats["cond_ii_pairs"] == 3


def test_verify_construction_reports_first_failing_condition():
    good = build_chain(2)
    bad = ConstructionOutput(OVERLAP3, [(2, 3), (3, 4)], good.skeleton, good.start, {})
    rep = verify_construction(bad, 5)
    assert not rep.passed and rep.witness_kind == "near-clique"
    assert rep.stats["cond_i"] == 0


def test_verify_construction_on_heavier_builders():
    assert verify_construction(build_h6(30), 6).passed
    assert verify_construction(build_hprime(120, ApSet(20, (10, 20))), 5).passed
