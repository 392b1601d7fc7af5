"""Structural checkers for the scaffolds: each returns a report whose witness,
on failure, can be re-confirmed directly from the definitions.

A scaffold supports the step-per-pair lower bound iff (i) every r-set of
skeleton vertices spanning at least C(r,2) - 1 edges is exactly a hyperedge,
and (ii) each designated pair lies in precisely its own hyperedge and the next
one (the final pair only in its own).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

from .graphs import UniformHypergraph, cliques_in_subset, two_skeleton

if TYPE_CHECKING:  # pragma: no cover
    from .apsets import ApSet
    from .constructions import ConstructionOutput


@dataclass
class VerificationReport:
    passed: bool
    witness: tuple | None = None
    witness_kind: str | None = None
    stats: dict[str, int] = field(default_factory=dict)
    failures: list[tuple] = field(default_factory=list)  # filled in verbose mode

    def witness_line(self) -> str | None:
        if self.witness is None:
            return None
        return f"WITNESS {self.witness_kind} " + " ".join(str(x) for x in self.witness)


def check_induced_free(
    h: UniformHypergraph, r: int, verbose: bool = False
) -> VerificationReport:
    """Does every near-complete r-set of the 2-skeleton sit inside a hyperedge?

    Scans all vertex pairs {u, v} in ascending order; every (r-2)-clique in
    their common skeleton neighbourhood spans, together with u and v, at least
    C(r,2) - 1 edges and must therefore equal some hyperedge's vertex set.
    Choosing {u, v} as the one possibly-missing pair makes this sweep catch
    every such r-set.  First offender (lowest pair) becomes the witness;
    ``verbose`` collects them all.
    """
    if h.r != r:
        raise ValueError(f"hypergraph is {h.r}-uniform, expected {r}")
    if r < 3:
        raise ValueError("need r >= 3")
    skel = two_skeleton(h)
    edge_sets = set(h.edges)
    stats = {"pairs": 0, "candidates": 0}
    failures: list[tuple] = []
    first: tuple | None = None
    for u in range(h.n):
        row = skel.adj[u]
        for v in range(u + 1, h.n):
            stats["pairs"] += 1
            common = row & skel.adj[v]
            if common.bit_count() < r - 2:
                continue
            for clique in cliques_in_subset(skel, common, r - 2):
                stats["candidates"] += 1
                cand = tuple(sorted((u, v) + clique))
                if cand not in edge_sets:
                    if first is None:
                        first = cand
                    if not verbose:
                        return VerificationReport(
                            False, first, "near-clique", stats, [first]
                        )
                    if cand not in failures:
                        failures.append(cand)
    if first is not None:
        return VerificationReport(False, first, "near-clique", stats, failures)
    return VerificationReport(True, None, None, stats)


def check_pair_condition(
    h: UniformHypergraph, f_pairs: Sequence[tuple[int, int]]
) -> VerificationReport:
    """Is pair i contained in exactly edges {i, i+1} (last pair: just itself)?

    Witness on failure is (i, j): the lowest pair index i whose containment
    set is wrong, with j the first edge index in the symmetric difference.
    """
    m = len(h.edges)
    if len(f_pairs) != m:
        raise ValueError(f"{len(f_pairs)} pairs for {m} edges")
    incidence: dict[int, set[int]] = {}
    for j, e in enumerate(h.edges):
        for v in e:
            incidence.setdefault(v, set()).add(j)
    stats = {"pairs": m, "containments": 0}
    for i, (u, v) in enumerate(f_pairs):
        containing = incidence.get(u, set()) & incidence.get(v, set())
        stats["containments"] += len(containing)
        expected = {i} if i == m - 1 else {i, i + 1}
        if containing != expected:
            j = min(containing.symmetric_difference(expected))
            return VerificationReport(False, (i, j), "pair-containment", stats)
    return VerificationReport(True, None, None, stats)


def check_ap_free(s: "ApSet") -> VerificationReport:
    """No three elements a < b < c with a + c = 2b."""
    elems = s.elements
    member = set(elems)
    stats = {"pairs": 0}
    for i, a in enumerate(elems):
        for c in elems[i + 1 :]:
            stats["pairs"] += 1
            if (a + c) % 2 == 0:
                b = (a + c) // 2
                if b in member:
                    return VerificationReport(False, (a, b, c), "ap-triple", stats)
    return VerificationReport(True, None, None, stats)


def check_residue_lemma(n: int) -> VerificationReport:
    """Brute-force the index-separation fact used by the 6-uniform scaffold.

    For every |d| <= n^2/100 and |s1|, |s2| <= 2 with d = s1 (mod n) and
    d = s2 (mod n + 20), it must follow that d = s1 = s2.  Witness is a
    violating (d, s1, s2).
    """
    if n < 10:
        raise ValueError("need n >= 10")
    ell = n + 20
    dmax = n * n // 100
    stats = {"combinations": 0}
    for d in range(-dmax, dmax + 1):
        ones = [s for s in range(-2, 3) if (d - s) % n == 0]
        twos = [s for s in range(-2, 3) if (d - s) % ell == 0]
        for s1 in ones:
            for s2 in twos:
                stats["combinations"] += 1
                if not (d == s1 == s2):
                    return VerificationReport(False, (d, s1, s2), "residue", stats)
    return VerificationReport(True, None, None, stats)


def verify_construction(c: "ConstructionOutput", r: int) -> VerificationReport:
    """Both scaffold conditions together; stats are merged with prefixes."""
    rep_i = check_induced_free(c.hypergraph, r)
    rep_ii = check_pair_condition(c.hypergraph, c.f_pairs)
    stats = {"cond_i": int(rep_i.passed), "cond_ii": int(rep_ii.passed)}
    for key, val in rep_i.stats.items():
        stats[f"cond_i_{key}"] = val
    for key, val in rep_ii.stats.items():
        stats[f"cond_ii_{key}"] = val
    failed = rep_i if not rep_i.passed else rep_ii
    if not failed.passed:
        return VerificationReport(
            False, failed.witness, failed.witness_kind, stats, failed.failures
        )
    return VerificationReport(True, None, None, stats)
