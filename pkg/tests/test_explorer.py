"""Sweeps: exhaustive subset enumeration, fiber-map classification, bijection
searches, and the deterministic parallel engine."""

import pytest

from transverse.bilinear import orth
from transverse.detrng import SplitMix64
from transverse.explorer import (
    CapExceeded,
    bogolyubov_explore,
    classify_hyperplane_fibers,
    exhaustive_subset_sweep,
    fundamental_sweep,
    perm_rank,
    perm_unrank,
    search_sigma,
    subspace_in_sumset,
    verify_collineation_lemma,
    xi_line_sweep,
)
from transverse.pairsets import PairSet, SingleSet, phi, sumset_word

_EXHAUSTIVE_CACHE = {}


def exhaustive22(jobs=1):
    if jobs not in _EXHAUSTIVE_CACHE:
        _EXHAUSTIVE_CACHE[jobs] = exhaustive_subset_sweep(2, 2, jobs=jobs)
    return _EXHAUSTIVE_CACHE[jobs]


def test_perm_rank_roundtrip():
    rng = SplitMix64(51)
    assert perm_unrank(0, 4) == (0, 1, 2, 3)
    assert perm_unrank(23, 4) == (3, 2, 1, 0)
    for _ in range(200):
        n = rng.below(6) + 2
        r = rng.below(_factorial(n))
        perm = perm_unrank(r, n)
        assert sorted(perm) == list(range(n))
        assert perm_rank(perm) == r


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_exhaustive_sweep_p2_n2():
    report = exhaustive22(jobs=4)
    assert report.ok
    assert report.counts == {
        "subsets": 65536,
        "transverse_nonempty": 107,
        "transverse_empty": 1,
        "transverse_bilinear": 107,
        "transverse_non_bilinear": 0,
        "bilinear_sets": 107,
        "oracle_mismatch": 0,
    }


def test_exhaustive_sweep_cap():
    with pytest.raises(CapExceeded):
        exhaustive_subset_sweep(3, 2)


def test_classification_p2_n2():
    report = classify_hyperplane_fibers(2, 2)
    assert report.ok
    c = report.counts
    assert c["valid"] == 22
    assert (c["alt1"], c["alt2"], c["alt3"]) == (16, 6, 0)
    assert c["bilinear"] == 22
    assert c["leaf_rejected"] == 0
    assert c["raw"] == 256 and c["rejected"] == 234


def test_classification_p3_n2():
    report = classify_hyperplane_fibers(3, 2)
    assert report.ok
    c = report.counts
    assert c["raw"] == 3125
    assert c["valid"] == 49
    assert (c["alt1"], c["alt2"], c["alt3"]) == (25, 24, 0)
    assert c["bilinear"] == 49


def test_classification_p5_n2():
    report = classify_hyperplane_fibers(5, 2, jobs=4)
    assert report.ok
    c = report.counts
    assert c["raw"] == 823543
    assert c["valid"] == 769
    assert (c["alt1"], c["alt2"], c["alt3"]) == (49, 120, 600)
    assert c["bilinear"] == 169
    assert c["leaf_rejected"] == 0


def test_sigma_search_exhaustive():
    report = search_sigma(2, 3, jobs=2)
    assert report.ok
    c = report.counts
    assert c["candidates"] == 5040
    assert c["non_bilinear"] == 2352
    assert c["bilinear"] == 2688
    assert c["projective"] == 168
    assert c["projective_non_bilinear"] == 0
    # the distinguished permutation sits at lexicographic rank 3 and is the
    # first non-bilinear hit
    assert report.witnesses[0] == [3, [2, 1]]


def test_sigma_search_samples_reproducible():
    a = search_sigma(2, 3, mode="samples", samples=100, seed=9)
    b = search_sigma(2, 3, mode="samples", samples=100, seed=9, jobs=4)
    assert a.canonical() == b.canonical()
    assert a.counts["candidates"] == 100
    with pytest.raises(ValueError):
        search_sigma(2, 3, mode="samples", samples=100)  # seed missing


def test_parallel_results_match_serial():
    assert exhaustive22(jobs=4).canonical() == exhaustive22(jobs=1).canonical()
    assert (
        classify_hyperplane_fibers(3, 2, jobs=3).canonical()
        == classify_hyperplane_fibers(3, 2).canonical()
    )


def test_collineation_p2_n2():
    report = verify_collineation_lemma(2, 2, 2)
    assert report.ok
    assert report.counts == {
        "maps": 27,
        "line_condition": 9,
        "constant": 3,
        "injective": 6,
        "violations": 0,
    }


def test_collineation_p2_dom3_cod2():
    # maps from the Fano plane to the 3-point line: only constants pass
    report = verify_collineation_lemma(2, 3, 2)
    assert report.ok
    assert report.counts["line_condition"] == 3
    assert report.counts["constant"] == 3
    assert report.counts["injective"] == 0


def test_fundamental_p2_n3():
    report = fundamental_sweep(2, 3)
    assert report.ok
    assert report.counts == {
        "permutations": 5040,
        "line_preserving": 168,
        "projective": 168,
        "violations": 0,
    }
    with pytest.raises(ValueError):
        fundamental_sweep(2, 2)  # the equivalence needs dimension >= 3


def test_xi_sweep_p5():
    report = xi_line_sweep(5, jobs=4)
    assert report.ok
    c = report.counts
    assert c["bijections"] == 720
    assert c["projective"] == 120
    assert c["projective_bilinear"] == 120
    assert c["non_projective"] == 600
    assert c["non_projective_non_bilinear"] == 600
    assert c["non_projective_ann_zero"] == 600
    assert c["violations"] == 0


def test_bogolyubov_explore_finds_structure():
    rng = SplitMix64(52)
    for _ in range(10):
        mask = 0
        for _ in range(rng.below(10) + 3):
            mask |= 1 << rng.below(2**4)
        a = PairSet(2, 2, 2, mask)
        report = bogolyubov_explore(a, word="HVH")
        t = phi(a, "HVH")
        assert report.image.indicator == t.indicator
        if report.found:
            z = orth(report.forms, report.w1, report.w2)
            # the reported bilinear set sits inside the operator image
            assert z.indicator & ~t.indicator == 0
            assert z.size >= 1


def test_subspace_in_sumset():
    rng = SplitMix64(53)
    for _ in range(20):
        mask = 0
        for _ in range(rng.below(6) + 2):
            mask |= 1 << rng.below(2**3)
        a = SingleSet(2, 3, mask | 1)
        sub = subspace_in_sumset(a, codim_max=3)
        t = sumset_word(a, "+A+A-A-A")
        assert sub is not None
        for idx in sub.element_indices():
            assert t.contains(idx)


def test_report_canonical_shape():
    report = classify_hyperplane_fibers(2, 2)
    doc = report.canonical()
    assert set(doc) == {"kind", "parameters", "payload"}
    assert set(doc["payload"]) == {"counts", "ok", "witnesses"}
    # wall time and worker count never enter the canonical form
    assert "wall_time" not in str(doc)
