"""Smoke tests for the python bindings."""

import pytest

import sumset_minimax as sm


def test_arithmetic_helpers():
    assert sm.least_prime_divisor(35) == 5
    assert sm.largest_divisor_at_most(12, 5) == 4
    assert sm.coset_sumset_size(1) == 0
    assert sm.coset_sumset_size(2) == 1
    assert sm.coset_sumset_size(9) == 9
    assert sm.is_prime(13)
    params = sm.group_params(12, 5)
    assert params["top_class_size"] == 3
    assert params["least_prime"] == 2


def test_restricted_sumset():
    assert sm.restricted_sumset([0, 1, 2, 3], mod=7) == [1, 2, 3, 4, 5]
    assert sm.restricted_sumset([0, 3, 6], mod=9) == [0, 3, 6]
    assert sm.restricted_sumset([4], mod=9) == []


def test_classify():
    arc = sm.classify([4, 5, 6, 0], mod=7)
    assert arc["kind"] == "arc"
    assert arc["start"] == 4
    ap = sm.classify([0, 2, 4, 6, 8], mod=11)
    assert ap["kind"] == "arithmetic-progression"
    assert ap["difference"] == 2
    coset = sm.classify([1, 4, 7], mod=9)
    assert coset["kind"] == "coset-subset"
    assert coset["subgroup_size"] == 3


def test_affine_canonical_form():
    assert sm.affine_canonical_form([0, 2, 4], p=7) == [0, 1, 2]
    with pytest.raises(ValueError):
        sm.affine_canonical_form([0, 2], p=8)


def test_colorings():
    blocks = sm.block_partition(12, 5)
    assert blocks == [[0, 1, 2], [3, 4, 5], [6, 7], [8, 9], [10, 11]]
    cosets = sm.coset_partition(9, 3)
    assert cosets == [[0, 3, 6], [1, 4, 7], [2, 5, 8]]
    evaluation = sm.evaluate_coloring(cosets, n=9)
    assert evaluation["per_class_sumset_sizes"] == [3, 3, 3]
    assert evaluation["value"] == 3
    best = sm.best_construction(10, 2)
    assert best["method"] == "coset"
    assert best["evaluation"]["value"] == 5


def test_phi():
    assert sm.phi_lower_bound(12, 5) == 2
    assert sm.phi_upper_bound(10, 2) == 5
    exact = sm.phi_exact(13, 3)
    assert exact["exact"] == 7
    assert exact["regime"] == "prime"
    gap = sm.phi_exact(10, 2)
    assert gap["exact"] is None
    assert (gap["lower"], gap["upper"]) == (2, 5)


def test_oracle():
    result = sm.brute_force_phi(6, 2)
    assert result["value"] == 3
    assert sm.evaluate_coloring(result["witness"], n=6)["value"] == 3
    feasible = sm.feasible(4, 2, threshold=1)
    assert feasible["status"] == "found"
    assert sm.feasible(7, 2, threshold=4)["status"] == "infeasible"
    optimal = sm.enumerate_optimal(5, 5)
    assert optimal["value"] == 0
    assert len(optimal["colorings"]) == 1


def test_stability():
    report = sm.stability_report([0, 3, 1], mod=9, subgroup_size=3)
    assert report["cross_bound"] == 3
    assert report["sumset_size"] == 3
    assert report["cross_tight"]
    forced = sm.stability_report([1, 4, 7], mod=9, subgroup_size=3, slack=0)
    assert forced["concentrated"] is True


def test_quotient_and_subgroups():
    ctx = sm.subgroup_of_size(9, 3)
    assert ctx["cosets"] == [[0, 3, 6], [1, 4, 7], [2, 5, 8]]
    stats = sm.quotient_stats([0, 3, 1], mod=9, subgroup_size=3)
    assert stats["occupied"] == 2
    assert stats["heaviest"] == 0
    assert stats["heaviest_size"] == 2


def test_verify_suite():
    result = sm.verify_suite("lemma-block", nmax=20)
    assert result["violations"] == 0
    assert result["cases"] > 0
