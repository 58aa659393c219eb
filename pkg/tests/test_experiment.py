import numpy as np
import pytest

from basisket import (
    ClassifierSpec,
    DistanceProfile,
    PatternVector,
    classification_threshold,
    exhaustive_profile,
    interval_summary,
    merge_profiles,
    probe_suite,
    profile_rho,
    stratified_sample_profile,
)

# frozen exhaustive aggregates for the pure rank-4 recipe:
# distance -> (function count, exact mean threshold)
C2C2_EXPECTED = {
    0: (16, 1.0),
    1: (256, 49 / 64),
    2: (1920, 9 / 16),
    3: (8960, 25 / 64),
    4: (21200, 0.3433962264150943),
    5: (21760, 0.36479779411764707),
    6: (9415, 0.27063197026022306),
    7: (1776, 0.0929054054054054),
    8: (216, 0.0),
    9: (16, 5 / 32),
    10: (1, 1.0),
}

SAMPLED_RECIPE = ("C2", "C2", "H")  # length 32, the smallest sampled rank


class TestExhaustiveProfile:
    def test_rank4_full_census(self):
        profile = exhaustive_profile(("C2", "C2"))
        assert profile.total() == 1 << 16
        assert profile.populated() == sorted(C2C2_EXPECTED)
        for d, (count, mean) in C2C2_EXPECTED.items():
            assert profile.counts[d] == count
            assert profile.mean(d) == pytest.approx(mean, abs=1e-12)

    def test_rank3_counts_and_means(self):
        profile = exhaustive_profile(("H", "C2"))
        assert [int(profile.counts[d]) for d in range(5)] == [8, 64, 104, 64, 16]
        assert profile.mean(1) == pytest.approx(0.5625, abs=1e-12)
        assert profile.mean(2) == pytest.approx(7 / 13, abs=1e-12)
        assert profile.mean(3) == pytest.approx(0.21875, abs=1e-12)
        assert profile.mean(4) == pytest.approx(0.0, abs=1e-9)
        # distance 2 spans a wide threshold range, up to a perfect score
        assert profile.mins[2] == pytest.approx(0.25, abs=1e-12)
        assert profile.maxs[2] == pytest.approx(1.0, abs=1e-12)

    def test_chunking_does_not_change_the_result(self):
        a = exhaustive_profile(("H", "H", "H"))
        b = exhaustive_profile(("H", "H", "H"), chunk=100)
        assert np.array_equal(a.counts, b.counts)
        assert np.allclose(a.sums, b.sums, atol=1e-12)

    def test_progress_callback(self):
        seen = []
        exhaustive_profile(("H", "H"), progress=lambda done, total: seen.append((done, total)))
        assert seen == [(16, 16)]

    def test_rank_cap(self):
        with pytest.raises(ValueError, match="exhaustive cap"):
            exhaustive_profile(SAMPLED_RECIPE)

    def test_spot_check_against_scalar_path(self):
        # batch aggregation must agree with the one-function reference API
        spec = ClassifierSpec(("C2", "H"))
        basis = spec.basis()
        profile = exhaustive_profile(spec.factors)
        check = DistanceProfile.empty(spec.factors, "exhaustive", 8)
        for value in range(256):
            report = classification_threshold(
                spec, basis, PatternVector(value, 8))
            check.add(report.nearest.distance, report.theta)
        assert np.array_equal(profile.counts, check.counts)
        assert np.allclose(profile.sums, check.sums, atol=1e-9)


class TestStratifiedSampleProfile:
    def test_meets_quota_and_is_deterministic(self):
        quotas = {1: 20, 2: 20, 3: 20, 8: 20}
        a = stratified_sample_profile(SAMPLED_RECIPE, quotas, seed=7)
        b = stratified_sample_profile(SAMPLED_RECIPE, quotas, seed=7)
        for d in quotas:
            assert a.counts[d] >= quotas[d]
        assert a.short_buckets == ()
        assert np.array_equal(a.counts, b.counts)
        assert np.array_equal(a.sums, b.sums)
        c = stratified_sample_profile(SAMPLED_RECIPE, quotas, seed=8)
        assert not np.array_equal(a.sums, c.sums)

    def test_sampled_thetas_are_exact_per_function(self):
        # re-derive one low-distance bucket analytically: every distance-1
        # function of this recipe scores the same exact threshold
        profile = stratified_sample_profile(SAMPLED_RECIPE, {1: 50}, seed=3)
        spec = ClassifierSpec(SAMPLED_RECIPE)
        basis = spec.basis()
        h = PatternVector(basis.members[0].value ^ 1, 32)
        want = classification_threshold(spec, basis, h).theta
        assert profile.mins[1] == pytest.approx(want, abs=1e-12)
        assert profile.maxs[1] == pytest.approx(want, abs=1e-12)

    def test_unreachable_bucket_is_flagged_not_fatal(self):
        # distance-15 hits are ~5e-5 of attempts; a factor-2 cap must
        # come up short and say so
        profile = stratified_sample_profile(
            SAMPLED_RECIPE, {15: 50}, seed=1, attempt_factor=2)
        assert 15 in profile.short_buckets
        assert profile.counts[15] < 50

    def test_quota_distance_range(self):
        with pytest.raises(ValueError, match="outside"):
            stratified_sample_profile(SAMPLED_RECIPE, {17: 10}, seed=0)
        with pytest.raises(ValueError, match="outside"):
            stratified_sample_profile(SAMPLED_RECIPE, {0: 10}, seed=0)

    def test_small_ranks_are_redirected_to_exhaustive(self):
        with pytest.raises(ValueError, match="exhaustively enumerable"):
            stratified_sample_profile(("C2", "C2"), {1: 10}, seed=0)


class TestProbeSuite:
    def test_pure_rank4_probes(self):
        probes = dict(probe_suite(("C2", "C2")))
        assert probes["all_ones"].nearest.distance == 10
        assert probes["all_ones"].theta == pytest.approx(1.0, abs=1e-9)
        assert probes["all_zeros"].nearest.distance == 6
        assert probes["all_zeros"].theta == pytest.approx(1.0, abs=1e-9)
        for k in range(16):
            report = probes[f"complement_of_member_{k}"]
            assert report.nearest.distance == 8
            assert report.theta == pytest.approx(0.0, abs=1e-9)

    def test_rank6_all_ones_spike(self):
        probes = dict(probe_suite(("C2", "C2", "C2")))
        assert probes["all_ones"].nearest.distance == 36
        assert probes["all_ones"].theta == pytest.approx(1.0, abs=1e-9)
        assert probes["complement_of_member_0"].nearest.distance == 32

    def test_mixed_recipe_complements_cover_the_far_half(self):
        probes = dict(probe_suite(SAMPLED_RECIPE))
        for k in range(32):
            report = probes[f"complement_of_member_{k}"]
            assert report.nearest.distance == 16
            assert report.theta == pytest.approx(0.0, abs=1e-9)


class TestIntervalSummary:
    def test_rank4_exhaustive_regions(self):
        profile = exhaustive_profile(("C2", "C2"))
        summary = interval_summary(profile, profile_rho(("C2", "C2")))
        r1, r2, r3 = summary.regions
        assert (r1.low, r1.high, r1.consistent) == (1, 2, True)
        assert (r2.low, r2.high, r2.consistent) == (3, 7, True)
        # the far region holds except the documented distance-9 bump;
        # the rho = 10 spike itself is exempted
        assert (r3.low, r3.high) == (8, 16)
        assert r3.offending == (9,)
        assert not summary.consistent
        assert summary.rho == 10
        assert summary.rho_spike == pytest.approx(1.0, abs=1e-9)
        assert 5 in summary.monotonicity_violations
        assert 10 in summary.monotonicity_violations

    def test_empty_profile_rejected(self):
        empty = DistanceProfile.empty(("H",), "exhaustive", 2)
        with pytest.raises(ValueError, match="empty"):
            interval_summary(empty, None)


class TestMergeProfiles:
    def test_counts_and_sums_add(self):
        quotas = {1: 10, 2: 10}
        a = stratified_sample_profile(SAMPLED_RECIPE, quotas, seed=1)
        b = stratified_sample_profile(SAMPLED_RECIPE, quotas, seed=2)
        merged = merge_profiles(a, b)
        assert np.array_equal(merged.counts, a.counts + b.counts)
        assert np.allclose(merged.sums, a.sums + b.sums)
        assert np.array_equal(merged.mins[:3], np.minimum(a.mins, b.mins)[:3])

    def test_metadata_mismatch(self):
        a = exhaustive_profile(("H", "H"))
        b = exhaustive_profile(("H", "C2"))
        with pytest.raises(ValueError, match="different metadata"):
            merge_profiles(a, b)


class TestProfileRho:
    def test_values(self):
        assert profile_rho(("C2",)) == 3
        assert profile_rho(("C2", "C2")) == 10
        assert profile_rho(("H", "C2")) == "not-uniform"
