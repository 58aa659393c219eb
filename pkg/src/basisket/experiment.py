"""Exhaustive and sampled threshold experiments.

Exhaustive mode enumerates every Boolean function of length 8 or 16 and
buckets the classification threshold by the exact Hamming distance from
the class.  For lengths 32 and 64 exhaustive enumeration is out of
reach, so a stratified sampler flips random bit subsets of random basis
members and credits each sample to its true distance bucket, while
deterministic probes (all-ones, all-zeros, member complements) cover the
far half of the distance axis that random flips cannot reach.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .classifier import (
    ClassifierSpec,
    ThresholdReport,
    apply_classifier,
    classification_threshold,
)
from .patterns import NOT_UNIFORM, PatternBasis, PatternVector, class_rho

#: Exhaustive mode is limited to pattern lengths 8 and 16.
EXHAUSTIVE_RANK_CAP = 4

#: Stratified buckets give up after this many attempts per requested sample.
ATTEMPT_FACTOR = 50


@dataclass
class DistanceProfile:
    """Per-distance aggregates of the classification threshold."""

    recipe: tuple[str, ...]
    mode: str  # "exhaustive" | "sampled"
    length: int
    counts: np.ndarray  # int64, indexed by distance 0..length
    sums: np.ndarray
    mins: np.ndarray
    maxs: np.ndarray
    seed: int | None = None
    quotas: dict[int, int] = field(default_factory=dict)
    short_buckets: tuple[int, ...] = ()

    @classmethod
    def empty(cls, recipe: Sequence[str], mode: str, length: int,
              seed: int | None = None,
              quotas: Mapping[int, int] | None = None) -> "DistanceProfile":
        size = length + 1
        return cls(
            recipe=tuple(recipe), mode=mode, length=length,
            counts=np.zeros(size, dtype=np.int64),
            sums=np.zeros(size),
            mins=np.full(size, np.inf),
            maxs=np.full(size, -np.inf),
            seed=seed, quotas=dict(quotas or {}))

    def add(self, distance: int, theta: float) -> None:
        self.counts[distance] += 1
        self.sums[distance] += theta
        self.mins[distance] = min(self.mins[distance], theta)
        self.maxs[distance] = max(self.maxs[distance], theta)

    def add_batch(self, distances: np.ndarray, thetas: np.ndarray) -> None:
        np.add.at(self.counts, distances, 1)
        np.add.at(self.sums, distances, thetas)
        np.minimum.at(self.mins, distances, thetas)
        np.maximum.at(self.maxs, distances, thetas)

    def mean(self, distance: int) -> float:
        if self.counts[distance] == 0:
            raise ValueError(f"no samples at distance {distance}")
        return float(self.sums[distance] / self.counts[distance])

    def populated(self) -> list[int]:
        """Distances with at least one sample."""
        return [d for d in range(self.length + 1) if self.counts[d] > 0]

    def total(self) -> int:
        return int(self.counts.sum())


def _batch_thetas(spec: ClassifierSpec, members: np.ndarray,
                  values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Exact (distance, theta) for a batch of function values (uint64)."""
    length = spec.dim
    shifts = np.arange(length, dtype=np.uint64)
    bits = ((values[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.float64)
    amps = (1.0 - 2.0 * bits) / np.sqrt(length)
    apply_classifier(spec, amps)
    probs = amps * amps
    dist = np.bitwise_count(values[:, None] ^ members[None, :]).astype(np.int64)
    dmin = dist.min(axis=1)
    thetas = np.where(dist == dmin[:, None], probs, 0.0).sum(axis=1)
    return dmin, thetas


def exhaustive_profile(
    recipe: Sequence[str],
    progress: Callable[[int, int], None] | None = None,
    chunk: int = 1 << 14,
) -> DistanceProfile:
    """Evaluate every Boolean function of the recipe's length.

    Deterministic; the result is independent of chunking.  `progress`
    receives (functions done, functions total) after each chunk.
    """
    spec = ClassifierSpec(tuple(recipe))
    if spec.total_bits > EXHAUSTIVE_RANK_CAP:
        raise ValueError(
            f"rank {spec.total_bits} exceeds the exhaustive cap of "
            f"{EXHAUSTIVE_RANK_CAP}; use stratified_sample_profile instead")
    basis = spec.basis()
    members = np.array(basis.member_values(), dtype=np.uint64)
    length = spec.dim
    total = 1 << length
    profile = DistanceProfile.empty(recipe, "exhaustive", length)
    for start in range(0, total, chunk):
        values = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        dmin, thetas = _batch_thetas(spec, members, values)
        profile.add_batch(dmin, thetas)
        if progress is not None:
            progress(min(start + chunk, total), total)
    return profile


def _sample_attempts(rng: np.random.Generator, members: np.ndarray,
                     length: int, d: int, count: int) -> np.ndarray:
    """Random functions at distance exactly d from a random member each
    (true class distance may be smaller)."""
    picks = rng.integers(0, len(members), size=count)
    # random d-subsets of bit positions, one row per attempt
    positions = np.argpartition(rng.random((count, length)), d - 1, axis=1)[:, :d]
    flips = np.bitwise_or.reduce(
        np.uint64(1) << positions.astype(np.uint64), axis=1)
    return members[picks] ^ flips


def stratified_sample_profile(
    recipe: Sequence[str],
    per_distance_quota: Mapping[int, int],
    seed: int,
    attempt_factor: int = ATTEMPT_FACTOR,
) -> DistanceProfile:
    """Sampled profile for rank-5/6 recipes.

    For each target distance d, flips a uniformly random d-subset of a
    uniformly random member's bits, computes the true minimum distance,
    and credits the sample to its true bucket.  A bucket that stays
    short of quota after attempt_factor * quota attempts is flagged in
    `short_buckets` rather than failing the run.  Deterministic given
    the seed.

    Flip targets just below 2**(n-1) hit their exact distance rarely
    (most flips land nearer some other member), so filling those buckets
    needs an attempt_factor far above the default.
    """
    spec = ClassifierSpec(tuple(recipe))
    if spec.total_bits <= EXHAUSTIVE_RANK_CAP:
        raise ValueError(
            f"rank {spec.total_bits} is exhaustively enumerable; "
            "use exhaustive_profile")
    basis = spec.basis()
    members = np.array(basis.member_values(), dtype=np.uint64)
    length = spec.dim
    half = length // 2
    for d in per_distance_quota:
        if not 1 <= d <= half:
            raise ValueError(f"quota distance {d} outside [1, {half}]")
    rng = np.random.default_rng(seed)
    profile = DistanceProfile.empty(
        recipe, "sampled", length, seed=seed, quotas=per_distance_quota)
    short: list[int] = []
    for d in sorted(per_distance_quota):
        quota = per_distance_quota[d]
        cap = attempt_factor * quota
        attempts = 0
        batch = 64
        while profile.counts[d] < quota and attempts < cap:
            batch = min(batch, cap - attempts)
            values = _sample_attempts(rng, members, length, d, batch)
            dmin, thetas = _batch_thetas(spec, members, values)
            profile.add_batch(dmin, thetas)
            attempts += batch
            batch = min(batch * 2, 1 << 17)
        if profile.counts[d] < quota:
            short.append(d)
    profile.short_buckets = tuple(short)
    return profile


def probe_suite(
    recipe: Sequence[str],
) -> list[tuple[str, ThresholdReport]]:
    """Deterministic probes: all-ones, all-zeros, each member's complement.

    For pure-Q2 recipes the all-ones probe sits at the uniform distance
    rho from every member, so its threshold is exactly 1.  Member
    complements sit at distance 2**(n-1), covering the far region that
    random flip sampling cannot reach.
    """
    spec = ClassifierSpec(tuple(recipe))
    basis = spec.basis()
    length = spec.dim
    results: list[tuple[str, ThresholdReport]] = []
    all_ones = PatternVector((1 << length) - 1, length)
    all_zeros = PatternVector(0, length)
    results.append(("all_ones", classification_threshold(spec, basis, all_ones)))
    results.append(("all_zeros", classification_threshold(spec, basis, all_zeros)))
    for k, member in enumerate(basis.members):
        results.append((
            f"complement_of_member_{k}",
            classification_threshold(spec, basis, member.negate())))
    return results


@dataclass(frozen=True)
class RegionVerdict:
    """Consistency verdict for one distance region."""

    low: int
    high: int
    expectation: str
    consistent: bool
    offending: tuple[int, ...]


@dataclass(frozen=True)
class IntervalSummary:
    """Three-region view of a profile: confident-yes, fading, zero."""

    regions: tuple[RegionVerdict, RegionVerdict, RegionVerdict]
    rho: int | None
    rho_spike: float | None
    monotonicity_violations: tuple[int, ...]

    @property
    def consistent(self) -> bool:
        return all(r.consistent for r in self.regions)


def interval_summary(profile: DistanceProfile, rho: int | str | None) -> IntervalSummary:
    """Classify populated buckets into the three standard regions.

    Region 1 (1 .. L/8): mean above 0.5.  Region 2 (L/8+1 .. L/2-1):
    mean strictly between 0 and 0.5.  Region 3 (L/2 .. L): mean zero,
    except the rho bucket when the class has a uniform zero count, where
    the mean must be 1.  Empty buckets are skipped.  Monotonicity
    violations are reported informationally and never fail a region.
    """
    if profile.total() == 0:
        raise ValueError("profile is empty")
    length = profile.length
    b1, b2 = length // 8, length // 2
    uniform_rho = rho if isinstance(rho, int) else None

    def check(low: int, high: int, expectation: str) -> RegionVerdict:
        bad = []
        for d in profile.populated():
            if not low <= d <= high:
                continue
            mean = profile.mean(d)
            if expectation == "above_half":
                ok = mean > 0.5
            elif expectation == "below_half":
                ok = 0.0 < mean < 0.5
            else:  # "zero", with the rho spike exemption
                if d == uniform_rho:
                    ok = abs(mean - 1.0) <= 1e-9
                else:
                    ok = mean <= 1e-9
            if not ok:
                bad.append(d)
        return RegionVerdict(low, high, expectation, not bad, tuple(bad))

    regions = (
        check(1, b1, "above_half"),
        check(b1 + 1, b2 - 1, "below_half"),
        check(b2, length, "zero"),
    )
    spike = None
    if uniform_rho is not None and profile.counts[uniform_rho] > 0:
        spike = profile.mean(uniform_rho)
    pop = [d for d in profile.populated() if d >= 1]
    mono = tuple(
        d2 for d1, d2 in zip(pop, pop[1:])
        if profile.mean(d2) > profile.mean(d1) + 1e-12)
    return IntervalSummary(regions, uniform_rho, spike, mono)


def merge_profiles(a: DistanceProfile, b: DistanceProfile) -> DistanceProfile:
    """Bucket-wise reduction of two shards of the same run."""
    if (a.recipe, a.mode, a.length) != (b.recipe, b.mode, b.length):
        raise ValueError(
            f"cannot merge profiles with different metadata: "
            f"{(a.recipe, a.mode, a.length)} vs {(b.recipe, b.mode, b.length)}")
    merged = DistanceProfile.empty(a.recipe, a.mode, a.length,
                                   seed=a.seed, quotas=a.quotas)
    merged.counts = a.counts + b.counts
    merged.sums = a.sums + b.sums
    merged.mins = np.minimum(a.mins, b.mins)
    merged.maxs = np.maximum(a.maxs, b.maxs)
    merged.short_buckets = tuple(sorted(set(a.short_buckets) | set(b.short_buckets)))
    return merged


def profile_rho(recipe: Sequence[str]) -> int | str:
    """Zero-count uniformity of the recipe's basis (see class_rho)."""
    return class_rho(ClassifierSpec(tuple(recipe)).basis())
