"""Serialization and chart emitters for profiles and distributions.

CSV schema per profile row: distance, count, mean_theta, min_theta,
max_theta.  The JSON envelope carries the recipe, mode, seed, quotas,
and runtime next to the same rows, so a written file round-trips into
an equal in-memory profile.  Charts show two series per distance,
function count and mean threshold, as fixed-width ASCII bars or a
standalone SVG.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

import numpy as np

from .experiment import DistanceProfile

PROFILE_CSV_HEADER = ["distance", "count", "mean_theta", "min_theta", "max_theta"]
DISTRIBUTION_CSV_HEADER = ["index", "bitstring", "probability"]

ASCII_BAR_WIDTH = 60


@dataclass
class RunManifest:
    """Everything needed to reproduce a run byte-for-byte."""

    subcommand: str
    recipe: str
    mode: str
    seed: int | None
    quotas: dict[int, int] = field(default_factory=dict)
    outputs: list[str] = field(default_factory=list)
    tool_version: str = ""
    runtime_seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "recipe": self.recipe,
            "mode": self.mode,
            "seed": self.seed,
            "quotas": {str(k): v for k, v in sorted(self.quotas.items())},
            "outputs": list(self.outputs),
            "tool_version": self.tool_version,
            "runtime_seconds": self.runtime_seconds,
        }


class Stopwatch:
    def __enter__(self) -> "Stopwatch":
        self.start = time.perf_counter()
        self.elapsed = 0.0
        return self

    def __exit__(self, *exc) -> None:
        self.elapsed = time.perf_counter() - self.start


def profile_rows(profile: DistanceProfile) -> list[tuple[int, int, float, float, float]]:
    return [
        (d, int(profile.counts[d]), profile.mean(d),
         float(profile.mins[d]), float(profile.maxs[d]))
        for d in profile.populated()
    ]


def profile_to_csv(profile: DistanceProfile) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(PROFILE_CSV_HEADER)
    for d, count, mean, lo, hi in profile_rows(profile):
        writer.writerow([d, count, repr(mean), repr(lo), repr(hi)])
    return buf.getvalue()


def profile_to_json(profile: DistanceProfile, runtime: float = 0.0) -> str:
    doc = {
        "recipe": ",".join(profile.recipe),
        "mode": profile.mode,
        "length": profile.length,
        "seed": profile.seed,
        "quotas": {str(k): v for k, v in sorted(profile.quotas.items())},
        "short_buckets": list(profile.short_buckets),
        "runtime_seconds": runtime,
        "rows": [
            {"distance": d, "count": c, "mean_theta": mean,
             "min_theta": lo, "max_theta": hi}
            for d, c, mean, lo, hi in profile_rows(profile)
        ],
    }
    return json.dumps(doc, indent=2)


def profile_from_json(text: str) -> DistanceProfile:
    doc = json.loads(text)
    profile = DistanceProfile.empty(
        tuple(doc["recipe"].split(",")), doc["mode"], doc["length"],
        seed=doc["seed"],
        quotas={int(k): v for k, v in doc["quotas"].items()})
    for row in doc["rows"]:
        d = row["distance"]
        profile.counts[d] = row["count"]
        profile.sums[d] = row["mean_theta"] * row["count"]
        profile.mins[d] = row["min_theta"]
        profile.maxs[d] = row["max_theta"]
    profile.short_buckets = tuple(doc["short_buckets"])
    return profile


def profile_from_csv(text: str, recipe: tuple[str, ...], mode: str,
                     length: int) -> DistanceProfile:
    """Rebuild a profile from its CSV rows (metadata supplied by caller)."""
    profile = DistanceProfile.empty(recipe, mode, length)
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != PROFILE_CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header}")
    for row in reader:
        d, count = int(row[0]), int(row[1])
        profile.counts[d] = count
        profile.sums[d] = float(row[2]) * count
        profile.mins[d] = float(row[3])
        profile.maxs[d] = float(row[4])
    return profile


def distribution_to_csv(probs: np.ndarray, n_bits: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(DISTRIBUTION_CSV_HEADER)
    for i, p in enumerate(probs):
        writer.writerow([i, format(i, f"0{n_bits}b"), repr(float(p))])
    return buf.getvalue()


def distribution_to_json(probs: np.ndarray, n_bits: int) -> str:
    rows = [{"index": i, "bitstring": format(i, f"0{n_bits}b"),
             "probability": float(p)} for i, p in enumerate(probs)]
    return json.dumps({"outcomes": rows}, indent=2)


def ascii_histogram(profile: DistanceProfile) -> str:
    """Two fixed-width bars per populated distance: count and mean theta."""
    rows = profile_rows(profile)
    if not rows:
        raise ValueError("profile is empty")
    max_count = max(r[1] for r in rows)
    lines = [f"recipe {','.join(profile.recipe)}  mode {profile.mode}"]
    for d, count, mean, _, _ in rows:
        cbar = "#" * max(1, round(ASCII_BAR_WIDTH * count / max_count))
        tbar = "*" * round(ASCII_BAR_WIDTH * mean)
        lines.append(f"d={d:3d}  count {count:>10d} |{cbar:<{ASCII_BAR_WIDTH}}|")
        lines.append(f"       theta {mean:10.4f} |{tbar:<{ASCII_BAR_WIDTH}}|")
    return "\n".join(lines) + "\n"


def svg_histogram(profile: DistanceProfile) -> str:
    """Standalone SVG with a count series (green) and a mean-theta series
    (red), one bar pair per populated distance."""
    rows = profile_rows(profile)
    if not rows:
        raise ValueError("profile is empty")
    width, height, margin = 800, 400, 50
    plot_w, plot_h = width - 2 * margin, height - 2 * margin
    max_count = max(r[1] for r in rows)
    slot = plot_w / len(rows)
    bar = slot * 0.38

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" '
        f'font-family="monospace">recipe {",".join(profile.recipe)} '
        f'({profile.mode})</text>',
    ]
    for k, (d, count, mean, _, _) in enumerate(rows):
        x0 = margin + k * slot
        ch = plot_h * count / max_count
        th = plot_h * mean
        parts.append(
            f'<rect x="{x0:.1f}" y="{margin + plot_h - ch:.1f}" '
            f'width="{bar:.1f}" height="{ch:.1f}" fill="green">'
            f'<title>d={d} count={count}</title></rect>')
        parts.append(
            f'<rect x="{x0 + bar:.1f}" y="{margin + plot_h - th:.1f}" '
            f'width="{bar:.1f}" height="{th:.1f}" fill="red">'
            f'<title>d={d} mean_theta={mean:.6f}</title></rect>')
        parts.append(
            f'<text x="{x0 + bar:.1f}" y="{height - margin + 15}" '
            f'text-anchor="middle" font-size="10" '
            f'font-family="monospace">{d}</text>')
    parts.append(
        f'<line x1="{margin}" y1="{margin + plot_h}" x2="{width - margin}" '
        f'y2="{margin + plot_h}" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
