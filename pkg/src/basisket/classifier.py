"""Classifiers as structured products of H and C2 factors.

A classifier is a tensor product G = G_{m-1} x ... x G_0 whose factors
are the 2x2 Hadamard H and the 4x4 transform C2 (off-diagonal 1/2,
diagonal -1/2).  The leftmost factor in a recipe owns the most
significant index bits.  All operators are real, so states are plain
float64 vectors.

The fast path applies each factor in place via a butterfly-style block
update; ``dense_unitary`` assembles the explicit Kronecker matrix and
serves as the reference oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .patterns import (
    NearestSet,
    PatternBasis,
    PatternVector,
    RANK_CAP,
    build_basis_from_recipe,
    distance_from_class,
)

#: Index bits consumed by each classifier factor.
FACTOR_BITS = {"H": 1, "C2": 2}

#: Classifier factor <-> basis factor correspondence.
FACTOR_TO_BASIS = {"H": "B1", "C2": "Q2"}
BASIS_TO_FACTOR = {"B1": "H", "Q2": "C2"}

_H_MATRIX = np.array([[1.0, 1.0], [1.0, -1.0]]) / sqrt(2.0)
_C2_MATRIX = np.full((4, 4), 0.5)
np.fill_diagonal(_C2_MATRIX, -0.5)


@dataclass(frozen=True)
class ClassifierSpec:
    """Ordered factor list; leftmost factor is most significant."""

    factors: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("classifier needs at least one factor")
        for f in self.factors:
            if f not in FACTOR_BITS:
                raise ValueError(
                    f"unknown classifier factor {f!r}; expected H or C2")
        if self.total_bits > RANK_CAP:
            raise ValueError(
                f"classifier acts on {self.total_bits} bits, cap is {RANK_CAP}")

    @classmethod
    def parse(cls, text: str) -> "ClassifierSpec":
        """Parse the comma-separated recipe grammar, e.g. "H,C2,H"."""
        parts = tuple(p.strip() for p in text.split(","))
        return cls(parts)

    @property
    def total_bits(self) -> int:
        return sum(FACTOR_BITS[f] for f in self.factors)

    @property
    def dim(self) -> int:
        return 1 << self.total_bits

    def basis(self) -> PatternBasis:
        """The pattern basis this classifier classifies perfectly."""
        return build_basis_from_recipe([FACTOR_TO_BASIS[f] for f in self.factors])

    def __str__(self) -> str:
        return ",".join(self.factors)


@dataclass(frozen=True)
class ThresholdReport:
    """Classification threshold of one function against one class."""

    theta: float
    nearest: NearestSet
    distribution: np.ndarray


def initial_amplitudes(h: PatternVector) -> np.ndarray:
    """Sign vector 2**(-n/2) * (-1)**h(x), the input-register state after
    the uniform superposition and the phase oracle for h."""
    if h.n > RANK_CAP:
        raise ValueError(f"function arity {h.n} exceeds cap {RANK_CAP}")
    x = np.arange(h.length, dtype=np.uint64)
    bits = ((np.uint64(h.value) >> x) & np.uint64(1)).astype(np.float64)
    return (1.0 - 2.0 * bits) / sqrt(h.length)


def apply_hadamard_factor(v: np.ndarray, bit: int) -> np.ndarray:
    """In-place H butterfly on one index bit of v's last axis."""
    dim = v.shape[-1]
    if not 0 <= bit < dim.bit_length() - 1:
        raise ValueError(f"bit {bit} out of range for dimension {dim}")
    stride = 1 << bit
    blocks = v.reshape(v.shape[:-1] + (dim // (2 * stride), 2, stride))
    a = blocks[..., 0, :].copy()
    b = blocks[..., 1, :].copy()
    inv = 1.0 / sqrt(2.0)
    blocks[..., 0, :] = (a + b) * inv
    blocks[..., 1, :] = (a - b) * inv
    return v


def apply_c2_factor(v: np.ndarray, low_bit: int) -> np.ndarray:
    """In-place C2 on index bits (low_bit, low_bit + 1) of v's last axis.

    Over each aligned 4-block (w, x, y, z), every entry maps to S/2 - entry
    with S = w + x + y + z, which is exactly the 4x4 matrix with
    off-diagonal 1/2 and diagonal -1/2.
    """
    dim = v.shape[-1]
    if low_bit < 0 or low_bit + 1 >= dim.bit_length() - 1:
        raise ValueError(
            f"C2 needs bits ({low_bit}, {low_bit + 1}), dimension is {dim}")
    stride = 1 << low_bit
    blocks = v.reshape(v.shape[:-1] + (dim // (4 * stride), 4, stride))
    s = blocks.sum(axis=-2, keepdims=True)
    np.subtract(s * 0.5, blocks, out=blocks)
    return v


def apply_classifier(spec: ClassifierSpec, v: np.ndarray) -> np.ndarray:
    """Apply every factor of spec to v in place.

    The rightmost factor owns index bit 0; each factor to its left owns
    the next more significant bits.  Works on any array whose last axis
    has dimension 2**spec.total_bits, so batches apply row-wise.
    """
    if v.shape[-1] != spec.dim:
        raise ValueError(
            f"dimension mismatch: classifier is {spec.dim}-dimensional, "
            f"state has {v.shape[-1]} entries")
    bit = 0
    for factor in reversed(spec.factors):
        if factor == "H":
            apply_hadamard_factor(v, bit)
        else:
            apply_c2_factor(v, bit)
        bit += FACTOR_BITS[factor]
    return v


def dense_unitary(spec: ClassifierSpec) -> np.ndarray:
    """Explicit 2**n x 2**n matrix G_{m-1} x ... x G_0."""
    out = np.array([[1.0]])
    for factor in spec.factors:
        out = np.kron(out, _H_MATRIX if factor == "H" else _C2_MATRIX)
    return out


def outcome_distribution(spec: ClassifierSpec, h: PatternVector) -> np.ndarray:
    """Exact measurement probabilities over basis kets for input h."""
    if h.length != spec.dim:
        raise ValueError(
            f"dimension mismatch: classifier is {spec.dim}-dimensional, "
            f"function has {h.length} bits")
    amps = apply_classifier(spec, initial_amplitudes(h))
    return amps * amps


def classification_threshold(
    spec: ClassifierSpec, basis: PatternBasis, h: PatternVector
) -> ThresholdReport:
    """Probability that the measured ket is one of h's nearest basis kets."""
    expected = tuple(FACTOR_TO_BASIS[f] for f in spec.factors)
    if basis.recipe != expected:
        raise ValueError(
            f"recipe mismatch: classifier {','.join(spec.factors)} pairs with "
            f"basis {','.join(expected)}, got {','.join(basis.recipe)}")
    nearest = distance_from_class(basis, h)
    probs = outcome_distribution(spec, h)
    theta = float(probs[sorted(nearest.indices)].sum())
    return ThresholdReport(theta, nearest, probs)
