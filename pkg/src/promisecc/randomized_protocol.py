"""One-way randomized protocol for promise disjointness.

Alice samples k positions among her 1-bits, uniformly and independently
with replacement, and sends the indices; Bob answers 0 (intersecting) iff
one of his bits at those positions is 1.  If Alice holds fewer than k ones
she sends the literal answer 1 in a single bit instead.

Disjoint pairs are never rejected.  On a band pair the chance that one
sampled position lands in the intersection is m/H(x) >= lam, so the miss
probability after k samples is (1 - m/H(x))**k <= (1 - lam)**k; the k that
pushes this under a target error is computed exactly in rationals.  An
optional without-replacement mode (detection 1 - C(H-m, k)/C(H, k), which
is never smaller) is available for comparison.

At tiny n a band pair can itself have fewer than k ones, forcing the
literal-1 branch and a certain error; reports flag this instead of hiding
it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bits import BitString, Margin, hamming_weight, intersection_size


def exact_detection_probability(
    x: BitString,
    y: BitString,
    k: int,
    with_replacement: bool = True,
) -> float:
    """Probability that k sampled 1-positions of x hit the intersection.

    With replacement: 1 - (1 - m/H)**k.  Without: 1 - C(H-m, k)/C(H, k).
    Undefined when x has no ones (the protocol never samples then).
    """
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    if k < 1:
        raise ValueError("k must be positive")
    h = hamming_weight(x)
    if h == 0:
        raise ValueError("detection undefined for weight-0 x (literal-1 branch)")
    m = intersection_size(x, y)
    if with_replacement:
        return 1.0 - (1.0 - m / h) ** k
    if k > h - m:
        return 1.0
    return 1.0 - math.comb(h - m, k) / math.comb(h, k)


def positions_count(margin, eps=Fraction(1, 3)) -> int:
    """Samples needed so the miss probability on any band pair is <= eps.

    Smallest k with (1 - lam)**k <= eps, found exactly in rationals;
    equals ceil(log(eps) / log(1 - lam)).
    """
    lam = margin.fraction if isinstance(margin, Margin) else Fraction(margin)
    if not 0 < lam <= Fraction(1, 4):
        raise ValueError(f"margin fraction must be in (0, 1/4], got {lam}")
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"error bound must be in (0, 1), got {eps}")
    base = 1 - lam
    k, power = 1, base
    while power > eps:
        k += 1
        power *= base
    return k


def bit_cost(n: int, k: int) -> int:
    """Bits in Alice's index message: k * ceil(log2 n).

    The literal-answer branch costs 1 bit instead; that bit is reported
    separately and is not part of the index-message accounting.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    return k * math.ceil(math.log2(n)) if n > 1 else k


@dataclass(frozen=True)
class ClassicalProtocolReport:
    """Outcome of one sampled execution on a fixed pair."""

    x: BitString
    y: BitString
    k: int
    decision: int
    bits_communicated: int
    exact_error_probability: float  # chance of outputting the wrong disjointness value
    literal_branch: bool  # Alice had fewer than k ones and sent the answer 1

    def to_record(self) -> dict:
        return {
            "n": self.x.n,
            "x": str(self.x),
            "y": str(self.y),
            "k": self.k,
            "decision": self.decision,
            "bits": self.bits_communicated,
            "exact_error": self.exact_error_probability,
            "literal_branch": self.literal_branch,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record())


def run_one_way(
    x: BitString,
    y: BitString,
    k: int,
    rng: np.random.Generator,
) -> ClassicalProtocolReport:
    """One sampled run of the k-position protocol.

    The exact error probability (of answering 1 on an intersecting pair,
    or 0 on a disjoint one) rides along in the report.
    """
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    if k < 1:
        raise ValueError("k must be positive")
    h = hamming_weight(x)
    m = intersection_size(x, y)
    if h < k:
        # literal answer: certain error exactly when the pair intersects
        return ClassicalProtocolReport(
            x=x,
            y=y,
            k=k,
            decision=1,
            bits_communicated=1,
            exact_error_probability=0.0 if m == 0 else 1.0,
            literal_branch=True,
        )
    ones = [i for i, bit in enumerate(x.bits) if bit]
    picks = rng.integers(0, h, size=k)
    hit = any(y[ones[j]] for j in picks)
    decision = 0 if hit else 1
    # disjoint pairs are never detected, so only intersecting pairs can err
    error = 0.0 if m == 0 else (1.0 - m / h) ** k
    return ClassicalProtocolReport(
        x=x,
        y=y,
        k=k,
        decision=decision,
        bits_communicated=bit_cost(x.n, k),
        exact_error_probability=error,
        literal_branch=False,
    )


def detection_frequency(
    x: BitString,
    y: BitString,
    k: int,
    trials: int,
    rng: np.random.Generator,
) -> float:
    """Monte Carlo frequency of detection over many runs, vectorized.

    Requires weight(x) >= k so every run takes the sampling branch.
    """
    h = hamming_weight(x)
    if h < k:
        raise ValueError("weight(x) < k: every run would take the literal branch")
    ones = np.array([i for i, bit in enumerate(x.bits) if bit])
    ybits = np.array(y.bits)
    picks = rng.integers(0, h, size=(trials, k))
    hits = ybits[ones[picks]].any(axis=1)
    return float(hits.mean())
