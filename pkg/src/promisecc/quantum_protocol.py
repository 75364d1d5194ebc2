"""Two-way quantum protocol for promise disjointness, with amplification.

One round prepares a uniform superposition over the low half of a
2n-dimensional register, swaps amplitudes at the sender's 1-positions,
sign-flips at the receiver's 1-positions, swaps back, interferes through
the collect operator and measures in the pair basis.  The amplitude left
on outcome ``(1, 0)`` is the mean of ``(-1)^(x_i & y_i)``, so the round
accepts with probability ``((n - 2m)/n)**2`` where ``m`` is the
intersection size: certainty when the sets are disjoint, at most
``(1 - 2*lam)**2`` anywhere in the margin band.

Repeating the round k times and accepting only on unanimous acceptance
drives the error on band instances below any target; the count that
reaches error ``eps`` is the smallest k with ``(1 - 3*lam)**k <= eps``,
computed in exact rational arithmetic.

Each round moves the register twice plus one answer bit:
``3 + 2*ceil(log2 n)`` qubits.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .bits import (
    BitString,
    Margin,
    PromiseLabel,
    classify_disj_promise,
    intersection_size,
)
from . import qsim


@lru_cache(maxsize=None)
def _round_operators(n: int):
    spread = qsim.spread_op(n)
    collect = qsim.collect_op(n)
    measurement = qsim.pair_basis_measurement(n)
    return spread, collect, measurement


def round_accept_probability(x: BitString, y: BitString) -> float:
    """Exact dense simulation of one protocol round.

    Returns the probability that the final measurement yields (1, 0).
    """
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    n = x.n
    spread, collect, measurement = _round_operators(n)
    swap = qsim.swap_op(x)
    phase = qsim.phase_op(y)
    psi = qsim.basis_state(2 * n, qsim.pair_index(1, 0, n))
    psi = qsim.apply(spread, psi)
    psi = qsim.apply(swap, psi)
    psi = qsim.apply(phase, psi)
    psi = qsim.apply(swap, psi)
    psi = qsim.apply(collect, psi)
    return qsim.outcome_probability(measurement, (1, 0), psi)


def round_accept_probability_fast(x: BitString, y: BitString) -> float:
    """O(n) path through the same round: permutations and sign flips only."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    n = x.n
    psi = qsim.uniform_over(2 * n, n)
    psi = qsim.apply_swap_fast(x, psi)
    psi = qsim.apply_phase_fast(y, psi)
    psi = qsim.apply_swap_fast(x, psi)
    # collect's first row is uniform over the low block
    amp = complex(np.sum(psi[:n])) / math.sqrt(n)
    return abs(amp) ** 2


def closed_form_accept_probability(x: BitString, y: BitString) -> float:
    """Independent check value ((n - 2m)/n)**2 with m the intersection size."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    n = x.n
    m = intersection_size(x, y)
    return ((n - 2 * m) / n) ** 2


def _as_fraction(margin) -> Fraction:
    lam = margin.fraction if isinstance(margin, Margin) else Fraction(margin)
    if not 0 < lam <= Fraction(1, 4):
        raise ValueError(f"margin fraction must be in (0, 1/4], got {lam}")
    return lam


def repetition_count(margin, eps=Fraction(1, 3)) -> int:
    """Rounds needed so unanimous acceptance errs at most eps on band pairs.

    Smallest k with (1 - 3*lam)**k <= eps, found exactly in rationals;
    equals ceil(log(eps) / log(1 - 3*lam)).
    """
    lam = _as_fraction(margin)
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"error bound must be in (0, 1), got {eps}")
    base = 1 - 3 * lam
    k, power = 1, base
    while power > eps:
        k += 1
        power *= base
    return k


def min_rejection_rate(margin) -> Fraction:
    """Guaranteed single-round rejection probability on any band instance: 3*lam.

    One round rejects with probability 1 - ((n-2m)/n)**2 >= 1 - (1-2*lam)**2
    = 4*lam*(1-lam) >= 3*lam for lam <= 1/4.
    """
    return 3 * _as_fraction(margin)


def qubit_cost(n: int, k: int = 1) -> int:
    """Qubits moved by k rounds: k * (3 + 2*ceil(log2 n))."""
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    return k * (3 + 2 * math.ceil(math.log2(n)))


@dataclass(frozen=True)
class QuantumProtocolReport:
    """Outcome of one k-round protocol execution on a fixed pair."""

    x: BitString
    y: BitString
    margin: Margin
    label: PromiseLabel
    p_single: float  # exact per-round acceptance probability
    k: int
    decision: int  # 1 iff all k sampled outcomes accepted
    qubits: int

    @property
    def p_accept_all(self) -> float:
        """Probability that all k rounds accept."""
        return self.p_single**self.k

    def to_record(self) -> dict:
        return {
            "n": self.x.n,
            "lambda": str(self.margin.fraction),
            "x": str(self.x),
            "y": str(self.y),
            "label": self.label.value,
            "p_single": self.p_single,
            "k": self.k,
            "p_accept_k": self.p_accept_all,
            "decision": self.decision,
            "qubits": self.qubits,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record())


def run_protocol(
    x: BitString,
    y: BitString,
    margin: Margin,
    k: int,
    rng: np.random.Generator,
) -> QuantumProtocolReport:
    """Sample k independent rounds; accept only if every round accepted.

    The exact per-round probability rides along in the report so that
    callers never need to rely on sampling alone.
    """
    if k < 1:
        raise ValueError("k must be positive")
    p = round_accept_probability(x, y)
    outcomes = rng.random(k) < p
    decision = int(bool(outcomes.all()))
    return QuantumProtocolReport(
        x=x,
        y=y,
        margin=margin,
        label=classify_disj_promise(x, y, margin),
        p_single=p,
        k=k,
        decision=decision,
        qubits=qubit_cost(x.n, k),
    )
