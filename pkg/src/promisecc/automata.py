"""Finite automata with quantum and classical states, and plain DFAs.

The quantum-classical machine scans its input once, left marker first and
right marker last.  A classical control state selects, per scanned symbol,
a unitary to apply to the quantum register and a successor control state;
after the right marker a single projective measurement decides acceptance.

Two concrete machines are built here over the alphabet ``{0, 1, #}``:

* :func:`equality_automaton` decides words ``x#y`` -- n quantum basis
  states, a position-counter control, sign flips per scanned bit; accept
  amplitude works out to the mean of ``(-1)^(x_i + y_i)``, so equal words
  are accepted surely and words at distance n/2 surely rejected.
* :func:`disjointness_automaton` decides words ``x#y#x`` -- 2n quantum
  basis states running the disjointness protocol round in place: swaps on
  the first x block, sign flips on the y block, swaps again on the second
  x block.

A brute-force DFA for the ``x#y#x`` problem (tracking the first block
verbatim plus the running intersection count) witnesses the classical
cost, and :func:`protocol_from_dfa` turns any verified DFA into the
three-message deterministic protocol whose transcript costs
``1 + 2*ceil(log2 N)`` bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil, log2

import numpy as np

from .bits import BitString, PromiseLabel, hamming_distance, intersection_size
from . import qsim

LEFT_MARKER = "^"
RIGHT_MARKER = "$"
SEPARATOR = "#"
WORD_ALPHABET = ("0", "1", SEPARATOR)


# ---------------------------------------------------------------------------
# quantum-classical machine
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Qcfa:
    """Measure-once one-way automaton with quantum and classical states.

    ``quantum_tr`` and ``classical_tr`` must be total on (non-halting
    classical state, symbol-or-marker).  ``measure`` gives the projective
    measurement applied in the classical state reached after the right
    marker; outcomes in ``accept_outcomes`` count as acceptance.
    """

    quantum_labels: tuple
    classical_states: tuple
    alphabet: tuple
    quantum_tr: dict  # (classical state, symbol) -> unitary ndarray
    classical_tr: dict  # (classical state, symbol) -> classical state
    initial_quantum: object
    initial_classical: object
    accepting_states: frozenset = frozenset()
    rejecting_states: frozenset = frozenset()
    measure: dict = field(default_factory=dict)  # classical state -> measurement
    accept_outcomes: frozenset = frozenset()

    @property
    def dim(self) -> int:
        return len(self.quantum_labels)

    def halting_states(self) -> frozenset:
        return self.accepting_states | self.rejecting_states

    def validate(self) -> None:
        if self.accepting_states & self.rejecting_states:
            raise ValueError("accepting and rejecting classical states overlap")
        full_alphabet = tuple(self.alphabet) + (LEFT_MARKER, RIGHT_MARKER)
        live = [s for s in self.classical_states if s not in self.halting_states()]
        for s in live:
            for sym in full_alphabet:
                if (s, sym) not in self.classical_tr:
                    raise ValueError(f"classical transition missing for {(s, sym)}")
                if (s, sym) not in self.quantum_tr:
                    raise ValueError(f"quantum transition missing for {(s, sym)}")
        for key, u in self.quantum_tr.items():
            if u.shape != (self.dim, self.dim):
                raise ValueError(f"operator at {key} has wrong dimension")
            qsim.assert_unitary(u)
        for s in self.classical_states:
            self.measurement_for(s).validate()

    def measurement_for(self, state) -> qsim.ProjectiveMeasurement:
        m = self.measure.get(state)
        if m is None:
            raise ValueError(f"no measurement attached to state {state!r}")
        return m


def accept_probability(machine: Qcfa, word: str) -> float:
    """Run the machine on ``word`` (markers added here) and return
    the probability that the final measurement lands in an accepting outcome.

    If the classical control enters a halting state mid-word, remaining
    transitions are skipped and the measurement is applied immediately.
    """
    for sym in word:
        if sym not in machine.alphabet:
            raise ValueError(f"symbol {sym!r} outside the input alphabet")
    halting = machine.halting_states()
    s = machine.initial_classical
    psi = qsim.basis_state(
        machine.dim, machine.quantum_labels.index(machine.initial_quantum)
    )
    for sym in (LEFT_MARKER, *word, RIGHT_MARKER):
        if s in halting:
            break
        psi = machine.quantum_tr[(s, sym)] @ psi
        s = machine.classical_tr[(s, sym)]
    measurement = machine.measurement_for(s)
    return sum(
        qsim.outcome_probability(measurement, o, psi)
        for o in machine.accept_outcomes
        if o in measurement.labels
    )


def rejection_probability(machine: Qcfa, word: str) -> float:
    return 1.0 - accept_probability(machine, word)


def _total_transitions(states, alphabet, quantum_tr, classical_tr, dim):
    """Fill unspecified (state, symbol) entries with identity / self-loop."""
    eye = np.eye(dim, dtype=complex)
    for s in states:
        for sym in alphabet:
            quantum_tr.setdefault((s, sym), eye)
            classical_tr.setdefault((s, sym), s)


@lru_cache(maxsize=None)
def equality_automaton(n: int) -> Qcfa:
    """Machine solving the x#y promise equality problem exactly.

    n quantum basis states labelled 1..n; n+2 classical states acting as a
    position counter that resets at the separator.
    """
    if n < 1:
        raise ValueError("n must be positive")
    labels = tuple(range(1, n + 1))
    states = tuple(range(n + 2))  # 0 start, 1..n positions, n+1 at boundaries
    spread = qsim.complete_unitary_from_column(qsim.uniform_over(n, n))
    collect = spread.conj().T
    quantum_tr, classical_tr = {}, {}
    quantum_tr[(0, LEFT_MARKER)] = spread
    classical_tr[(0, LEFT_MARKER)] = 1
    for i in range(1, n + 1):
        flip = np.eye(n, dtype=complex)
        flip[i - 1, i - 1] = -1.0
        for sym in "01":
            quantum_tr[(i, sym)] = flip if sym == "1" else np.eye(n, dtype=complex)
            classical_tr[(i, sym)] = i + 1
    quantum_tr[(n + 1, SEPARATOR)] = np.eye(n, dtype=complex)
    classical_tr[(n + 1, SEPARATOR)] = 1
    quantum_tr[(n + 1, RIGHT_MARKER)] = collect
    classical_tr[(n + 1, RIGHT_MARKER)] = n + 1
    full_alphabet = WORD_ALPHABET + (LEFT_MARKER, RIGHT_MARKER)
    _total_transitions(states, full_alphabet, quantum_tr, classical_tr, n)
    measurement = qsim.basis_measurement(n, labels)
    return Qcfa(
        quantum_labels=labels,
        classical_states=states,
        alphabet=WORD_ALPHABET,
        quantum_tr=quantum_tr,
        classical_tr=classical_tr,
        initial_quantum=1,
        initial_classical=0,
        measure={s: measurement for s in states},
        accept_outcomes=frozenset({1}),
    )


@lru_cache(maxsize=None)
def disjointness_automaton(n: int) -> Qcfa:
    """Machine solving the x#y#x promise disjointness problem, one-sided.

    2n quantum basis states labelled (i, b); 2n+2 classical states count
    through the three blocks: swaps on the x blocks, sign flips on the y
    block, collect at the right marker, accept on outcome (1, 0).
    """
    if n < 1:
        raise ValueError("n must be positive")
    labels = tuple((i, b) for b in (0, 1) for i in range(1, n + 1))
    states = tuple(range(2 * n + 2))
    dim = 2 * n
    quantum_tr, classical_tr = {}, {}
    quantum_tr[(0, LEFT_MARKER)] = qsim.spread_op(n)
    classical_tr[(0, LEFT_MARKER)] = 1
    eye = np.eye(dim, dtype=complex)
    for i in range(1, n + 1):
        swap = np.eye(dim, dtype=complex)
        lo, hi = qsim.pair_index(i, 0, n), qsim.pair_index(i, 1, n)
        swap[[lo, hi]] = swap[[hi, lo]]
        phase = np.eye(dim, dtype=complex)
        phase[hi, hi] = -1.0
        for sym in "01":
            # states 1..n read an x block, states n+1..2n read the y block
            quantum_tr[(i, sym)] = swap if sym == "1" else eye
            classical_tr[(i, sym)] = i + 1
            quantum_tr[(n + i, sym)] = phase if sym == "1" else eye
            classical_tr[(n + i, sym)] = n + i + 1
    # first separator: arrive in state n+1 after the x block, stay to read y
    quantum_tr[(n + 1, SEPARATOR)] = eye
    classical_tr[(n + 1, SEPARATOR)] = n + 1
    # second separator: back to the x positions for the final block
    quantum_tr[(2 * n + 1, SEPARATOR)] = eye
    classical_tr[(2 * n + 1, SEPARATOR)] = 1
    quantum_tr[(n + 1, RIGHT_MARKER)] = qsim.collect_op(n)
    classical_tr[(n + 1, RIGHT_MARKER)] = n + 1
    full_alphabet = WORD_ALPHABET + (LEFT_MARKER, RIGHT_MARKER)
    _total_transitions(states, full_alphabet, quantum_tr, classical_tr, dim)
    measurement = qsim.pair_basis_measurement(n)
    return Qcfa(
        quantum_labels=labels,
        classical_states=states,
        alphabet=WORD_ALPHABET,
        quantum_tr=quantum_tr,
        classical_tr=classical_tr,
        initial_quantum=(1, 0),
        initial_classical=0,
        measure={s: measurement for s in states},
        accept_outcomes=frozenset({(1, 0)}),
    )


# ---------------------------------------------------------------------------
# word problems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WordProblem:
    """Promise problem over words: equality (x#y) or disjointness (x#y#x)."""

    n: int
    kind: str  # "equality" | "disjointness"

    def __post_init__(self):
        if self.kind not in ("equality", "disjointness"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be positive")

    def classify(self, word: str) -> PromiseLabel:
        return classify_word(self, word)


def equality_word_problem(n: int) -> WordProblem:
    return WordProblem(n, "equality")


def disjointness_word_problem(n: int) -> WordProblem:
    return WordProblem(n, "disjointness")


def _parse_blocks(word: str, count: int, n: int):
    parts = word.split(SEPARATOR)
    if len(parts) != count:
        return None
    for p in parts:
        if len(p) != n or any(c not in "01" for c in p):
            return None
    return parts


def classify_word(problem: WordProblem, word: str) -> PromiseLabel:
    """Label a word; malformed shapes fall outside the promise."""
    n = problem.n
    if problem.kind == "equality":
        parts = _parse_blocks(word, 2, n)
        if parts is None:
            return PromiseLabel.OUTSIDE
        x, y = BitString(parts[0]), BitString(parts[1])
        d = hamming_distance(x, y)
        if d == 0:
            return PromiseLabel.YES
        if 2 * d == n:
            return PromiseLabel.NO
        return PromiseLabel.OUTSIDE
    parts = _parse_blocks(word, 3, n)
    if parts is None or parts[2] != parts[0]:
        return PromiseLabel.OUTSIDE
    x, y = BitString(parts[0]), BitString(parts[1])
    m = intersection_size(x, y)
    if m == 0:
        return PromiseLabel.YES
    if Fraction(n, 4) <= m <= Fraction(3 * n, 4):
        return PromiseLabel.NO
    return PromiseLabel.OUTSIDE


def equality_word(x: BitString, y: BitString) -> str:
    return f"{x}{SEPARATOR}{y}"


def disjointness_word(x: BitString, y: BitString) -> str:
    return f"{x}{SEPARATOR}{y}{SEPARATOR}{x}"


# ---------------------------------------------------------------------------
# deterministic automata
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Dfa:
    """Total one-way deterministic automaton."""

    states: tuple
    alphabet: tuple
    transition: dict  # (state, symbol) -> state
    start: object
    accepting: frozenset

    def validate(self) -> None:
        for s in self.states:
            for sym in self.alphabet:
                if (s, sym) not in self.transition:
                    raise ValueError(f"transition missing for {(s, sym)}")

    @property
    def size(self) -> int:
        return len(self.states)


def extended_transition(d: Dfa, state, word: str):
    """Iterated transition: fold the word through delta from ``state``."""
    for sym in word:
        try:
            state = d.transition[(state, sym)]
        except KeyError:
            raise ValueError(f"symbol {sym!r} outside the automaton alphabet")
    return state


def run_dfa(d: Dfa, word: str) -> bool:
    """True iff the word drives the start state into an accepting state."""
    return extended_transition(d, d.start, word) in d.accepting


#: Largest n for which the brute-force DFA build is allowed.
BRUTEFORCE_DFA_LIMIT = 6


def bruteforce_disjointness_dfa(n: int) -> Dfa:
    """Explicit DFA deciding the x#y#x promise words.

    States track (phase, data): the first block verbatim, then the running
    intersection count against it, then a countdown over the third block.
    Built breadth-first from the start state, so only reachable states
    materialize; not minimal, just a concrete witness.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > BRUTEFORCE_DFA_LIMIT:
        raise ValueError(
            f"n={n} exceeds the brute-force bound {BRUTEFORCE_DFA_LIMIT}"
        )
    dead = ("dead",)
    start = ("x", "")

    def step(state, sym):
        if state == dead:
            return dead
        phase = state[0]
        if phase == "x":
            prefix = state[1]
            if sym in "01":
                return ("x", prefix + sym) if len(prefix) < n else dead
            return ("y", prefix, 0, 0) if len(prefix) == n else dead
        if phase == "y":
            _, x, j, m = state
            if sym in "01":
                if j >= n:
                    return dead
                return ("y", x, j + 1, m + (1 if sym == "1" and x[j] == "1" else 0))
            return ("z", m, 0) if j == n else dead
        # phase == "z": the promise pins the third block, so only count it
        _, m, j = state
        if sym in "01":
            return ("z", m, j + 1) if j < n else dead
        return dead

    states = {start, dead}
    transition = {}
    frontier = [start, dead]
    while frontier:
        s = frontier.pop()
        for sym in WORD_ALPHABET:
            t = step(s, sym)
            transition[(s, sym)] = t
            if t not in states:
                states.add(t)
                frontier.append(t)
    accepting = frozenset(
        s for s in states if s[0] == "z" and s[2] == n and s[1] == 0
    )
    return Dfa(
        states=tuple(sorted(states, key=repr)),
        alphabet=WORD_ALPHABET,
        transition=transition,
        start=start,
        accepting=accepting,
    )


def verify_promise_dfa(d: Dfa, n: int) -> bool:
    """Exhaustively check a DFA against every x#y#x promise word."""
    problem = disjointness_word_problem(n)
    for xv in range(1 << n):
        x = BitString(xv, n)
        for yv in range(1 << n):
            y = BitString(yv, n)
            word = disjointness_word(x, y)
            label = problem.classify(word)
            if label is PromiseLabel.OUTSIDE:
                continue
            accepted = run_dfa(d, word)
            if label is PromiseLabel.YES and not accepted:
                return False
            if label is PromiseLabel.NO and accepted:
                return False
    return True


@dataclass(frozen=True)
class DfaProtocol:
    """Three-message deterministic protocol simulated from a DFA.

    Alice sends the state after ``x#``, Bob sends the state after
    continuing through ``y#``, Alice sends the final answer bit.
    """

    dfa: Dfa
    n: int

    @property
    def cost(self) -> int:
        """Transcript length in bits: 1 + 2*ceil(log2 N)."""
        return 1 + 2 * ceil(log2(self.dfa.size))

    def decide(self, x: BitString, y: BitString) -> int:
        d = self.dfa
        after_x = extended_transition(d, d.start, f"{x}{SEPARATOR}")
        after_y = extended_transition(d, after_x, f"{y}{SEPARATOR}")
        final = extended_transition(d, after_y, str(x))
        return 1 if final in d.accepting else 0


def protocol_from_dfa(d: Dfa, n: int) -> DfaProtocol:
    """Wrap a DFA as a protocol after verifying it solves the promise words."""
    if not verify_promise_dfa(d, n):
        raise ValueError("DFA fails the exhaustive promise check")
    return DfaProtocol(dfa=d, n=n)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _matrix_to_lists(u: np.ndarray):
    return {
        "re": np.real(u).tolist(),
        "im": np.imag(u).tolist(),
    }


def _matrix_from_lists(d) -> np.ndarray:
    return np.array(d["re"]) + 1j * np.array(d["im"])


def qcfa_to_json(machine: Qcfa) -> str:
    """JSON description: labels, states, transitions, measurements."""
    payload = {
        "quantum_labels": [list(l) if isinstance(l, tuple) else l
                           for l in machine.quantum_labels],
        "classical_states": list(machine.classical_states),
        "alphabet": list(machine.alphabet),
        "initial_quantum": (list(machine.initial_quantum)
                            if isinstance(machine.initial_quantum, tuple)
                            else machine.initial_quantum),
        "initial_classical": machine.initial_classical,
        "accepting_states": sorted(machine.accepting_states),
        "rejecting_states": sorted(machine.rejecting_states),
        "accept_outcomes": [list(o) if isinstance(o, tuple) else o
                            for o in sorted(machine.accept_outcomes)],
        "quantum_tr": [
            {"state": s, "symbol": sym, "matrix": _matrix_to_lists(u)}
            for (s, sym), u in sorted(machine.quantum_tr.items(), key=repr)
        ],
        "classical_tr": [
            {"state": s, "symbol": sym, "next": t}
            for (s, sym), t in sorted(machine.classical_tr.items(), key=repr)
        ],
        "measurements": [
            {
                "state": s,
                "labels": [list(l) if isinstance(l, tuple) else l
                           for l in m.labels],
                "projectors": [_matrix_to_lists(p) for p in m.projectors],
            }
            for s, m in sorted(machine.measure.items(), key=repr)
        ],
    }
    return json.dumps(payload)


def _label_from_json(l):
    return tuple(l) if isinstance(l, list) else l


def qcfa_from_json(text: str) -> Qcfa:
    d = json.loads(text)
    measure = {}
    for entry in d["measurements"]:
        labels = tuple(_label_from_json(l) for l in entry["labels"])
        projs = tuple(_matrix_from_lists(p) for p in entry["projectors"])
        measure[_label_from_json(entry["state"])] = qsim.ProjectiveMeasurement(
            labels, projs
        )
    return Qcfa(
        quantum_labels=tuple(_label_from_json(l) for l in d["quantum_labels"]),
        classical_states=tuple(_label_from_json(s) for s in d["classical_states"]),
        alphabet=tuple(d["alphabet"]),
        quantum_tr={
            (_label_from_json(e["state"]), e["symbol"]): _matrix_from_lists(e["matrix"])
            for e in d["quantum_tr"]
        },
        classical_tr={
            (_label_from_json(e["state"]), e["symbol"]): _label_from_json(e["next"])
            for e in d["classical_tr"]
        },
        initial_quantum=_label_from_json(d["initial_quantum"]),
        initial_classical=_label_from_json(d["initial_classical"]),
        accepting_states=frozenset(_label_from_json(s) for s in d["accepting_states"]),
        rejecting_states=frozenset(_label_from_json(s) for s in d["rejecting_states"]),
        measure=measure,
        accept_outcomes=frozenset(
            _label_from_json(o) for o in d["accept_outcomes"]
        ),
    )
