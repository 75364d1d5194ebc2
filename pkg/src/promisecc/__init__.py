"""Simulation and verification toolkit for promise-problem protocols.

Quantum and randomized communication protocols for promise equality and
promise disjointness, finite automata built from them, and exact
classical lower-bound searches, all at desk scale.
"""

from .bits import (
    BitString,
    Margin,
    PromiseLabel,
    all_bitstrings,
    classify_disj_promise,
    classify_eq_promise,
    disj_value,
    enumerate_promise_pairs,
    hamming_distance,
    hamming_weight,
    intersection_size,
    weight_band,
)
from .qsim import (
    ProjectiveMeasurement,
    basis_measurement,
    basis_state,
    collect_op,
    complete_unitary_from_column,
    is_unitary,
    outcome_probability,
    pair_basis_measurement,
    pair_index,
    phase_op,
    spread_op,
    swap_op,
)
from .quantum_protocol import (
    QuantumProtocolReport,
    closed_form_accept_probability,
    min_rejection_rate,
    qubit_cost,
    repetition_count,
    round_accept_probability,
    round_accept_probability_fast,
    run_protocol,
)
from .randomized_protocol import (
    ClassicalProtocolReport,
    bit_cost,
    detection_frequency,
    exact_detection_probability,
    positions_count,
    run_one_way,
)
from .automata import (
    Dfa,
    DfaProtocol,
    Qcfa,
    WordProblem,
    accept_probability,
    bruteforce_disjointness_dfa,
    classify_word,
    disjointness_automaton,
    disjointness_word,
    disjointness_word_problem,
    equality_automaton,
    equality_word,
    equality_word_problem,
    extended_transition,
    protocol_from_dfa,
    qcfa_from_json,
    qcfa_to_json,
    rejection_probability,
    run_dfa,
    verify_promise_dfa,
)
from .bounds import (
    CommMatrix,
    PartitionResult,
    Rectangle,
    RectangleBoundReport,
    SearchTooWideError,
    UNDEFINED,
    check_rectangle_bound,
    cross_pair_refutation,
    exact_deterministic_cc,
    find_cross_refutation,
    fooling_pairs,
    greedy_fooling_set,
    min_monochromatic_partition,
    problem_matrix,
    verify_partition,
)
from .cli import ExperimentConfig, emit_cost_table, run_experiment

__all__ = [
    "BitString",
    "Margin",
    "PromiseLabel",
    "all_bitstrings",
    "classify_disj_promise",
    "classify_eq_promise",
    "disj_value",
    "enumerate_promise_pairs",
    "hamming_distance",
    "hamming_weight",
    "intersection_size",
    "weight_band",
    "ProjectiveMeasurement",
    "basis_measurement",
    "basis_state",
    "collect_op",
    "complete_unitary_from_column",
    "is_unitary",
    "outcome_probability",
    "pair_basis_measurement",
    "pair_index",
    "phase_op",
    "spread_op",
    "swap_op",
    "QuantumProtocolReport",
    "closed_form_accept_probability",
    "min_rejection_rate",
    "qubit_cost",
    "repetition_count",
    "round_accept_probability",
    "round_accept_probability_fast",
    "run_protocol",
    "ClassicalProtocolReport",
    "bit_cost",
    "detection_frequency",
    "exact_detection_probability",
    "positions_count",
    "run_one_way",
    "Dfa",
    "DfaProtocol",
    "Qcfa",
    "WordProblem",
    "accept_probability",
    "bruteforce_disjointness_dfa",
    "classify_word",
    "disjointness_automaton",
    "disjointness_word",
    "disjointness_word_problem",
    "equality_automaton",
    "equality_word",
    "equality_word_problem",
    "extended_transition",
    "protocol_from_dfa",
    "qcfa_from_json",
    "qcfa_to_json",
    "rejection_probability",
    "run_dfa",
    "verify_promise_dfa",
    "CommMatrix",
    "PartitionResult",
    "Rectangle",
    "RectangleBoundReport",
    "UNDEFINED",
    "SearchTooWideError",
    "check_rectangle_bound",
    "cross_pair_refutation",
    "exact_deterministic_cc",
    "find_cross_refutation",
    "fooling_pairs",
    "greedy_fooling_set",
    "min_monochromatic_partition",
    "problem_matrix",
    "verify_partition",
    "ExperimentConfig",
    "emit_cost_table",
    "run_experiment",
]
