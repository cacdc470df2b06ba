"""Degree-sequence thresholds for the complete graph minus a 4-cycle.

Decide whether a graphical degree sequence has a realization containing
K_m with a 4-cycle of edges removed, compute the exact threshold sums
by exhaustive sweep at small n, and machine-check the closed-form lower
bound, the m=5 equality (with a constructive proof replay), and the
conjectured equality for larger m.
"""

from __future__ import annotations

from .errors import (BudgetExceededError, ContractError, Graph6Error,
                     InputError, LimitError)
from .extremal import (SigmaReport, Theorem1Report, extremal_witness,
                       sigma_exact, sigma_lower_bound, verify_conjecture,
                       verify_theorem1)
from .graphs import (DEFAULT_VERTEX_LIMIT, MAX_VERTICES, SmallGraph,
                     TargetPattern, canonical_form, complement,
                     complete_graph, contains_subgraph, cycle_graph,
                     decode_graph6, degree_sequence_of, delete_vertex,
                     empty_graph, encode_graph6, find_embedding, join,
                     km_minus_c4, parse_edge_text)
from .proof_replay import (BaseCaseReport, ProofStep, ProofTrace,
                           ReplayError, Theorem2RangeReport,
                           base_case_sequences, replay_theorem2,
                           verify_base_cases, verify_theorem2_range)
from .realizations import (WitnessResult, enumerate_realizations,
                           havel_hakimi_realize, is_potentially,
                           theorem2_interchange, two_switch)
from .sequences import (DEFAULT_LENGTH_LIMIT, DegreeSequence, degree_sum,
                        enumerate_graphical_sequences,
                        graphical_sequences_with_sum, is_graphical,
                        make_sequence)

__version__ = "0.1.0"

__all__ = [
    "BaseCaseReport",
    "BudgetExceededError",
    "ContractError",
    "DEFAULT_LENGTH_LIMIT",
    "DEFAULT_VERTEX_LIMIT",
    "DegreeSequence",
    "Graph6Error",
    "InputError",
    "LimitError",
    "MAX_VERTICES",
    "ProofStep",
    "ProofTrace",
    "ReplayError",
    "SigmaReport",
    "SmallGraph",
    "TargetPattern",
    "Theorem1Report",
    "Theorem2RangeReport",
    "WitnessResult",
    "base_case_sequences",
    "canonical_form",
    "complement",
    "complete_graph",
    "contains_subgraph",
    "cycle_graph",
    "decode_graph6",
    "degree_sequence_of",
    "degree_sum",
    "delete_vertex",
    "empty_graph",
    "encode_graph6",
    "enumerate_graphical_sequences",
    "enumerate_realizations",
    "extremal_witness",
    "find_embedding",
    "graphical_sequences_with_sum",
    "havel_hakimi_realize",
    "is_graphical",
    "is_potentially",
    "join",
    "km_minus_c4",
    "make_sequence",
    "parse_edge_text",
    "replay_theorem2",
    "sigma_exact",
    "sigma_lower_bound",
    "theorem2_interchange",
    "two_switch",
    "verify_base_cases",
    "verify_conjecture",
    "verify_theorem1",
    "verify_theorem2_range",
    "__version__",
]
