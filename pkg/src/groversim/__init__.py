"""State-vector simulator for quantum search, with a reversible-logic
toolkit, a path-sum cross-checking oracle, and JSON trace/circuit formats.
"""

from .state import (
    DEFAULT_MAX_QUBITS,
    NORM_TOLERANCE,
    RNG_ALGORITHM,
    AmplitudeVector,
    ResourceLimitError,
    apply_permutation,
    apply_phase_flip,
    basis_state,
    measure,
    norm,
    probability,
    uniform_state,
)
from .transforms import (
    MAX_NAIVE_QUBITS,
    SignRuleEntry,
    invert_phase_marked,
    invert_phase_zero,
    sign_rule_entry,
    walsh_hadamard_fast,
    walsh_hadamard_naive,
    wh_matrix_entry,
    wh_sign,
)
from .grover import (
    ClassicalResult,
    GroverConfig,
    Oracle,
    SimulationTrace,
    classical_baseline,
    grover_iteration,
    optimal_iterations,
    resolve_iterations,
    roman_numeral,
    run_grover,
    scan_probabilities,
    success_probability,
)
from .reversible import (
    Gate,
    ReversibleCircuit,
    adder_circuit,
    apply_gate,
    bits_to_index,
    check_bijection,
    circuit_to_permutation,
    index_to_bits,
    inverse_circuit,
    run_circuit,
)
from .pathsum import (
    MAX_PATHS,
    Path,
    StepOp,
    enumerate_paths,
    grover_steps,
    path_amplitude,
    verify_against_matrix,
)
from .documents import (
    CIRCUIT_FORMAT_VERSION,
    TRACE_FORMAT_VERSION,
    TraceDocument,
    format_float,
    parse_circuit_document,
    parse_trace_document,
    render_circuit_document,
    render_trace_document,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeVector",
    "CIRCUIT_FORMAT_VERSION",
    "ClassicalResult",
    "DEFAULT_MAX_QUBITS",
    "Gate",
    "GroverConfig",
    "MAX_NAIVE_QUBITS",
    "MAX_PATHS",
    "NORM_TOLERANCE",
    "Oracle",
    "Path",
    "RNG_ALGORITHM",
    "ResourceLimitError",
    "ReversibleCircuit",
    "SignRuleEntry",
    "SimulationTrace",
    "StepOp",
    "TRACE_FORMAT_VERSION",
    "TraceDocument",
    "adder_circuit",
    "apply_gate",
    "apply_permutation",
    "apply_phase_flip",
    "basis_state",
    "bits_to_index",
    "check_bijection",
    "circuit_to_permutation",
    "classical_baseline",
    "enumerate_paths",
    "format_float",
    "grover_iteration",
    "grover_steps",
    "index_to_bits",
    "invert_phase_marked",
    "invert_phase_zero",
    "inverse_circuit",
    "measure",
    "norm",
    "optimal_iterations",
    "parse_circuit_document",
    "parse_trace_document",
    "path_amplitude",
    "probability",
    "render_circuit_document",
    "render_trace_document",
    "resolve_iterations",
    "roman_numeral",
    "run_circuit",
    "run_grover",
    "scan_probabilities",
    "sign_rule_entry",
    "success_probability",
    "uniform_state",
    "verify_against_matrix",
    "walsh_hadamard_fast",
    "walsh_hadamard_naive",
    "wh_matrix_entry",
    "wh_sign",
]
