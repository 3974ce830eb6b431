"""Stabilizer-code rewiring: plans, tableau execution, and distance scans.

Thin re-export of the compiled core. Codes and plans round-trip through the
same text format the command-line tool reads and writes.
"""

from ._core import (
    BlockDecomposition,
    CatResult,
    ConstrainedSearchResult,
    ConstraintSet,
    DistanceReport,
    ExecutionResult,
    LogicalAction,
    MeasurementRecord,
    MeasurementStep,
    Pauli,
    RewirePlan,
    StabilizerCode,
    StabilizerState,
    SubsystemCode,
    UnitaryReport,
    ValidationReport,
    apply_pauli,
    build_padded_steane,
    build_reed_muller,
    build_steane,
    canonical_tableau,
    cat_state_measure,
    code_distance,
    compute_logicals,
    connectivity_matrix,
    constrained_path_search,
    decompose_blocks,
    enumerate_subsystem_codes,
    execute_plan,
    extract_logical_action,
    fixtures,
    is_gauge_fixing,
    joint_subsystem_code,
    load_code,
    load_plan,
    measure,
    measure_postselect,
    pad_with_ancillas,
    parse_code,
    parse_plan,
    path_distance_profile,
    permute_qubits,
    plan_rewire,
    prepare_codespace,
    save_code,
    save_plan,
    serialize_code,
    serialize_plan,
    serialize_transcript,
    span_fingerprint,
    stabilizer_eigenvalue,
    subsystem_distance,
    validate,
    verify_unitary_properties,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
