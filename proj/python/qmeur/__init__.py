"""Entropic uncertainty bounds for measurements distributed over quantum memories."""

from ._core import (  # noqa: F401
    BoundReport,
    DensityMatrix,
    MeasurementBasis,
    QmeurError,
    __version__,
    bell_state,
    bound_report,
    bound_thm3,
    builtin_basis,
    channel_constant_b,
    conditional,
    family_mixed_two_qubit,
    generalized_w,
    holevo,
    maximally_mixed,
    measured_conditional,
    mutual_information,
    outcome_distribution,
    overlap_c,
    partial_trace,
    post_measurement_state,
    random_probabilities,
    random_state,
    run_scenario,
    shannon,
    von_neumann,
)

PAULI = ("pauli-x", "pauli-y", "pauli-z")


def pauli_bases():
    return [builtin_basis(name) for name in PAULI]
