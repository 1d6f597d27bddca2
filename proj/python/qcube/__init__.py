"""Exact simulator of the eight-state cube model and its qubit counterpart."""

from ._qcube import (
    AXES,
    FACES,
    KAPPAS,
    Circuit,
    CircuitError,
    CounterRng,
    ProbVec8,
    Rotation,
    __version__,
    antipode,
    bloch_of,
    born,
    check_probability_equivalence,
    check_transformation_covariance,
    check_well_definedness,
    clifford_of,
    conditional_update,
    conjugacy_classes,
    density_of,
    diagonal_action,
    element_order,
    embed,
    eval_exact,
    extremal,
    face_of,
    face_state,
    face_vertices,
    generator,
    group_elements,
    identity_rotation,
    inner,
    kappa_of,
    measurement_channel,
    measurement_for,
    membership,
    ontic_measure,
    opposite,
    outcome_distribution,
    parse_circuit,
    pretty_print,
    projective_update,
    random_epistemic_state,
    sample,
    state_from_bloch,
    state_from_weights,
    transform,
    uniform_state,
    verify,
    vertex_coords,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
