from ._cyw import (
    CywError,
    approx_normal_form,
    ar_quiver_cm,
    ar_triangle,
    b_cycles,
    build_presentation,
    build_quiver,
    cm_indecomposables,
    configuration_classes,
    count_formula,
    delta,
    enumerate_brauer,
    enumerate_configurations,
    h_bar,
    is_configuration,
    is_maximal_brauer,
    predicted_cm_quiver,
    rotation_equivalent,
    stable_normalize,
    theta_map,
)

__all__ = [
    "CywError",
    "approx_normal_form",
    "ar_quiver_cm",
    "ar_triangle",
    "b_cycles",
    "build_presentation",
    "build_quiver",
    "cm_indecomposables",
    "configuration_classes",
    "count_formula",
    "delta",
    "enumerate_brauer",
    "enumerate_configurations",
    "h_bar",
    "is_configuration",
    "is_maximal_brauer",
    "predicted_cm_quiver",
    "rotation_equivalent",
    "stable_normalize",
    "theta_map",
]
