"""Quality measures for point configurations on the unit sphere S^d."""

from ._sphcap import (
    McConfig,
    McEstimate,
    PointSet,
    QualityReport,
    UnitPoint,
    WeightFunction,
    analyze,
    area_ratio,
    cap_measure,
    discrepancy_closed,
    discrepancy_mc,
    distance_constant,
    energy_gap,
    generate,
    induced_distance,
    kernel_mc,
    kernel_mean,
    kernel_unweighted,
    kernel_weighted,
    load_csv,
    log_gamma,
    mean_distance,
    parse_weight,
    regularized_incomplete_beta,
    representer_eval,
    sample_uniform,
    save_csv,
    sum_of_distances,
    unit_weight,
    weighted_discrepancy_mc,
    weighted_wce,
    worst_case_error,
)

__all__ = [
    "McConfig",
    "McEstimate",
    "PointSet",
    "QualityReport",
    "UnitPoint",
    "WeightFunction",
    "analyze",
    "area_ratio",
    "cap_measure",
    "discrepancy_closed",
    "discrepancy_mc",
    "distance_constant",
    "energy_gap",
    "generate",
    "induced_distance",
    "kernel_mc",
    "kernel_mean",
    "kernel_unweighted",
    "kernel_weighted",
    "load_csv",
    "log_gamma",
    "mean_distance",
    "parse_weight",
    "regularized_incomplete_beta",
    "representer_eval",
    "sample_uniform",
    "save_csv",
    "sum_of_distances",
    "unit_weight",
    "weighted_discrepancy_mc",
    "weighted_wce",
    "worst_case_error",
]
