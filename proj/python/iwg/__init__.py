"""Exact Jacobians of graphs along cyclic voltage p-towers of covers."""

from ._core import (
    DerivedGraph,
    Divisor,
    Example1Result,
    Graph,
    GuardError,
    InputError,
    InvariantFactors,
    IwasawaFit,
    LevelRecord,
    MathError,
    PSylow,
    RankTrajectory,
    SnfStrategy,
    StickelbergerReport,
    TowerReport,
    VoltageAssignment,
    analyze_tower,
    brute_force_tree_count,
    complete_graph,
    component_count,
    derive,
    example1_expected,
    fit_invariants,
    format_graph,
    format_voltages,
    galois_action,
    intermediate_cover,
    is_connected,
    jacobian,
    laplacian,
    laplacian_image,
    level_graph,
    p_sylow,
    parse_graph,
    parse_voltages,
    principal_divisor,
    rank_trajectory_check,
    reduced_laplacian,
    smith_normal_form,
    spanning_tree_count,
    stickelberger,
    verify_example1,
    voltage_laplacian,
)

__version__ = "0.1.0"

__all__ = [
    "DerivedGraph",
    "Divisor",
    "Example1Result",
    "Graph",
    "GuardError",
    "InputError",
    "InvariantFactors",
    "IwasawaFit",
    "LevelRecord",
    "MathError",
    "PSylow",
    "RankTrajectory",
    "SnfStrategy",
    "StickelbergerReport",
    "TowerReport",
    "VoltageAssignment",
    "analyze_tower",
    "brute_force_tree_count",
    "complete_graph",
    "component_count",
    "derive",
    "example1_expected",
    "fit_invariants",
    "format_graph",
    "format_voltages",
    "galois_action",
    "intermediate_cover",
    "is_connected",
    "jacobian",
    "laplacian",
    "laplacian_image",
    "level_graph",
    "p_sylow",
    "parse_graph",
    "parse_voltages",
    "principal_divisor",
    "rank_trajectory_check",
    "reduced_laplacian",
    "smith_normal_form",
    "spanning_tree_count",
    "stickelberger",
    "verify_example1",
    "voltage_laplacian",
]
