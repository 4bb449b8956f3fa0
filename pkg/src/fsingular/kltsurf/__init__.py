from .graphs import (
    adjunction_residuals,
    arm_determinant,
    boundary_coefficients,
    boundary_pair,
    classify_sfr,
    graph_type,
    parse_star_graph,
    solve_arm,
)
