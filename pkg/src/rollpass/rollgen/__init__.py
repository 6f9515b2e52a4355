from rollpass.rollgen.config import RollGenConfig
from rollpass.rollgen.generator import (
    KnotVectors,
    draw_knot_vectors,
    feasible_diameters,
    generate_profile,
    generate_scenario,
    penetration_ratio,
    select_diameter,
)

__all__ = [
    "KnotVectors",
    "RollGenConfig",
    "draw_knot_vectors",
    "feasible_diameters",
    "generate_profile",
    "generate_scenario",
    "penetration_ratio",
    "select_diameter",
]
