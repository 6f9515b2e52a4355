from rollpass.geometry.curves import Point2, ProfileCurve, fit_profile_curve
from rollpass.geometry.profile import (
    Disk,
    ProfileKnots,
    RollProfile,
    Scenario,
    disk_columns,
    gap_area,
    min_vertical_gap,
    penetration_area,
    place_scenario,
)

__all__ = [
    "Disk",
    "Point2",
    "ProfileCurve",
    "ProfileKnots",
    "RollProfile",
    "Scenario",
    "disk_columns",
    "fit_profile_curve",
    "gap_area",
    "min_vertical_gap",
    "penetration_area",
    "place_scenario",
]
