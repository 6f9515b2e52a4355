from rollpass.estimators.base import EstimatorInput
from rollpass.geometry.profile import Scenario
from rollpass.geometry.tests.conftest import create_flat_profile
from rollpass.raster.rasterize import rasterize_scenario


def create_flat_input(gap: float = 8.0, diameter: float = 24.0, width: float = 100.0) -> EstimatorInput:
    """A centred disk squeezed by parallel rolls `gap` mm apart, rolls closed."""
    scenario = Scenario(create_flat_profile(gap=gap, width=width), diameter, 1000.0, seed=0)
    return EstimatorInput.from_scenario_raster(rasterize_scenario(scenario, 1.0))
