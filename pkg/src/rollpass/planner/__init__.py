from rollpass.planner.search import SearchTree, draw_stands, expand, plan, replay
from rollpass.planner.serialization import (
    load_plan,
    load_stand_config,
    plan_document,
    save_plan,
    save_stand_config,
)
from rollpass.planner.stand import (
    QUARTER_TURNS,
    QuarterTurn,
    StandConfig,
    StandDocument,
    apply_stand,
    stand_input,
    touches_rolls,
)
from rollpass.planner.types import Plan, PlanDocument, PlanNode

__all__ = [
    "QUARTER_TURNS",
    "Plan",
    "PlanDocument",
    "PlanNode",
    "QuarterTurn",
    "SearchTree",
    "StandConfig",
    "StandDocument",
    "apply_stand",
    "draw_stands",
    "expand",
    "load_plan",
    "load_stand_config",
    "plan",
    "plan_document",
    "replay",
    "save_plan",
    "save_stand_config",
    "stand_input",
    "touches_rolls",
]
