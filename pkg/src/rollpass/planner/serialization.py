from pathlib import Path

from pydantic import ValidationError

from rollpass.planner.stand import StandConfig, StandDocument
from rollpass.planner.types import Plan, PlanDocument
from rollpass.shared.errors import RollpassError, UsageError
from rollpass.utils.fs import atomic_write_text


def plan_document(plan: Plan, estimator_id: str, seed: int, n: int, d: int) -> PlanDocument:
    return PlanDocument(
        score=plan.score,
        steps=[stand.to_document() for stand in plan.steps],
        estimator_id=estimator_id,
        seed=seed,
        n=n,
        d=d,
    )


def save_plan(path: Path, document: PlanDocument) -> None:
    atomic_write_text(path, document.model_dump_json(indent=2) + "\n")


def load_plan(path: Path) -> PlanDocument:
    return PlanDocument.model_validate_json(path.read_text())


def load_stand_config(path: Path) -> StandConfig:
    """Read a `--final` stand document. Raises UsageError for a malformed file."""
    try:
        return StandConfig.from_document(StandDocument.model_validate_json(path.read_text()))
    except (OSError, ValidationError, ValueError, RollpassError) as e:
        raise UsageError(f"cannot read stand configuration {path}: {e}") from e


def save_stand_config(path: Path, stand: StandConfig) -> None:
    atomic_write_text(path, stand.to_document().model_dump_json(indent=2) + "\n")
