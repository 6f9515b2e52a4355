from pathlib import Path

import pytest

from rollpass.estimators.flow import FlowEstimator
from rollpass.planner.search import draw_stands, plan, replay
from rollpass.planner.serialization import (
    load_plan,
    load_stand_config,
    plan_document,
    save_plan,
    save_stand_config,
)
from rollpass.planner.tests.conftest import create_disk_inlet, create_flat_stand
from rollpass.planner.types import Plan
from rollpass.shared.constants import PLAN_SCHEMA_VERSION
from rollpass.shared.errors import UsageError
from rollpass.shared.rng import RngStream


def test_saved_plan_replays_without_the_seed(tmp_path: Path):
    inlet = create_disk_inlet(28.0)
    estimator = FlowEstimator()
    result = plan(
        inlet, create_disk_inlet(20.0), estimator, n=2, d=2, rng=RngStream(9), final_config=create_flat_stand()
    )
    path = tmp_path / "plan.json"

    save_plan(path, plan_document(result, estimator.estimator_id, seed=9, n=2, d=2))
    document = load_plan(path)

    assert document.schema_version == PLAN_SCHEMA_VERSION
    assert document.score == result.score
    assert (document.seed, document.n, document.d, document.estimator_id) == (9, 2, 2, "flow")
    assert tuple(document.stands()) == result.steps
    reloaded = Plan(tuple(document.stands()), result.final_shape, document.score)
    assert replay(reloaded, inlet, estimator) == result.final_shape


def test_random_stands_survive_a_document_round_trip(tmp_path: Path):
    stand = draw_stands(1, None, RngStream(10))[0]
    path = tmp_path / "final.json"

    save_stand_config(path, stand)

    assert load_stand_config(path) == stand


def test_flat_stand_document_keeps_its_rotation(tmp_path: Path):
    path = tmp_path / "final.json"

    save_stand_config(path, create_flat_stand(rotation=270))

    assert load_stand_config(path).rotation == 270


@pytest.mark.parametrize("content", ["", "{}", '{"profile": {"over": [], "under": [], "width": 1.0}}'])
def test_bad_stand_documents_are_usage_errors(tmp_path: Path, content: str):
    path = tmp_path / "final.json"
    path.write_text(content)

    with pytest.raises(UsageError):
        load_stand_config(path)


def test_missing_stand_document_is_a_usage_error(tmp_path: Path):
    with pytest.raises(UsageError):
        load_stand_config(tmp_path / "absent.json")


def test_same_seed_gives_byte_identical_plans(tmp_path: Path):
    inlet = create_disk_inlet(28.0)
    target = create_disk_inlet(20.0)
    estimator = FlowEstimator()
    paths = [tmp_path / "a.json", tmp_path / "b.json"]

    for path in paths:
        result = plan(inlet, target, estimator, n=2, d=2, rng=RngStream(12), final_config=create_flat_stand())
        save_plan(path, plan_document(result, estimator.estimator_id, seed=12, n=2, d=2))

    assert paths[0].read_bytes() == paths[1].read_bytes()
