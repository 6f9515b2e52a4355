import pytest

from rollpass.estimators.flow import FlowEstimator
from rollpass.planner.search import SearchTree, draw_stands, expand, plan, replay
from rollpass.planner.stand import QUARTER_TURNS, StandConfig, apply_stand
from rollpass.planner.tests.conftest import (
    CountingEstimator,
    FailingEstimator,
    create_disk_inlet,
    create_flat_stand,
)
from rollpass.planner.types import Plan
from rollpass.raster.raster import Raster, union
from rollpass.raster.tests.conftest import create_block
from rollpass.raster.transforms import rotate_quarter
from rollpass.rollgen.config import RollGenConfig
from rollpass.rollgen.generator import generate_scenario
from rollpass.shared.errors import NoViablePlan
from rollpass.shared.rng import RngStream


def test_final_stand_alone_gives_one_child():
    tree = SearchTree(create_disk_inlet(), create_disk_inlet(20.0))

    children = expand(tree, tree.root, 0, create_flat_stand(), FlowEstimator(), RngStream(1))

    assert len(children) == 1
    assert tree[children[0]].config == create_flat_stand()
    assert tree[children[0]].level == 1
    assert tree[children[0]].parent == tree.root


def test_full_expansion_calls_the_estimator_for_every_child():
    estimator = CountingEstimator()
    # stands no wider than the frame always reach into a full-frame shape
    narrow = RollGenConfig(width_range_mm=(80.0, 100.0))

    plan(
        Raster.full(),
        create_disk_inlet(),
        estimator,
        n=2,
        d=2,
        rng=RngStream(2),
        final_config=create_flat_stand(),
        rollgen_config=narrow,
    )

    assert estimator.calls == 3 + 3 * 3


def test_final_stand_recovers_its_own_outlet():
    inlet = create_disk_inlet()
    stand = create_flat_stand(gap=14.0, rotation=90)
    estimator = FlowEstimator()
    target = apply_stand(inlet, stand, estimator)

    result = plan(inlet, target, estimator, n=0, d=1, rng=RngStream(3), final_config=stand)

    assert result.depth == 1
    assert result.steps[0] == stand
    assert result.score >= 0.99


def test_shallower_node_wins_a_tie():
    inlet = create_disk_inlet()
    target = create_disk_inlet(20.0)
    tree = SearchTree(inlet, target)
    stand = create_flat_stand()

    shallow = tree.add_child(tree.root, target, stand)
    other = tree.add_child(tree.root, inlet, stand)
    tree.add_child(other, target, stand)

    assert tree.best() == shallow
    assert tree.backtrack(shallow).depth == 1
    assert tree.nodes_at(2) == [3]


def test_backtrack_follows_parents():
    inlet = create_disk_inlet()
    tree = SearchTree(inlet, inlet)
    first, second = create_flat_stand(16.0), create_flat_stand(12.0, 90)

    child = tree.add_child(tree.root, inlet, first)
    grandchild = tree.add_child(child, inlet, second)

    assert tree.backtrack(grandchild).steps == (first, second)
    assert len(tree) == 3


def test_plans_are_deterministic_and_replayable():
    inlet = create_disk_inlet(28.0)
    target = create_disk_inlet(20.0)
    estimator = FlowEstimator()

    first, second = (
        plan(inlet, target, estimator, n=2, d=2, rng=RngStream(4), final_config=create_flat_stand())
        for _ in range(2)
    )

    assert first.steps == second.steps
    assert first.final_shape == second.final_shape
    assert replay(first, inlet, estimator) == first.final_shape
    assert first.trace(inlet, estimator)[-1] == first.final_shape


def test_parallel_expansion_matches_sequential():
    inlet = create_disk_inlet(28.0)
    target = create_disk_inlet(20.0)
    estimator = FlowEstimator()

    final = create_flat_stand()

    sequential = plan(inlet, target, estimator, n=3, d=1, rng=RngStream(5), final_config=final, jobs=1)
    parallel = plan(inlet, target, estimator, n=3, d=1, rng=RngStream(5), final_config=final, jobs=4)

    assert sequential.steps == parallel.steps
    assert sequential.final_shape == parallel.final_shape


def test_failed_children_leave_no_plan():
    with pytest.raises(NoViablePlan):
        plan(
            create_disk_inlet(),
            create_disk_inlet(20.0),
            FailingEstimator(),
            n=2,
            d=2,
            rng=RngStream(6),
            final_config=create_flat_stand(),
        )


def test_invalid_arguments_are_rejected():
    inlet = create_disk_inlet()

    with pytest.raises(ValueError):
        plan(inlet, inlet, FlowEstimator(), n=1, d=0, rng=RngStream(7))
    with pytest.raises(ValueError):
        plan(inlet, Raster.empty(), FlowEstimator(), n=1, d=1, rng=RngStream(7))


def test_inlet_rotation_is_absorbed_by_the_first_turn_only():
    """
    Outlets are not turned back, so a turn carries over to every later stand. A plan replayed on an
    inlet turned by 90 degrees therefore matches the original once the first stand turns 90 degrees
    less; the later turns stay as they are instead of all shifting by -90 degrees.
    """
    # a disk with a tab on its right, so that turning it matters
    inlet = union(create_disk_inlet(28.0), create_block(95, 110, 10, 40))
    estimator = FlowEstimator()

    for seed in range(20):
        steps = draw_stands(2, None, RngStream(seed))
        first = steps[0]
        shifted_turn = QUARTER_TURNS[(QUARTER_TURNS.index(first.rotation) - 1) % 4]
        shifted = (StandConfig(first.profile, shifted_turn), *steps[1:])

        original = Plan(tuple(steps), inlet, 0.0)
        turned = Plan(shifted, inlet, 0.0)

        assert replay(turned, rotate_quarter(inlet, 90), estimator) == replay(original, inlet, estimator)


def test_generating_stands_recover_their_targets():
    estimator = FlowEstimator()

    for stream_id in range(50):
        rng = RngStream(31, stream_id)
        scenario = generate_scenario(rng)
        stand = StandConfig(scenario.profile, QUARTER_TURNS[rng.integer(0, 4)])
        inlet = create_disk_inlet(scenario.diameter)
        target = apply_stand(inlet, stand, estimator)

        result = plan(inlet, target, estimator, n=0, d=1, rng=RngStream(0), final_config=stand)

        assert result.score >= 0.99
