from dataclasses import dataclass
from typing import final

import rustworkx as rx
from loguru import logger

from rollpass.estimators.base import Estimator
from rollpass.planner.stand import (
    QUARTER_TURNS,
    StandConfig,
    apply_stand,
    stand_input,
    touches_rolls,
)
from rollpass.planner.types import Plan, PlanNode
from rollpass.raster.metrics import jaccard
from rollpass.raster.raster import Raster, check_same_shape
from rollpass.rollgen.config import RollGenConfig
from rollpass.rollgen.generator import generate_profile
from rollpass.shared.errors import NoViablePlan, RollpassError
from rollpass.shared.rng import RngStream
from rollpass.utils.pool import parallel_map


class SearchTree:
    """The planner's tree of shapes. Node indices follow creation order, so BFS order is index order."""

    def __init__(self, inlet: Raster, target: Raster):
        self.target = target
        self.graph: rx.PyDiGraph[PlanNode, int] = rx.PyDiGraph(check_cycle=False, multigraph=False)
        self.root = self.graph.add_node(
            PlanNode(shape=inlet, config=None, parent=None, level=0, score=jaccard(inlet, target))
        )

    def __getitem__(self, index: int) -> PlanNode:
        return self.graph[index]

    def __len__(self) -> int:
        return self.graph.num_nodes()

    def add_child(self, parent: int, shape: Raster, config: StandConfig) -> int:
        node = PlanNode(
            shape=shape,
            config=config,
            parent=parent,
            level=self.graph[parent].level + 1,
            score=jaccard(shape, self.target),
        )
        index = self.graph.add_node(node)
        self.graph.add_edge(parent, index, node.level)
        return index

    def nodes_at(self, level: int) -> list[int]:
        return [i for i in self.graph.node_indices() if self.graph[i].level == level]

    def best(self) -> int | None:
        """Highest score among non-root nodes; ties go to the shallower node, then the earlier one."""
        candidates = [i for i in self.graph.node_indices() if i != self.root]
        if not candidates:
            return None
        return min(candidates, key=lambda i: (-self.graph[i].score, self.graph[i].level, i))

    def backtrack(self, index: int) -> Plan:
        node = self.graph[index]
        steps: list[StandConfig] = []
        cursor = node
        while cursor.config is not None and cursor.parent is not None:
            steps.append(cursor.config)
            cursor = self.graph[cursor.parent]
        return Plan(
            steps=tuple(reversed(steps)),
            final_shape=node.shape,
            score=node.score,
        )


def draw_stands(
    n: int,
    final_config: StandConfig | None,
    rng: RngStream,
    rollgen_config: RollGenConfig = RollGenConfig(),
) -> list[StandConfig]:
    """n random stands, each a profile then a quarter turn, then `final_config` unchanged if given."""
    stands = [
        StandConfig(generate_profile(rng, rollgen_config), QUARTER_TURNS[rng.integer(0, 4)])
        for _ in range(n)
    ]
    if final_config is not None:
        stands.append(final_config)
    return stands


@final
@dataclass(frozen=True)
class _ChildOutcome:
    shape: Raster | None
    reason: str = ""
    no_op: bool = False


def _evaluate_stand(shape: Raster, stand: StandConfig, estimator: Estimator) -> _ChildOutcome:
    estimator_input = stand_input(shape, stand)
    if not touches_rolls(estimator_input):
        return _ChildOutcome(None, "the shape touches neither roll", no_op=True)
    try:
        outlet = estimator.estimate(estimator_input)
    except (RollpassError, ValueError) as e:
        return _ChildOutcome(None, f"{estimator.estimator_id} failed: {e}")
    if outlet.is_empty:
        return _ChildOutcome(None, "estimator returned an empty shape")
    return _ChildOutcome(outlet)


def expand(
    tree: SearchTree,
    parent: int,
    n: int,
    final_config: StandConfig | None,
    estimator: Estimator,
    rng: RngStream,
    rollgen_config: RollGenConfig = RollGenConfig(),
    jobs: int = 1,
) -> list[int]:
    """
    Add up to n (+1 with `final_config`) children under `parent` and return their indices.

    Estimator errors, no-op stands and empty outlets drop the child; the drop is logged and the
    search carries on with the survivors.
    """
    node = tree[parent]
    if node.shape.is_empty:
        raise ValueError("cannot expand an empty shape")
    stands = draw_stands(n, final_config, rng, rollgen_config)
    outcomes = parallel_map(lambda stand: _evaluate_stand(node.shape, stand, estimator), stands, jobs)

    children: list[int] = []
    for position, (stand, outcome) in enumerate(zip(stands, outcomes, strict=True)):
        if outcome.shape is None:
            if outcome.no_op:
                logger.debug(f"node {parent}: child {position} rejected, {outcome.reason}")
            else:
                logger.warning(f"node {parent}: child {position} dropped, {outcome.reason}")
            continue
        children.append(tree.add_child(parent, outcome.shape, stand))
    return children


def plan(
    inlet: Raster,
    target: Raster,
    estimator: Estimator,
    n: int,
    d: int,
    rng: RngStream,
    final_config: StandConfig | None = None,
    rollgen_config: RollGenConfig = RollGenConfig(),
    beam_width: int | None = None,
    jobs: int = 1,
) -> Plan:
    """
    Blind breadth-first search to depth `d`, then backtrack from the best node over all levels.

    The full tree holds (n + 1)^d leaves with a final stand, so depth is the expensive knob;
    `beam_width` keeps only the best nodes of each level when set.

    Raises NoViablePlan when no child survived at any level.
    """
    if d < 1:
        raise ValueError(f"search depth must be >= 1, got {d}")
    if n < 0:
        raise ValueError(f"children per node must be >= 0, got {n}")
    if inlet.is_empty or target.is_empty:
        raise ValueError("inlet and target must be nonempty")
    check_same_shape(inlet, target)

    tree = SearchTree(inlet, target)
    frontier = [tree.root]
    for level in range(1, d + 1):
        next_frontier: list[int] = []
        for parent in frontier:
            next_frontier.extend(
                expand(tree, parent, n, final_config, estimator, rng, rollgen_config, jobs)
            )
        if beam_width is not None:
            next_frontier = sorted(next_frontier, key=lambda i: (-tree[i].score, i))[:beam_width]
            next_frontier.sort()
        best_here = max((tree[i].score for i in next_frontier), default=0.0)
        logger.info(f"level {level}: {len(next_frontier)} nodes, best score {best_here:.4f}")
        frontier = next_frontier
        if not frontier:
            break

    best = tree.best()
    if best is None:
        raise NoViablePlan(f"every child failed ({estimator.estimator_id}, n={n}, d={d})")
    result = tree.backtrack(best)
    logger.info(f"best node {best} at level {result.depth}, score {result.score:.4f}")
    return result


def replay(plan_: Plan, inlet: Raster, estimator: Estimator) -> Raster:
    """Fold the plan's stands over `inlet`."""
    shape = inlet
    for stand in plan_.steps:
        shape = apply_stand(shape, stand, estimator)
    return shape
