import argparse
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import NoReturn, Self, cast, final, override

from loguru import logger
from pydantic import Field, PositiveInt, ValidationError
from rich.console import Console

from rollpass.config import load_tool_config
from rollpass.dataset import (
    SPLITS,
    Split,
    augment_split,
    evaluate,
    generate_dataset,
    load_manifest,
    save_manifest,
    split_dataset,
    write_reports,
)
from rollpass.estimators import EstimatorInput, FlowParams, parse_estimator
from rollpass.estimators.external import INLET_FILE, OVER_FILE, UNDER_FILE
from rollpass.planner import (
    StandConfig,
    load_stand_config,
    plan,
    plan_document,
    save_plan,
)
from rollpass.raster import RasterConfig, read_pbm, write_pbm
from rollpass.rollgen import RollGenConfig, generate_profile
from rollpass.shared.constants import ROLLPASS_LOG, ROLLPASS_SEED
from rollpass.shared.errors import RollpassError, UsageError
from rollpass.shared.logging import logger_cleanup, logger_setup
from rollpass.shared.rng import RngStream
from rollpass.utils.fs import atomic_write_text, ensure_directory_exists
from rollpass.utils.pool import default_jobs
from rollpass.utils.pydantic_ext import FrozenModel

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

stdout = Console(highlight=False, soft_wrap=True)
stderr = Console(stderr=True, highlight=False, soft_wrap=True)


class CliConfig(FrozenModel):
    """Everything a run depends on besides its input files. Logged at the start of every run."""

    command: str
    seed: int = Field(default=ROLLPASS_SEED, ge=0)
    jobs: PositiveInt
    raster: RasterConfig = RasterConfig()
    rollgen: RollGenConfig = RollGenConfig()
    flow: FlowParams = FlowParams()
    out: Path | None = None
    verbosity: int = 0
    log_file: Path | None = None


class GenRollsArgs(FrozenModel):
    count: PositiveInt
    out: Path


class GenDatasetArgs(FrozenModel):
    count: PositiveInt
    out: Path
    alpha: float | None = Field(default=None, ge=0.0, le=1.0)


class SplitArgs(FrozenModel):
    dataset: Path
    train: float = Field(ge=0.0, le=1.0)
    val: float = Field(ge=0.0, le=1.0)
    eval: float = Field(ge=0.0, le=1.0)


class AugmentArgs(FrozenModel):
    dataset: Path
    split: Split = "train"


class EstimateArgs(FrozenModel):
    estimator: str
    sample: Path
    out: Path
    alpha: float | None = Field(default=None, ge=0.0, le=1.0)


class EvaluateArgs(FrozenModel):
    estimator: list[str]
    dataset: Path
    split: Split = "eval"
    report: Path
    inlet_closure: float | None = None
    diff_dir: Path | None = None
    alpha: float | None = Field(default=None, ge=0.0, le=1.0)


class PlanArgs(FrozenModel):
    inlet: Path
    target: Path
    estimator: str
    n: int = Field(ge=0)
    d: PositiveInt
    final: Path | None = None
    out: Path
    beam_width: PositiveInt | None = None
    trace_dir: Path | None = None


class ArgumentParser(argparse.ArgumentParser):
    """argparse that reports bad command lines as UsageError instead of exiting."""

    @override
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="rollpass",
        description="Hot-rolling pass design: roll scenarios, deformation estimators, evaluation and planning.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("-q", "--quiet", action="store_const", const=-1, dest="verbosity", default=0)
    parser.add_argument("-v", "--verbose", action="count", dest="verbosity", default=0)
    parser.add_argument("--jobs", type=int, default=default_jobs(), help="worker threads")
    parser.add_argument("--config", type=Path, default=None, help="TOML file with [raster], [rollgen] and [flow] tables")
    parser.add_argument("--log-file", type=Path, default=ROLLPASS_LOG, help="also log to this file")

    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name: str, help_: str) -> ArgumentParser:
        sub: ArgumentParser = commands.add_parser(
            name, help=help_, description=help_, formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
        return sub

    def seed(sub: ArgumentParser) -> None:
        sub.add_argument("--seed", type=int, default=ROLLPASS_SEED, help="random seed (env ROLLPASS_SEED)")

    gen_rolls = command("gen-rolls", "write random roll profiles as stand documents")
    gen_rolls.add_argument("--count", type=int, required=True)
    seed(gen_rolls)
    gen_rolls.add_argument("--out", type=Path, required=True, help="output directory")

    gen_dataset = command("gen-dataset", "generate a surrogate dataset, two samples per scenario")
    gen_dataset.add_argument("--count", type=int, required=True, help="number of scenarios")
    seed(gen_dataset)
    gen_dataset.add_argument("--alpha", type=float, default=None, help="flow loss fraction (default from config)")
    gen_dataset.add_argument("--out", type=Path, required=True, help="dataset root")

    split = command("split", "assign samples to train/val/eval")
    split.add_argument("--dataset", type=Path, required=True)
    split.add_argument("--train", type=float, required=True)
    split.add_argument("--val", type=float, required=True)
    split.add_argument("--eval", type=float, required=True)
    seed(split)

    augment = command("augment", "add flipped and rotated variants to one split")
    augment.add_argument("--dataset", type=Path, required=True)
    augment.add_argument("--split", choices=SPLITS, default="train")
    seed(augment)

    estimate = command("estimate", "run one estimator on a sample directory")
    estimate.add_argument("--estimator", required=True, help="baseline1 | baseline2 | flow | ext:<cmd>")
    estimate.add_argument("--sample", type=Path, required=True, help="directory holding inlet/over/under.pbm")
    estimate.add_argument("--alpha", type=float, default=None, help="flow loss fraction (default from config)")
    estimate.add_argument("--out", type=Path, required=True, help="outlet PBM file")

    evaluate_ = command("evaluate", "score estimators against a dataset split")
    evaluate_.add_argument(
        "--estimator", action="append", required=True, help="baseline1 | baseline2 | flow | ext:<cmd>; repeatable"
    )
    evaluate_.add_argument("--dataset", type=Path, required=True)
    evaluate_.add_argument("--split", choices=SPLITS, default="eval")
    evaluate_.add_argument("--report", type=Path, required=True, help="report CSV")
    evaluate_.add_argument(
        "--inlet-closure", type=float, choices=(0.0, 0.5), default=None, help="only samples with this inlet closure"
    )
    evaluate_.add_argument("--diff-dir", type=Path, default=None, help="write per-sample pixel differences here")
    evaluate_.add_argument("--alpha", type=float, default=None, help="flow loss fraction (default from the dataset)")

    plan_ = command("plan", "search for a rolling sequence from an inlet to a target")
    plan_.add_argument("--inlet", type=Path, required=True)
    plan_.add_argument("--target", type=Path, required=True)
    plan_.add_argument("--estimator", required=True, help="baseline1 | baseline2 | flow | ext:<cmd>")
    plan_.add_argument("-n", type=int, required=True, help="random stands per node")
    plan_.add_argument("-d", type=int, required=True, help="search depth")
    plan_.add_argument("--final", type=Path, default=None, help="stand document added at every level")
    seed(plan_)
    plan_.add_argument("--beam-width", type=int, default=None, help="keep only the best nodes per level")
    plan_.add_argument("--trace-dir", type=Path, default=None, help="write the shape after each stand")
    plan_.add_argument("--out", type=Path, required=True, help="plan JSON")

    return parser


def _gen_rolls(config: CliConfig, args: GenRollsArgs) -> str:
    ensure_directory_exists(args.out)
    for index in range(args.count):
        profile = generate_profile(RngStream(config.seed, index), config.rollgen)
        document = StandConfig(profile).to_document()
        atomic_write_text(args.out / f"{index:06d}.json", document.model_dump_json(indent=2) + "\n")
    return f"wrote {args.count} roll profiles to {args.out}"


def _gen_dataset(config: CliConfig, args: GenDatasetArgs) -> str:
    flow = config.flow if args.alpha is None else FlowParams(loss_fraction=args.alpha)
    manifest = generate_dataset(
        args.out, args.count, config.seed, flow, config.rollgen, config.raster, config.jobs
    )
    return f"wrote {len(manifest.samples)} samples to {args.out}"


def _split(config: CliConfig, args: SplitArgs) -> str:
    manifest = load_manifest(args.dataset)
    try:
        manifest = split_dataset(manifest, (args.train, args.val, args.eval), config.seed)
    except ValueError as e:
        raise UsageError(str(e)) from e
    save_manifest(args.dataset, manifest)
    counts = manifest.counts()
    return ", ".join(f"{split} {counts[split]}" for split in SPLITS)


def _augment(config: CliConfig, args: AugmentArgs) -> str:
    manifest = augment_split(args.dataset, load_manifest(args.dataset), config.seed, args.split, config.jobs)
    save_manifest(args.dataset, manifest)
    return f"{args.split}: {manifest.counts()[args.split]} samples"


def _estimate(config: CliConfig, args: EstimateArgs) -> str:
    flow = config.flow if args.alpha is None else FlowParams(loss_fraction=args.alpha)
    estimator = parse_estimator(args.estimator, flow)
    resolution = config.raster.resolution_mm
    estimator_input = EstimatorInput(
        read_pbm(args.sample / INLET_FILE, resolution),
        read_pbm(args.sample / OVER_FILE, resolution),
        read_pbm(args.sample / UNDER_FILE, resolution),
    )
    outlet = estimator.estimate(estimator_input)
    write_pbm(args.out, outlet)
    return f"{estimator.estimator_id}: outlet {outlet.area_px} px -> {args.out}"


def _evaluate(config: CliConfig, args: EvaluateArgs) -> str:
    manifest = load_manifest(args.dataset)
    flow = manifest.flow if args.alpha is None else FlowParams(loss_fraction=args.alpha)
    estimators = [parse_estimator(spec, flow) for spec in args.estimator]
    reports = [
        evaluate(estimator, args.dataset, manifest, args.split, args.inlet_closure, args.diff_dir, config.jobs)
        for estimator in estimators
    ]
    write_reports(args.report, reports)
    return "  ".join(f"{r.estimator_id}: mean jaccard {r.mean_jaccard:.4f}" for r in reports)


def _plan(config: CliConfig, args: PlanArgs) -> str:
    estimator = parse_estimator(args.estimator, config.flow)
    resolution = config.raster.resolution_mm
    inlet = read_pbm(args.inlet, resolution)
    target = read_pbm(args.target, resolution)
    final_config = None if args.final is None else load_stand_config(args.final)
    result = plan(
        inlet,
        target,
        estimator,
        args.n,
        args.d,
        RngStream(config.seed),
        final_config,
        config.rollgen,
        args.beam_width,
        config.jobs,
    )
    save_plan(args.out, plan_document(result, estimator.estimator_id, config.seed, args.n, args.d))
    if args.trace_dir is not None:
        for step, shape in enumerate(result.trace(inlet, estimator), start=1):
            write_pbm(args.trace_dir / f"step-{step}.pbm", shape)
    return f"best score {result.score:.4f} with {result.depth} stand(s) -> {args.out}"


_ARGS: dict[str, type[FrozenModel]] = {
    "gen-rolls": GenRollsArgs,
    "gen-dataset": GenDatasetArgs,
    "split": SplitArgs,
    "augment": AugmentArgs,
    "estimate": EstimateArgs,
    "evaluate": EvaluateArgs,
    "plan": PlanArgs,
}


@final
@dataclass(frozen=True)
class Invocation:
    config: CliConfig
    args: FrozenModel

    @classmethod
    def parse(cls, argv: Sequence[str]) -> Self:
        """Raises UsageError for a bad command line or config file."""
        namespace = build_parser().parse_args(list(argv))
        values: dict[str, object] = vars(namespace)
        command = str(values["command"])
        tool = load_tool_config(cast(Path | None, values["config"]))
        try:
            config = CliConfig.model_validate(
                {
                    "command": command,
                    "seed": values.get("seed", ROLLPASS_SEED),
                    "jobs": values["jobs"],
                    "raster": tool.raster,
                    "rollgen": tool.rollgen,
                    "flow": tool.flow,
                    "out": values.get("out", values.get("report")),
                    "verbosity": values["verbosity"],
                    "log_file": values["log_file"],
                }
            )
            model = _ARGS[command]
            args = model.model_validate({name: values[name] for name in model.model_fields if name in values})
        except ValidationError as e:
            raise UsageError(str(e)) from e
        return cls(config, args)


def dispatch(config: CliConfig, args: FrozenModel) -> str:
    match args:
        case GenRollsArgs():
            return _gen_rolls(config, args)
        case GenDatasetArgs():
            return _gen_dataset(config, args)
        case SplitArgs():
            return _split(config, args)
        case AugmentArgs():
            return _augment(config, args)
        case EstimateArgs():
            return _estimate(config, args)
        case EvaluateArgs():
            return _evaluate(config, args)
        case PlanArgs():
            return _plan(config, args)
        case _:
            raise UsageError(f"unknown command {config.command!r}")


def run(argv: Sequence[str]) -> int:
    """Exit 0 on success, 1 on a usage error, 2 on a runtime error; errors go to stderr."""
    try:
        invocation = Invocation.parse(argv)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except UsageError as e:
        stderr.print(f"usage error: {e}", markup=False)
        return EXIT_USAGE

    config = invocation.config
    logger_setup(config.log_file, config.verbosity)
    try:
        logger.info(f"rollpass {config.command}: {config.model_dump_json()}")
        summary = dispatch(config, invocation.args)
        stdout.print(summary, markup=False)
        return EXIT_OK
    except UsageError as e:
        stderr.print(f"usage error: {e}", markup=False)
        return EXIT_USAGE
    except (RollpassError, OSError, ValueError) as e:
        logger.opt(exception=e).debug("run failed")
        stderr.print(f"error: {type(e).__name__}: {e}", markup=False)
        return EXIT_RUNTIME
    finally:
        logger_cleanup()


def main() -> None:
    sys.exit(run(sys.argv[1:]))
