from pathlib import Path


class RollpassError(Exception):
    pass


# geometry


class NonMonotonicKnots(RollpassError):
    pass


class TooFewKnots(RollpassError):
    pass


class OutOfSpan(RollpassError):
    pass


# rollgen


class NoFeasibleDiameter(RollpassError):
    pass


class GenerationExhausted(RollpassError):
    pass


# raster


class OutOfFrame(RollpassError):
    pass


class BothEmpty(RollpassError):
    pass


class EmptyReference(RollpassError):
    pass


class DimensionMismatch(RollpassError):
    pass


class PbmFormatError(RollpassError):
    pass


# estimators


class ExternalFailure(RollpassError):
    def __init__(self, message: str, exit_code: int | None, workdir: Path):
        super().__init__(message)
        self.exit_code = exit_code
        self.workdir = workdir


class EstimatorTimeout(RollpassError):
    def __init__(self, message: str, workdir: Path):
        super().__init__(message)
        self.workdir = workdir


# planner


class NoViablePlan(RollpassError):
    pass


# dataset / cli


class DatasetError(RollpassError):
    pass


class UsageError(RollpassError):
    pass
