"""Exception hierarchy shared by every smellwatt subsystem."""

from __future__ import annotations


class SmellwattError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""

    exit_code = 2


class ValidationError(SmellwattError):
    exit_code = 2


class ProfilingError(SmellwattError):
    exit_code = 3


# detector
class EmptyCorpus(ValidationError):
    pass


class IoFailure(ValidationError):
    def __init__(self, path, reason=""):
        self.path = str(path)
        super().__init__(f"cannot read {self.path}" + (f": {reason}" if reason else ""))


class BadRuleConfig(ValidationError):
    pass


# profiler
class LaunchError(ProfilingError):
    pass


class NoRuns(ProfilingError):
    pass


class DegenerateBaseline(ValidationError):
    pass


class NoInstances(ValidationError):
    pass


# impact store
class SchemaMismatch(ValidationError):
    pass


class InvariantViolation(ValidationError):
    def __init__(self, row, reason):
        self.row = row
        super().__init__(f"row {row}: {reason}")


class DuplicateKey(ValidationError):
    def __init__(self, app, kind):
        self.app, self.kind = app, kind
        super().__init__(f"duplicate record for ({app}, {kind})")


class MissingIndividualRecord(ValidationError):
    def __init__(self, app, kind):
        self.app, self.kind = app, kind
        super().__init__(f"no individual record for ({app}, {kind})")


class NoData(ValidationError):
    def __init__(self, category, kind):
        self.category, self.kind = category, kind
        super().__init__(f"no records for category {category} and kind {kind}")


# predictor
class RankDeficient(ValidationError):
    pass


class TooFewExamples(ValidationError):
    pass


class NonFiniteTarget(ValidationError):
    pass


class MissingFeature(ValidationError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"feature vector lacks {name!r}")


class LengthMismatch(ValidationError):
    pass


class EmptyEval(ValidationError):
    pass


class SingleExample(ValidationError):
    pass


class NoFeatures(ValidationError):
    pass


class TooFewExamplesForCV(ValidationError):
    pass


# advisor
class EmptyInventory(ValidationError):
    pass


class NoImpactSource(ValidationError):
    pass


class UnsupportedFormat(ValidationError):
    pass
