"""Exception taxonomy shared across the toolkit."""


class VspopError(Exception):
    """Base class for all toolkit errors."""


class MissingField(VspopError):
    def __init__(self, line_index: int, field: str):
        super().__init__(f"record at line {line_index} is missing field {field!r}")
        self.line_index = line_index
        self.field = field


class BadTimestamp(VspopError):
    def __init__(self, line_index: int, field: str, detail: str = ""):
        msg = f"record at line {line_index} has a bad timestamp in {field!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.line_index = line_index
        self.field = field


class IoError(VspopError):
    pass


class WrongLength(VspopError):
    pass


class UnknownUser(VspopError):
    pass


class DimensionMismatch(VspopError):
    pass


class ShapeMismatch(VspopError):
    pass


class RankDeficient(VspopError):
    pass


class GraphNotBuilt(VspopError):
    pass


class BatchTooSmall(VspopError):
    pass


class LengthMismatch(VspopError):
    pass


class DegenerateInput(VspopError):
    pass


class SolverNotConverged(VspopError):
    pass


class ArtifactMismatch(VspopError):
    """A consumed artifact was produced under a different configuration."""
