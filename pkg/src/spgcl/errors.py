"""Exception types shared across the library."""


class SpgclError(Exception):
    """Base class for all library errors."""


class CapExceeded(SpgclError):
    """A size cap (dense materialization, exact SVD) was exceeded."""


class DimensionMismatch(SpgclError):
    """Operand shapes are incompatible."""


class RankTooLarge(SpgclError):
    """Requested rank plus oversampling exceeds the matrix dimension."""


class LengthMismatch(SpgclError):
    """A vector override has the wrong length."""


class IndexOutOfRange(SpgclError):
    """An edge references a node outside the graph."""


class NonFiniteValue(SpgclError):
    """A NaN or Inf appeared where finite values are required."""


class TapeEmpty(SpgclError):
    """backward() was called before any forward pass was recorded."""


class EmptyTrainSet(SpgclError):
    """The training mask contains no nodes."""


class EmptyMask(SpgclError):
    """An evaluation mask contains no nodes."""


class ParseError(SpgclError):
    """A dataset file could not be parsed.

    Carries the offending file and 1-based line number.
    """

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class InconsistentCounts(SpgclError):
    """Node counts disagree across dataset files."""


class UnknownSplitToken(SpgclError):
    """splits.csv contains a token other than train/val/test/none."""


class ConfigError(SpgclError):
    """An experiment configuration is invalid; message names the key."""
