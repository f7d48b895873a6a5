"""Exception hierarchy. Every error carries a machine-readable ``code``."""


class CharvarError(Exception):
    code = "error"


class PresentationSyntaxError(CharvarError):
    code = "syntax-error"

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownGenerator(CharvarError):
    code = "unknown-generator"


class EmptyGeneratorList(CharvarError):
    code = "empty-generator-list"


class RelatorNotKilled(CharvarError):
    code = "relator-not-killed"

    def __init__(self, index):
        super().__init__(f"relator {index} does not map to zero")
        self.index = index


class NotSurjective(CharvarError):
    """Images generate a proper subgroup of Z^m.

    When the image has finite index, ``recoordinatize`` holds a rational
    matrix T such that composing T with the map gives a surjection onto Z^m.
    """

    code = "not-surjective"

    def __init__(self, message, recoordinatize=None):
        super().__init__(message)
        self.recoordinatize = recoordinatize


class ZeroMap(CharvarError):
    code = "zero-map"


class VariableCountMismatch(CharvarError):
    code = "variable-count-mismatch"


class GenericNotEvaluable(CharvarError):
    code = "generic-not-evaluable"


class TooManyMinors(CharvarError):
    code = "too-many-minors"

    def __init__(self, count, ceiling):
        super().__init__(f"{count} minors exceeds ceiling {ceiling}")
        self.count = count
        self.ceiling = ceiling


class QuotientInvalid(CharvarError):
    code = "quotient-invalid"


class NotUnivariate(CharvarError):
    code = "not-univariate"


class WindowTooLarge(CharvarError):
    code = "window-too-large"

    def __init__(self, cells, ceiling):
        super().__init__(f"window needs {cells} cells, ceiling is {ceiling}")
        self.cells = cells
        self.ceiling = ceiling


class UnsupportedDegree(CharvarError):
    code = "unsupported-degree"


class TrivialNu(CharvarError):
    code = "trivial-nu"


class FullnessNotEstablished(CharvarError):
    code = "fullness-not-established"


class GenusTooSmall(CharvarError):
    code = "genus-too-small"
