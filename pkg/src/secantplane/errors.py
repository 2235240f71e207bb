"""Exception types shared across the package.

Every library error is a ``ValueError`` subclass so callers that do not care
about the fine-grained cause can catch a single built-in type. Distinct error
causes get distinct classes: a zero-length direction is not the same failure
as a near-parallel basis, and the probe needs to tell "function undefined
here" apart from "not differentiable".
"""


class ZeroVector(ValueError):
    """A direction vector (or point difference) has zero length."""


class DegenerateBasis(ValueError):
    """The secant basis is too close to parallel for a stable solve.

    Carries the computed ``sin_theta`` of the offending basis.
    """

    def __init__(self, message: str, sin_theta: float):
        super().__init__(message)
        self.sin_theta = sin_theta


class InvalidSpec(ValueError):
    """Malformed sequence or probe configuration."""


class RadiusUnderflow(ValueError):
    """The requested step would shrink the sample radius below the safe minimum."""


class EvaluationError(ValueError):
    """Function evaluation failed or produced a non-finite value.

    ``node`` is the offending expression node when the function came from the
    expression parser; ``point`` is the input point, when known.
    """

    def __init__(self, message: str, node=None, point=None):
        super().__init__(message)
        self.node = node
        self.point = point


class ParseError(ValueError):
    """Expression source rejected.

    ``offset`` is the byte offset into the UTF-8 source where parsing failed;
    ``expected`` describes what would have been accepted there.
    """

    def __init__(self, offset: int, expected: str):
        super().__init__(f"parse error at offset {offset}: expected {expected}")
        self.offset = offset
        self.expected = expected
