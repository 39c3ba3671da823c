"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to.
"""


class EulerSeqError(Exception):
    exit_code = 1


class InternalError(EulerSeqError):
    """A computation produced something that should be impossible."""

    exit_code = 1


class ParseError(EulerSeqError):
    exit_code = 2

    def __init__(self, message, position=None, source=None):
        self.position = position
        self.source = source
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)


class InvalidInput(EulerSeqError):
    exit_code = 3


class NonHomogeneous(InvalidInput):
    def __init__(self, relation, first, second):
        self.relation = relation
        self.monomials = (first, second)
        super().__init__(
            f"relation {relation!r} is not weighted-homogeneous: "
            f"{first} and {second} have different weighted degrees"
        )


class NonAmple(EulerSeqError):
    exit_code = 4

    def __init__(self, degree):
        self.degree = degree
        super().__init__(f"divisor is not ample: degree {degree} <= 0")


class HypothesisViolated(EulerSeqError):
    exit_code = 4
