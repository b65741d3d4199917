"""Exception hierarchy shared by every module.

Two roots decide the process exit code in ``main.py``: input problems (2)
and computation failures (3).
"""


class InputError(ValueError):
    exit_code = 2


class ComputationError(RuntimeError):
    exit_code = 3


class PolynomialSyntaxError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownVariableError(InputError):
    pass


class InsufficientDataError(InputError):
    pass


class InconsistentDataError(InputError):
    pass


class RangeError(InputError):
    pass


class MalformedComplexError(InputError):
    pass


class UnknownExampleError(InputError):
    pass


class NonIsolatedSingularityError(ComputationError):
    pass


class SmoothGermError(ComputationError):
    pass


class NotSingularGermError(ComputationError):
    pass


class ReductionLimitError(ComputationError):
    pass


class MonodromyInconsistencyError(ComputationError):
    pass
