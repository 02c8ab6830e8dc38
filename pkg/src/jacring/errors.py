"""Exception hierarchy.

``PipelineAssertion`` subclasses are the mathematical consistency failures the
CLI maps to exit status 2; everything else under ``JacringError`` is a usage
or input problem (exit 1).
"""


class JacringError(Exception):
    pass


class FieldError(JacringError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class RingMismatch(JacringError):
    pass


class IndexOutOfRange(JacringError, IndexError):
    pass


class DimensionMismatch(JacringError):
    pass


class EmptyInput(JacringError):
    pass


class MissingUserInput(JacringError):
    pass


class DuplicateLambda(JacringError):
    pass


class NonConvergence(JacringError):
    pass


class BudgetExceeded(JacringError):
    pass


class PipelineAssertion(JacringError):
    pass


class DegenerateMatrix(PipelineAssertion):
    def __init__(self, subset):
        self.subset = tuple(subset)
        cols = ",".join(str(c + 1) for c in self.subset)
        super().__init__(f"4x4 minor on columns {{{cols}}} vanishes")


class TopClassInvalid(PipelineAssertion):
    pass


class UnexpectedDimensions(PipelineAssertion):
    def __init__(self, sizes):
        self.sizes = tuple(sizes)
        super().__init__(f"graded basis sizes {self.sizes}, expected (1, 9, 9, 1)")


class ResidueOffBasis(PipelineAssertion):
    pass


class GradingViolation(PipelineAssertion):
    pass

