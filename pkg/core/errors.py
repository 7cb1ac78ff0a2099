"""Exception hierarchy shared by every module."""
from typing import Any, Optional


class AnticanonError(Exception):
    """Base class for all engine errors."""


class StructuralError(AnticanonError, ValueError):
    """A plan, step or class does not fit the structure it is applied to."""


class DepthError(StructuralError):
    """A step would need an infinitely-near point of depth two or more."""


class ContractError(AnticanonError, ValueError):
    """An operation was called outside its precondition."""


class UnsupportedDegreeError(AnticanonError, NotImplementedError):
    """Multiple of the anticanonical class the rule does not handle."""


class GenericityError(AnticanonError):
    """Seeds never agreed on a dimension, so generic position is not certified."""


class InsufficientSamplesError(AnticanonError):
    """Evaluation rank did not stabilise with the given number of samples."""


class ClassifierError(AnticanonError):
    """A (h0(2K^-1), M^2) signature outside the known table."""
    
    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report
