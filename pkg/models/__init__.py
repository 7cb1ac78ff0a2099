"""Data records that cross process and JSON boundaries."""
from models.plan import BlowupPlan, BlowupStep, StepKind
from models.report import Case, ClassificationReport

__all__ = [
    "BlowupPlan",
    "BlowupStep",
    "StepKind",
    "Case",
    "ClassificationReport",
]
