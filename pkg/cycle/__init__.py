"""Anticanonical cycle under real-pair blowups."""
from cycle.model import AnticanonicalCycle, CycleComponent, ExceptionalCurve, Site, SiteKind
from cycle.blowup import (
    apply_step,
    build_cycle,
    canonical_string,
    initial_cycle,
    string,
    target_pattern,
)
from cycle.enumerate import enumerate_plans

__all__ = [
    "AnticanonicalCycle",
    "CycleComponent",
    "ExceptionalCurve",
    "Site",
    "SiteKind",
    "apply_step",
    "build_cycle",
    "canonical_string",
    "initial_cycle",
    "string",
    "target_pattern",
    "enumerate_plans",
]
