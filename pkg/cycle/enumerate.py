"""Exhaustive enumeration of four-step plans up to symmetry."""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from core.errors import StructuralError
from cycle.blowup import (
    apply_step,
    canonical_string,
    format_pattern,
    format_string,
    initial_cycle,
    target_pattern,
)
from cycle.model import AnticanonicalCycle
from models.plan import PLAN_LENGTH, BlowupPlan, BlowupStep, StepKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumeratedPlan:
    """One representative per isomorphism class of decorated cycle."""
    plan: BlowupPlan
    canonical_string: Tuple[int, ...]
    kinds: Tuple[int, int]
    pattern: tuple
    collision: bool = False
    
    @property
    def m(self) -> int:
        return len(self.canonical_string)
    
    @property
    def k(self) -> int:
        return self.m // 2
    
    @property
    def key(self) -> tuple:
        return (self.canonical_string, self.kinds, self.pattern)
    
    @property
    def nodes_only(self) -> bool:
        return all(step.kind == StepKind.NODE for step in self.plan.steps)
    
    def pattern_text(self) -> str:
        """Readable form of the target pattern."""
        return format_pattern(self.pattern)


def step_options(cycle: AnticanonicalCycle, done: int) -> Iterator[BlowupStep]:
    """Every step that could follow ``done`` earlier steps on ``cycle``."""
    for edge in range(cycle.half):
        yield BlowupStep(kind=StepKind.NODE, target=edge)
    for index in range(cycle.half):
        yield BlowupStep(kind=StepKind.SMOOTH_POINT, target=index)
    for previous in range(1, done + 1):
        for position in ("cycle", "generic"):
            yield BlowupStep(kind=StepKind.INFINITELY_NEAR, target=previous, position=position)


def _walk(cycle: AnticanonicalCycle, steps: Tuple[BlowupStep, ...], node_effects: int,
          nodes_only: bool) -> Iterator[Tuple[Tuple[BlowupStep, ...], AnticanonicalCycle, int]]:
    if len(steps) == PLAN_LENGTH:
        yield steps, cycle, node_effects
        return
    for step in step_options(cycle, len(steps)):
        if nodes_only and step.kind != StepKind.NODE:
            continue
        try:
            grown = apply_step(cycle, step)
        except StructuralError:
            continue
        yield from _walk(grown, steps + (step,), node_effects + (grown.m > cycle.m), nodes_only)


def enumerate_plans(nodes_only: bool = False) -> List[EnumeratedPlan]:
    """All four-step plans, one per (canonical string, kind signature, target pattern).

    The first plan reached in depth-first order represents its class; results are
    sorted by canonical string, then pattern.
    """
    found: Dict[tuple, EnumeratedPlan] = {}
    visited = 0
    for steps, cycle, node_effects in _walk(initial_cycle(), (), 0, nodes_only):
        visited += 1
        entry = EnumeratedPlan(
            plan=BlowupPlan(steps=steps),
            canonical_string=tuple(canonical_string(cycle)),
            kinds=(node_effects, PLAN_LENGTH - node_effects),
            pattern=target_pattern(cycle),
        )
        found.setdefault(entry.key, entry)
    result = sorted(found.values(), key=lambda e: (e.canonical_string, e.pattern))
    shared = string_collisions(result)
    counters: Dict[int, int] = {}
    labelled = []
    for e in result:
        counters[e.k] = counters.get(e.k, 0) + 1
        labelled.append(EnumeratedPlan(
            plan=BlowupPlan(steps=e.plan.steps, label=f"k{e.k}-{counters[e.k]}"),
            canonical_string=e.canonical_string,
            kinds=e.kinds,
            pattern=e.pattern,
            collision=e.canonical_string in shared,
        ))
    logger.info("Enumerated %d plans into %d classes", visited, len(labelled))
    if shared:
        logger.warning("%d canonical strings are shared by distinct patterns: %s", len(shared),
                       ", ".join(format_string(s) for s in sorted(shared)))
    return labelled


def string_collisions(plans: List[EnumeratedPlan]) -> Dict[Tuple[int, ...], List[EnumeratedPlan]]:
    """Canonical strings shared by more than one decorated pattern."""
    groups: Dict[Tuple[int, ...], List[EnumeratedPlan]] = {}
    for plan in plans:
        groups.setdefault(plan.canonical_string, []).append(plan)
    return {s: group for s, group in groups.items() if len(group) > 1}
