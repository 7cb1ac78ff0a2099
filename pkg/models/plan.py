"""Blowup plans: four real-pair blowups applied to the initial cycle."""
import json
from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from core.errors import StructuralError


PLAN_LENGTH = 4


class StepKind(str, Enum):
    """What a blowup step blows up."""
    NODE = "Node"
    SMOOTH_POINT = "SmoothPoint"
    INFINITELY_NEAR = "InfinitelyNear"


class BlowupStep(BaseModel):
    """One conjugate pair of blowups.

    ``target`` is an edge index for Node (the edge between components i and i+1
    of the first half of the cycle), a component index for SmoothPoint, and the
    1-based number of an earlier step for InfinitelyNear.
    """
    model_config = ConfigDict(frozen=True)
    
    kind: StepKind
    target: int
    position: Optional[Literal["cycle", "generic"]] = None
    
    @model_validator(mode="after")
    def _check_position(self) -> "BlowupStep":
        if self.kind == StepKind.INFINITELY_NEAR and self.position is None:
            raise ValueError("InfinitelyNear steps need a position ('cycle' or 'generic')")
        if self.kind != StepKind.INFINITELY_NEAR and self.position is not None:
            raise ValueError(f"{self.kind.value} steps take no position")
        if self.target < 0:
            raise ValueError("target must be non-negative")
        return self
    
    def short(self) -> str:
        if self.kind == StepKind.INFINITELY_NEAR:
            return f"I{self.target}{self.position[0]}"
        return f"{self.kind.value[0]}{self.target}"


class BlowupPlan(BaseModel):
    """Ordered list of exactly four steps plus a free-text provenance label."""
    model_config = ConfigDict(frozen=True)
    
    steps: Tuple[BlowupStep, ...]
    label: str = ""
    
    @field_validator("steps")
    @classmethod
    def _check_steps(cls, steps: Tuple[BlowupStep, ...]) -> Tuple[BlowupStep, ...]:
        if len(steps) != PLAN_LENGTH:
            raise ValueError(f"A plan has exactly {PLAN_LENGTH} steps, got {len(steps)}")
        for number, step in enumerate(steps, start=1):
            if step.kind == StepKind.INFINITELY_NEAR and not 1 <= step.target < number:
                raise ValueError(f"Step {number} refers to step {step.target}, which does not precede it")
        return steps
    
    def short(self) -> str:
        """Compact form such as ``N0 N2 S0 I3c``."""
        return " ".join(step.short() for step in self.steps)


def plan_from_steps(steps: List[Tuple[str, int] | Tuple[str, int, str]], label: str = "") -> BlowupPlan:
    """Build a plan from ``(kind, target[, position])`` tuples."""
    built = []
    for item in steps:
        kind, target, *rest = item
        built.append(BlowupStep(kind=StepKind(kind), target=target, position=rest[0] if rest else None))
    return BlowupPlan(steps=tuple(built), label=label)


def parse_plans(text: str) -> List[BlowupPlan]:
    """Parse a JSON document holding one plan object or a list of them."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructuralError(f"Plan file is not valid JSON: {e}") from e
    items = data if isinstance(data, list) else [data]
    try:
        return [BlowupPlan.model_validate(item) for item in items]
    except ValidationError as e:
        raise StructuralError(f"Invalid plan: {e}") from e


def load_plans(path: Union[str, Path]) -> List[BlowupPlan]:
    """Read plans from a JSON file."""
    return parse_plans(Path(path).read_text(encoding="utf-8"))


def dump_plans(plans: List[BlowupPlan]) -> str:
    """Plans as a JSON list that parse_plans reads back."""
    return json.dumps([plan.model_dump(mode="json", exclude_none=True) for plan in plans], indent=2)
