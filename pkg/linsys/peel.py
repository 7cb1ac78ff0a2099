"""Peeling fixed cycle components off a linear system."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from config.settings import settings
from core.errors import StructuralError
from core.lattice import DivisorClass, canonical_class, intersect, self_intersection
from cycle.model import AnticanonicalCycle


@dataclass(frozen=True)
class PeelResult:
    """Fixed part and movable part of a class with respect to the cycle.

    ``multiplicities`` maps component index to how often it was subtracted;
    ``rounds`` lists the indices subtracted in each sweep.
    """
    input: DivisorClass
    fixed: DivisorClass
    movable: DivisorClass
    multiplicities: Dict[int, int] = field(default_factory=dict)
    rounds: Tuple[Tuple[int, ...], ...] = ()
    
    def fixed_labels(self, cycle: AnticanonicalCycle) -> Dict[str, int]:
        """Fixed multiplicities keyed by component label."""
        return {cycle.components[i].label: mult for i, mult in sorted(self.multiplicities.items())}


def peel(d: DivisorClass, cycle: AnticanonicalCycle, round_limit: Optional[int] = None) -> PeelResult:
    """Subtract every component of negative degree, all at once, until none is left."""
    limit = round_limit if round_limit is not None else settings.peel_round_limit
    current = d
    fixed = DivisorClass.zero(d.rank)
    multiplicities: Dict[int, int] = {}
    rounds: List[Tuple[int, ...]] = []
    while True:
        negative = tuple(c.index for c in cycle.components if intersect(current, c.cls) < 0)
        if not negative:
            break
        if len(rounds) >= limit:
            raise StructuralError(f"Peeling did not terminate within {limit} rounds")
        for index in negative:
            cls = cycle.components[index].cls
            current = current - cls
            fixed = fixed + cls
            multiplicities[index] = multiplicities.get(index, 0) + 1
        rounds.append(negative)
    return PeelResult(input=d, fixed=fixed, movable=current,
                      multiplicities=multiplicities, rounds=tuple(rounds))


def movable_selfint(pr: PeelResult) -> int:
    """Square of the movable part."""
    return self_intersection(pr.movable)


def movable_genus(pr: PeelResult) -> int:
    """Arithmetic genus M.(M+K)/2 + 1 of a member of the movable part."""
    m = pr.movable
    return intersect(m, m + canonical_class(m.rank)) // 2 + 1
