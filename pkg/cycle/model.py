"""Cycle state: components, exceptional curves and the sites they were blown up at."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from core.errors import StructuralError
from core.lattice import (
    DivisorClass,
    adjunction_degree,
    anticanonical_class,
    intersect,
    self_intersection,
    total,
)


# The four curves of the initial cycle on CP1 x CP1, in cyclic order
LINES = ("C1", "C2", "Cb1", "Cb2")
LINE_CONJUGATES = {"C1": "Cb1", "C2": "Cb2", "Cb1": "C1", "Cb2": "C2"}


class SiteKind(Enum):
    """Where on CP1 x CP1 (or on an earlier exceptional curve) a point sits."""
    CORNER = "corner"
    LINE_POINT = "line_point"
    DIRECTION = "direction"


@dataclass(frozen=True)
class Site:
    """Position of one blown-up point.

    A corner is the intersection of two initial lines, a line point a generic
    point of one line. A direction is a point on the exceptional curve of an
    earlier depth-0 point: ``along`` names the line whose tangent it is, or is
    None for a generic direction.
    """
    kind: SiteKind
    lines: Tuple[str, ...] = ()
    parent: Optional[int] = None
    along: Optional[str] = None
    
    @property
    def depth(self) -> int:
        return 1 if self.kind == SiteKind.DIRECTION else 0
    
    def conjugate(self) -> "Site":
        parent = None if self.parent is None else conjugate_exceptional(self.parent)
        along = None if self.along is None else LINE_CONJUGATES[self.along]
        return Site(self.kind, tuple(LINE_CONJUGATES[line] for line in self.lines), parent, along)


def conjugate_exceptional(number: int) -> int:
    """Exceptional classes come in pairs (2j-1, 2j): representative and conjugate."""
    return number + 1 if number % 2 else number - 1


@dataclass(frozen=True)
class CycleComponent:
    cls: DivisorClass
    label: str
    index: int
    conjugate: int
    
    @property
    def is_line(self) -> bool:
        return self.label in LINES
    
    @property
    def exceptional_number(self) -> Optional[int]:
        return None if self.is_line else int(self.label[1:])


@dataclass(frozen=True)
class ExceptionalCurve:
    """Strict transform of the exceptional curve of one blowup."""
    number: int
    cls: DivisorClass
    site: Site
    on_cycle: bool


@dataclass(frozen=True)
class AnticanonicalCycle:
    components: Tuple[CycleComponent, ...]
    lattice_rank: int
    exceptionals: Tuple[ExceptionalCurve, ...] = field(default=())
    
    @property
    def m(self) -> int:
        return len(self.components)
    
    @property
    def half(self) -> int:
        return self.m // 2
    
    @property
    def k(self) -> int:
        return self.m // 2
    
    def classes(self) -> Tuple[DivisorClass, ...]:
        return tuple(c.cls for c in self.components)
    
    def index_of(self, label: str) -> int:
        """Position of the component labelled ``label``."""
        for c in self.components:
            if c.label == label:
                return c.index
        raise StructuralError(f"{label} is not a cycle component")
    
    def exceptional(self, number: int) -> ExceptionalCurve:
        """The exceptional curve with the given number."""
        for e in self.exceptionals:
            if e.number == number:
                return e
        raise StructuralError(f"No exceptional curve E{number}")
    
    def branches(self) -> Tuple[ExceptionalCurve, ...]:
        """Exceptional curves that are not cycle components."""
        return tuple(e for e in self.exceptionals if not e.on_cycle)
    
    def validate(self):
        """Check the cycle invariants; raise StructuralError on the first violation."""
        m = self.m
        if m % 2:
            raise StructuralError(f"Odd component count {m}")
        for c in self.components:
            if c.cls.rank != self.lattice_rank:
                raise StructuralError(f"{c.label} lives in rank {c.cls.rank}, cycle in {self.lattice_rank}")
            if c.conjugate != (c.index + self.half) % m:
                raise StructuralError(f"Conjugation broken at {c.label}")
            adjunction_degree(c.cls)
        if total(self.classes(), self.lattice_rank) != anticanonical_class(self.lattice_rank):
            raise StructuralError("Components do not sum to -K")
        for i in range(m):
            for j in range(i + 1, m):
                expected = 1 if (j - i) in (1, m - 1) else 0
                value = intersect(self.components[i].cls, self.components[j].cls)
                if value != expected:
                    raise StructuralError(
                        f"{self.components[i].label}.{self.components[j].label} = {value}, expected {expected}"
                    )
    
    def self_intersections(self) -> Tuple[int, ...]:
        """Self-intersection of each component in cyclic order."""
        return tuple(self_intersection(c.cls) for c in self.components)
