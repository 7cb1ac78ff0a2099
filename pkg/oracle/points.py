"""Concrete exact points realising a blowup plan.

The cycle sits on CP1 x CP1 as C1 = {u=0}, C2 = {v=0}, Cb1 = {u=inf}, Cb2 = {v=inf}.
Conjugate points are placed independently: only incidence matters for dimensions.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from core.errors import StructuralError
from cycle.blowup import build_cycle
from cycle.model import ExceptionalCurve, SiteKind
from models.plan import BlowupPlan

# Projective coordinate [x0:x1] with affine value x1/x0; infinity is [0:1]
Projective = Tuple[Fraction, Fraction]

ZERO: Projective = (Fraction(1), Fraction(0))
INFINITY: Projective = (Fraction(0), Fraction(1))

CORNERS: Dict[frozenset, Tuple[Projective, Projective]] = {
    frozenset(("C1", "C2")): (ZERO, ZERO),
    frozenset(("C2", "Cb1")): (INFINITY, ZERO),
    frozenset(("Cb1", "Cb2")): (INFINITY, INFINITY),
    frozenset(("Cb2", "C1")): (ZERO, INFINITY),
}

# Tangent direction (du, dv) of each line in the local chart
LINE_DIRECTIONS: Dict[str, Tuple[Fraction, Fraction]] = {
    "C1": (Fraction(0), Fraction(1)),
    "Cb1": (Fraction(0), Fraction(1)),
    "C2": (Fraction(1), Fraction(0)),
    "Cb2": (Fraction(1), Fraction(0)),
}


def projective(value: Optional[Fraction]) -> Projective:
    """Affine coordinate as a point of CP1; None is the point at infinity."""
    return INFINITY if value is None else (Fraction(1), Fraction(value))


def affine(p: Projective) -> Optional[Fraction]:
    """Affine value of a projective coordinate, None at infinity."""
    return None if p[0] == 0 else p[1] / p[0]


@dataclass(frozen=True)
class PointInstance:
    """One blown-up point, possibly infinitely near to an earlier one.

    ``parent`` is the position of the parent in the instance list and
    ``direction`` the tangent direction at the parent in its local chart.
    """
    u: Projective
    v: Projective
    number: int
    depth: int = 0
    direction: Optional[Tuple[Fraction, Fraction]] = None
    parent: Optional[int] = None
    line: Optional[str] = None
    
    @property
    def affine(self) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        return affine(self.u), affine(self.v)
    
    def __str__(self) -> str:
        def fmt(p: Projective) -> str:
            value = affine(p)
            return "inf" if value is None else str(value)
        
        text = f"E{self.number}@({fmt(self.u)},{fmt(self.v)})"
        if self.depth:
            text += f"->dir({self.direction[0]},{self.direction[1]})"
        return text


class _Sampler:
    """Seeded small rationals, never zero and never repeated on the same line."""
    
    def __init__(self, seed: int):
        self.rng = random.Random(seed)
        self.used: Dict[str, Set[Fraction]] = {}
    
    def value(self, line: str = "") -> Fraction:
        used = self.used.setdefault(line, set())
        while True:
            x = Fraction(self.rng.randint(1, 9) * self.rng.choice((-1, 1)), self.rng.randint(1, 5))
            if x not in used:
                used.add(x)
                return x


def _line_point(line: str, t: Fraction) -> Tuple[Projective, Projective]:
    return {
        "C1": (ZERO, projective(t)),
        "C2": (projective(t), ZERO),
        "Cb1": (INFINITY, projective(t)),
        "Cb2": (projective(t), INFINITY),
    }[line]


def _place(curve: ExceptionalCurve, placed: Dict[int, PointInstance], order: Dict[int, int],
           sampler: _Sampler) -> PointInstance:
    site = curve.site
    if site.kind == SiteKind.CORNER:
        u, v = CORNERS[frozenset(site.lines)]
        return PointInstance(u=u, v=v, number=curve.number)
    if site.kind == SiteKind.LINE_POINT:
        line = site.lines[0]
        u, v = _line_point(line, sampler.value(line))
        return PointInstance(u=u, v=v, number=curve.number, line=line)
    parent = placed[site.parent]
    if site.along is not None:
        direction = LINE_DIRECTIONS[site.along]
    else:
        direction = (Fraction(1), sampler.value(f"E{site.parent}"))
    return PointInstance(u=parent.u, v=parent.v, number=curve.number, depth=1,
                         direction=direction, parent=order[site.parent])


def _conic_position(points: List[PointInstance]) -> List[PointInstance]:
    """Move the four line points onto one (1,1)-curve."""
    by_line = {p.line: p for p in points if p.line is not None}
    if len(by_line) != 4 or sum(1 for p in points if p.line is not None) != 4:
        raise StructuralError("The conic position needs one line point on each line")
    a = by_line["C1"].affine[1]
    b = by_line["C2"].affine[0]
    c = by_line["Cb1"].affine[1]
    moved = by_line["Cb2"]
    if any(p.parent == points.index(moved) for p in points):
        raise StructuralError("The conic position does not move points with infinitely near children")
    d = b * c / a
    replacement = PointInstance(u=projective(d), v=INFINITY, number=moved.number, line="Cb2")
    return [replacement if p is moved else p for p in points]


def instantiate(plan: BlowupPlan, seed: int, special: Optional[str] = None) -> List[PointInstance]:
    """Exact points realising ``plan``, one per exceptional class, in blowup order.

    Args:
        plan: the plan to realise.
        seed: seed for the free parameters.
        special: None for generic position, or "conic" to put four line points
            on a common (1,1)-curve.
    """
    cycle = build_cycle(plan)
    sampler = _Sampler(seed)
    placed: Dict[int, PointInstance] = {}
    order: Dict[int, int] = {}
    points: List[PointInstance] = []
    for curve in sorted(cycle.exceptionals, key=lambda e: e.number):
        point = _place(curve, placed, order, sampler)
        placed[curve.number] = point
        order[curve.number] = len(points)
        points.append(point)
    if special == "conic":
        points = _conic_position(points)
    elif special is not None:
        raise StructuralError(f"Unknown special position {special!r}")
    return points
