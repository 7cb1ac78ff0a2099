"""Applying blowup steps to the cycle, and the strings and patterns read off it."""
import logging
from typing import Iterable, List, Sequence, Tuple, TypeVar

from core.errors import DepthError, StructuralError
from core.lattice import DivisorClass, intersect, self_intersection
from cycle.model import (
    LINE_CONJUGATES,
    LINES,
    AnticanonicalCycle,
    CycleComponent,
    ExceptionalCurve,
    Site,
    SiteKind,
)
from models.plan import BlowupPlan, BlowupStep, StepKind

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Nested (self-intersection, children) descriptor of a tree of exceptional curves
Branch = Tuple[int, tuple]
PatternEntry = Tuple[int, Tuple[Branch, ...]]


def initial_cycle() -> AnticanonicalCycle:
    """The cycle C1 + C2 + Cb1 + Cb2 of classes f2, f1, f2, f1 on CP1 x CP1."""
    classes = [DivisorClass.f2(), DivisorClass.f1(), DivisorClass.f2(), DivisorClass.f1()]
    components = tuple(
        CycleComponent(cls=cls, label=label, index=i, conjugate=(i + 2) % 4)
        for i, (cls, label) in enumerate(zip(classes, LINES))
    )
    return AnticanonicalCycle(components=components, lattice_rank=0)


def _component_depth(cycle: AnticanonicalCycle, component: CycleComponent) -> int:
    number = component.exceptional_number
    return 0 if number is None else cycle.exceptional(number).site.depth + 1


def _node_site(cycle: AnticanonicalCycle, left: CycleComponent, right: CycleComponent) -> Site:
    if left.is_line and right.is_line:
        return Site(SiteKind.CORNER, lines=(left.label, right.label))
    line, other = (left, right) if left.is_line else (right, left)
    if not line.is_line or _component_depth(cycle, other) != 1:
        raise DepthError(f"Node {left.label}/{right.label} would be infinitely near of depth 2")
    return Site(SiteKind.DIRECTION, parent=other.exceptional_number, along=line.label)


def _smooth_site(cycle: AnticanonicalCycle, component: CycleComponent) -> Site:
    if component.is_line:
        return Site(SiteKind.LINE_POINT, lines=(component.label,))
    if _component_depth(cycle, component) != 1:
        raise DepthError(f"Point on {component.label} would be infinitely near of depth 2")
    return Site(SiteKind.DIRECTION, parent=component.exceptional_number)


def _extend(cycle: AnticanonicalCycle) -> Tuple[int, int, List[DivisorClass], List[ExceptionalCurve]]:
    """Grow the lattice by one conjugate pair; returns the new numbers and lifted data."""
    rank = cycle.lattice_rank + 2
    if rank > 8:
        raise StructuralError("More than four blowup steps")
    classes = [c.cls.extended(rank) for c in cycle.components]
    curves = [
        ExceptionalCurve(e.number, e.cls.extended(rank), e.site, e.on_cycle) for e in cycle.exceptionals
    ]
    return rank - 1, rank, classes, curves


def _rebuild(labels: Sequence[str], classes: Sequence[DivisorClass], rank: int,
             curves: Sequence[ExceptionalCurve]) -> AnticanonicalCycle:
    m = len(labels)
    components = tuple(
        CycleComponent(cls=cls, label=label, index=i, conjugate=(i + m // 2) % m)
        for i, (label, cls) in enumerate(zip(labels, classes))
    )
    result = AnticanonicalCycle(components=components, lattice_rank=rank, exceptionals=tuple(curves))
    result.validate()
    return result


def _blow_node(cycle: AnticanonicalCycle, edge: int, site: Site) -> AnticanonicalCycle:
    m, h = cycle.m, cycle.half
    if not 0 <= edge < h:
        raise StructuralError(f"Edge {edge} outside 0..{h - 1}")
    rep, conj, classes, curves = _extend(cycle)
    rank = conj
    for number, start in ((rep, edge), (conj, edge + h)):
        e = DivisorClass.exceptional(number, rank)
        classes[start] = classes[start] - e
        classes[(start + 1) % m] = classes[(start + 1) % m] - e
    curves.append(ExceptionalCurve(rep, DivisorClass.exceptional(rep, rank), site, True))
    curves.append(ExceptionalCurve(conj, DivisorClass.exceptional(conj, rank), site.conjugate(), True))
    
    labels = [c.label for c in cycle.components]
    first_labels, second_labels = labels[:h], labels[h:]
    first_classes, second_classes = classes[:h], classes[h:]
    first_labels.insert(edge + 1, f"E{rep}")
    second_labels.insert(edge + 1, f"E{conj}")
    first_classes.insert(edge + 1, DivisorClass.exceptional(rep, rank))
    second_classes.insert(edge + 1, DivisorClass.exceptional(conj, rank))
    return _rebuild(first_labels + second_labels, first_classes + second_classes, rank, curves)


def _blow_smooth(cycle: AnticanonicalCycle, index: int, site: Site,
                 also_on: Iterable[int] = ()) -> AnticanonicalCycle:
    """Blow up a smooth point of component ``index`` (and its conjugate).

    ``also_on`` lists exceptional curves off the cycle that pass through the point.
    """
    h = cycle.half
    if not 0 <= index < h:
        raise StructuralError(f"Component {index} outside 0..{h - 1}")
    rep, conj, classes, curves = _extend(cycle)
    rank = conj
    e_rep = DivisorClass.exceptional(rep, rank)
    e_conj = DivisorClass.exceptional(conj, rank)
    classes[index] = classes[index] - e_rep
    classes[index + h] = classes[index + h] - e_conj
    also_on = set(also_on)
    for pos, curve in enumerate(curves):
        if curve.number in also_on:
            partner = e_rep if curve.number % 2 else e_conj
            curves[pos] = ExceptionalCurve(curve.number, curve.cls - partner, curve.site, curve.on_cycle)
    curves.append(ExceptionalCurve(rep, e_rep, site, False))
    curves.append(ExceptionalCurve(conj, e_conj, site.conjugate(), False))
    labels = [c.label for c in cycle.components]
    return _rebuild(labels, classes, rank, curves)


def _blow_infinitely_near(cycle: AnticanonicalCycle, step: BlowupStep) -> AnticanonicalCycle:
    parent_number = 2 * step.target - 1
    parent = cycle.exceptional(parent_number)
    if parent.site.depth != 0:
        raise DepthError(f"Step {step.target} is already infinitely near")
    
    if parent.site.kind == SiteKind.LINE_POINT:
        if step.position == "generic":
            raise StructuralError(f"A generic point of E{parent_number} is not on the cycle")
        line = parent.site.lines[0]
        index = cycle.index_of(line)
        # Once the direction along the line is blown up, the line meets the new curve instead
        if intersect(parent.cls, cycle.components[index].cls) == 0:
            raise DepthError(f"Direction of {line} at E{parent_number} is already blown up")
        site = Site(SiteKind.DIRECTION, parent=parent_number, along=line)
        return _blow_smooth(cycle, index, site, also_on=(parent_number, parent_number + 1))
    
    index = cycle.index_of(f"E{parent_number}")
    if step.position == "generic":
        return _blow_smooth(cycle, index, Site(SiteKind.DIRECTION, parent=parent_number))
    components = cycle.components
    return _blow_node(cycle, index, _node_site(cycle, components[index], components[(index + 1) % cycle.m]))


def apply_step(cycle: AnticanonicalCycle, step: BlowupStep) -> AnticanonicalCycle:
    """Blow up the conjugate pair of points described by ``step``."""
    if step.kind == StepKind.NODE:
        if not 0 <= step.target < cycle.half:
            raise StructuralError(f"Edge {step.target} outside 0..{cycle.half - 1}")
        left = cycle.components[step.target]
        right = cycle.components[(step.target + 1) % cycle.m]
        return _blow_node(cycle, step.target, _node_site(cycle, left, right))
    if step.kind == StepKind.SMOOTH_POINT:
        if not 0 <= step.target < cycle.half:
            raise StructuralError(f"Component {step.target} outside 0..{cycle.half - 1}")
        component = cycle.components[step.target]
        return _blow_smooth(cycle, step.target, _smooth_site(cycle, component))
    return _blow_infinitely_near(cycle, step)


def build_cycle(plan: BlowupPlan) -> AnticanonicalCycle:
    """Apply every step of ``plan`` to the initial cycle."""
    cycle = initial_cycle()
    for number, step in enumerate(plan.steps, start=1):
        if step.kind == StepKind.INFINITELY_NEAR and step.target >= number:
            raise StructuralError(f"Step {number} refers to step {step.target}")
        cycle = apply_step(cycle, step)
    logger.debug("%s -> %s", plan.short(), string(cycle))
    return cycle


def string(cycle: AnticanonicalCycle) -> List[int]:
    """Self-intersection numbers in cyclic component order."""
    return list(cycle.self_intersections())


def dihedral_images(seq: Sequence[T]) -> List[Tuple[T, ...]]:
    """All rotations of ``seq`` and of its reversal."""
    n = len(seq)
    forward = tuple(seq)
    backward = tuple(reversed(seq))
    return [s[i:] + s[:i] for s in (forward, backward) for i in range(n)]


def canonical_string(cycle: AnticanonicalCycle) -> List[int]:
    """The string up to rotation and reflection."""
    return list(canonical_form(string(cycle)))


def canonical_form(seq: Sequence[T]) -> Tuple[T, ...]:
    """Lexicographically least rotation or reflection."""
    return min(dihedral_images(seq))


def _branch(cycle: AnticanonicalCycle, curve: ExceptionalCurve, seen: frozenset) -> Branch:
    seen = seen | {curve.number}
    children = sorted(
        _branch(cycle, other, seen)
        for other in cycle.branches()
        if other.number not in seen and intersect(curve.cls, other.cls) > 0
    )
    return (self_intersection(curve.cls), tuple(children))


def decorated_entries(cycle: AnticanonicalCycle) -> List[PatternEntry]:
    """Per component: self-intersection and the trees of off-cycle curves hanging on it."""
    entries = []
    for component in cycle.components:
        hanging = sorted(
            _branch(cycle, curve, frozenset())
            for curve in cycle.branches()
            if intersect(component.cls, curve.cls) > 0
        )
        entries.append((self_intersection(component.cls), tuple(hanging)))
    return entries


def target_pattern(cycle: AnticanonicalCycle) -> Tuple[PatternEntry, ...]:
    """Decorated cycle up to rotation and reflection."""
    return canonical_form(decorated_entries(cycle))


def format_pattern(pattern: Sequence[PatternEntry]) -> str:
    """Readable pattern such as ``-3[-1] -1 -3[-1] -1``."""
    def fmt(branch: Branch) -> str:
        value, children = branch
        inner = "".join(f"[{fmt(c)}]" for c in children)
        return f"{value}{inner}"
    
    parts = []
    for value, hanging in pattern:
        parts.append(str(value) + "".join(f"[{fmt(b)}]" for b in hanging))
    return " ".join(parts)


def format_string(values: Iterable[int]) -> str:
    """String as text, e.g. ``(-3,-1,-3,-1)``."""
    return "(" + ",".join(str(v) for v in values) + ")"
