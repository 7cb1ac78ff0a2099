"""Combinatorial h0 of multiples of -K by restriction to the anticanonical cycle.

Uses 0 -> O((d-1)(-K)) -> O(d(-K)) -> O_C(d(-K)) -> 0. Sections on the cycle C
must vanish on components where the restricted bundle has negative degree; each
such component costs its neighbours one degree, until nothing changes. A chain
of surviving components with degrees e_i carries sum(e_i) + 1 sections. If no
component dies, C has arithmetic genus one and a degree-zero bundle on it is
nontrivial for points in generic position.
"""
import logging
from typing import List, Set, Union

from core.errors import UnsupportedDegreeError
from core.lattice import adjunction_degree
from cycle.blowup import build_cycle
from cycle.model import AnticanonicalCycle
from models.plan import BlowupPlan

logger = logging.getLogger(__name__)


class Deferred:
    """Marker returned when the rule does not determine h0 and the oracle must."""
    
    _instance = None
    
    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance
    
    def __repr__(self) -> str:
        return "DEFERRED"
    
    def __bool__(self) -> bool:
        return False


DEFERRED = Deferred()


def dead_components(degrees: List[int]) -> Set[int]:
    """Indices forced to be fixed components of the restricted system."""
    m = len(degrees)
    dead: Set[int] = set()
    changed = True
    while changed:
        changed = False
        for i, degree in enumerate(degrees):
            if i in dead:
                continue
            lost = sum(1 for j in ((i - 1) % m, (i + 1) % m) if j in dead)
            if degree - lost < 0:
                dead.add(i)
                changed = True
    return dead


def cycle_contribution(cycle: AnticanonicalCycle, d: int) -> int:
    """h0 of O_C(d(-K)) for points in generic position."""
    m = cycle.m
    degrees = [d * adjunction_degree(c.cls) for c in cycle.components]
    dead = dead_components(degrees)
    if not dead:
        return max(0, sum(degrees))
    
    effective = [
        degrees[i] - sum(1 for j in ((i - 1) % m, (i + 1) % m) if j in dead) for i in range(m)
    ]
    # Walk the live chains starting just after a dead component
    start = min(dead)
    total = 0
    chain: List[int] = []
    for offset in range(1, m + 1):
        i = (start + offset) % m
        if i in dead:
            if chain:
                total += sum(effective[j] for j in chain) + 1
                chain = []
        else:
            chain.append(i)
    return total


def h0_rule_for_cycle(d: int, cycle: AnticanonicalCycle) -> Union[int, Deferred]:
    """As h0_rule, on a cycle that is already built."""
    if d not in (1, 2):
        raise UnsupportedDegreeError(f"h0_rule handles d in (1, 2), got {d}")
    h0_1 = 1 + cycle_contribution(cycle, 1)
    if d == 1:
        return h0_1
    if h0_1 != 1:
        # H^1(-K) no longer vanishes, so the sequence does not split the count
        logger.debug("Deferring h0(2(-K)) to the oracle: h0(-K) = %d", h0_1)
        return DEFERRED
    return h0_1 + cycle_contribution(cycle, 2)


def h0_rule(d: int, plan: BlowupPlan) -> Union[int, Deferred]:
    """Combinatorial h0(d(-K)) for d in (1, 2), or DEFERRED."""
    return h0_rule_for_cycle(d, build_cycle(plan))
