"""Assigning a case to a plan from its h0 values and movable self-intersection."""
from typing import Dict, Optional, Tuple

from core.errors import ClassifierError
from core.lattice import adjunction_degree
from cycle.blowup import build_cycle, canonical_string, string
from cycle.model import AnticanonicalCycle
from models.plan import BlowupPlan
from models.report import Case, ClassificationReport


# (h0(2(-K)), M^2) -> case
SIGNATURES: Dict[Tuple[int, int], Case] = {
    (5, 4): Case.TYPE_I,
    (7, 6): Case.TYPE_I,
    (3, 2): Case.TYPE_II,
    (3, 0): Case.TYPE_III,
}

# Threefold statements are quoted, not computed
IMAGE_DESCRIPTIONS: Dict[Tuple[int, int], str] = {
    (5, 4): "birational; image a complete intersection of 3 hyperquadrics in CP6 (quoted)",
    (7, 6): "birational; image a degree 12 threefold in CP8 cut out by 10 quadrics, not a complete intersection (quoted)",
    (3, 2): "2:1 onto a scroll of 2-planes over a conic in CP4; branch divisor restricts to quartic curves (quoted)",
    (3, 0): "image the complete intersection x0x1 = x2^2, x3x4 = q(x0,x1,x2) of 2 hyperquadrics in CP4 (quoted)",
}

EXCLUDED_DESCRIPTION = "h0(-K) >= 3, impossible for a twistor space"
NON_MOISHEZON_DESCRIPTION = "-K restricted to the cycle is topologically trivial; algebraic dimension drops"


def is_non_moishezon(cycle: AnticanonicalCycle) -> bool:
    """True when every cycle component is a (-2)-curve."""
    return all(adjunction_degree(c.cls) == 0 for c in cycle.components)


def classify(plan: BlowupPlan, h0_1: int, h0_2: Optional[int], m2: Optional[int],
             cycle: Optional[AnticanonicalCycle] = None) -> ClassificationReport:
    """Case of ``plan`` given trusted h0 values and the movable self-intersection.

    Raises:
        ClassifierError: if the signature is not one of the four known ones. The
            partially filled report is attached.
    """
    cycle = cycle if cycle is not None else build_cycle(plan)
    report = ClassificationReport(
        plan=plan,
        string=string(cycle),
        canonical_string=canonical_string(cycle),
        k=cycle.k,
        h0_antican=h0_1,
        h0_biantican=h0_2,
        movable_selfint=m2,
    )
    if h0_1 >= 3:
        report.case = Case.EXCLUDED_H0_GEQ_3
        report.image_description = EXCLUDED_DESCRIPTION
        return report
    if is_non_moishezon(cycle):
        report.case = Case.NON_MOISHEZON
        report.image_description = NON_MOISHEZON_DESCRIPTION
        return report
    
    signature = (h0_2, m2)
    case = SIGNATURES.get(signature)  # type: ignore[arg-type]
    if case is None:
        raise ClassifierError(f"Unrecognised signature {signature} for {plan.short()}", report=report)
    report.case = case
    report.h0_2F = h0_2 + 2  # type: ignore[operator]
    report.image_description = IMAGE_DESCRIPTIONS[signature]  # type: ignore[index]
    return report
