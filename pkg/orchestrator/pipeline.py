"""End-to-end runs: rule and oracle side by side for every plan."""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import List, Optional, Sequence

from config.settings import settings
from core.errors import AnticanonError, ClassifierError
from core.lattice import anticanonical_class
from cycle.blowup import build_cycle, canonical_string, string
from linsys.classifier import classify
from linsys.peel import movable_selfint, peel
from linsys.rules import DEFERRED, h0_rule_for_cycle
from models.plan import BlowupPlan
from models.report import ClassificationReport
from oracle.images import image_dimension, image_quadric_count, threefold_prediction
from oracle.interpolation import certified_h0, generic_seed
from oracle.points import instantiate

logger = logging.getLogger(__name__)


@dataclass
class RunOptions:
    """Knobs for one run; unset values come from settings."""
    seeds: List[int] = field(default_factory=settings.seeds)
    samples: int = settings.samples
    workers: int = settings.workers
    images: bool = True


def classify_plan(plan: BlowupPlan, options: Optional[RunOptions] = None) -> ClassificationReport:
    """Classify one plan, cross-checking the combinatorial rule against interpolation.

    Errors never escape: they are recorded on the returned report.
    """
    options = options or RunOptions()
    try:
        cycle = build_cycle(plan)
    except AnticanonError as e:
        return ClassificationReport(plan=plan, errors=[f"{type(e).__name__}: {e}"])
    
    errors: List[str] = []
    rule = {d: h0_rule_for_cycle(d, cycle) for d in (1, 2)}
    try:
        oracle = {d: certified_h0(d, plan, options.seeds) for d in (1, 2)}
    except AnticanonError as e:
        return ClassificationReport(
            plan=plan, string=string(cycle), canonical_string=canonical_string(cycle), k=cycle.k,
            rule_h0={d: (None if v is DEFERRED else v) for d, v in rule.items()},
            errors=[f"{type(e).__name__}: {e}"],
        )
    for d in (1, 2):
        if rule[d] is not DEFERRED and rule[d] != oracle[d]:
            message = f"rule/oracle mismatch for h0({d}(-K)): rule {rule[d]}, oracle {oracle[d]}"
            logger.error("%s: %s", plan.short(), message)
            errors.append(message)
    
    peeled = peel(2 * anticanonical_class(cycle.lattice_rank), cycle)
    try:
        report = classify(plan, oracle[1], oracle[2], movable_selfint(peeled), cycle=cycle)
    except ClassifierError as e:
        report = e.report
        errors.append(str(e))
    
    report.fixed_part = dict(peeled.multiplicities)
    report.rule_h0 = {d: (None if v is DEFERRED else v) for d, v in rule.items()}
    report.oracle_h0 = oracle
    if options.images and report.case is not None and report.case.is_classified:
        try:
            seed = generic_seed(plan, oracle, options.seeds)
            points = instantiate(plan, seed)
            report.quadric_count = image_quadric_count(points, 2, samples=options.samples)
            report.image_dimension = image_dimension(points, 2)
            report.threefold_quadrics, report.threefold_dimension = threefold_prediction(
                report.quadric_count, report.image_dimension
            )
        except AnticanonError as e:
            errors.append(f"{type(e).__name__}: {e}")
    report.errors = errors
    return report


def report_order(report: ClassificationReport):
    """Sort key: canonical string, then plan."""
    return (report.canonical_string, report.plan.short())


def run_plans(plans: Sequence[BlowupPlan], options: Optional[RunOptions] = None) -> List[ClassificationReport]:
    """Classify ``plans`` on a bounded worker pool; output sorted by canonical string."""
    options = options or RunOptions()
    job = partial(classify_plan, options=options)
    if options.workers > 1 and len(plans) > 1:
        with ProcessPoolExecutor(max_workers=options.workers) as pool:
            reports = list(pool.map(job, plans))
    else:
        reports = [job(plan) for plan in plans]
    failed = sum(1 for r in reports if r.errors)
    logger.info("Classified %d plans, %d with errors", len(reports), failed)
    return sorted(reports, key=report_order)
