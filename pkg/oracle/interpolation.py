"""Interpolation matrices: sections of d(-K) as (2d,2d)-forms through the blown-up points."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.settings import settings
from core.errors import GenericityError
from core.linalg import bareiss_rank, nullspace
from models.plan import BlowupPlan
from oracle.points import PointInstance, Projective, affine, instantiate

logger = logging.getLogger(__name__)


def monomials(a: int, b: int) -> List[Tuple[int, int]]:
    """Exponents (i, j) of the affine monomials u^i v^j of bidegree at most (a, b)."""
    return [(i, j) for i in range(a + 1) for j in range(b + 1)]


def local_coefficient(power: int, degree: int, centre: Projective, alpha: int) -> Fraction:
    """Coefficient of x^alpha in u^power written in the local coordinate x at ``centre``.

    At a finite centre c the coordinate is x = u - c. At infinity it is x = 1/u
    after dehomogenising in degree ``degree``, so u^power becomes x^(degree - power).
    """
    c = affine(centre)
    if c is None:
        return Fraction(int(alpha == degree - power))
    if alpha > power:
        return Fraction(0)
    return comb(power, alpha) * c ** (power - alpha)


@dataclass
class ConstraintMatrix:
    """Conditions on the coefficients of bidegree (a, b) forms, one row per condition."""
    a: int
    b: int
    entries: List[List[Fraction]] = field(default_factory=list)
    
    @property
    def n_cols(self) -> int:
        return (self.a + 1) * (self.b + 1)
    
    def rank(self) -> int:
        return bareiss_rank(self.entries)
    
    def kernel(self) -> List[List[Fraction]]:
        return nullspace(self.entries, self.n_cols)
    
    def kernel_dimension(self) -> int:
        return self.n_cols - self.rank()
    
    def dump(self) -> str:
        """Plain-text exact form: one row per line, entries as p/q separated by spaces."""
        return "\n".join(
            " ".join(f"{x.numerator}/{x.denominator}" for x in row) for row in self.entries
        )


def _point_rows(point: PointInstance, d: int, a: int, b: int) -> List[List[Fraction]]:
    cols = monomials(a, b)
    rows = []
    for alpha in range(d):
        for beta in range(d - alpha):
            rows.append([
                local_coefficient(i, a, point.u, alpha) * local_coefficient(j, b, point.v, beta)
                for i, j in cols
            ])
    return rows


def _jet_rows(point: PointInstance, d: int, a: int, b: int) -> List[List[Fraction]]:
    """Order-d vanishing of the strict transform at a direction on the exceptional curve."""
    cols = monomials(a, b)
    dx, dy = point.direction
    rows = []
    for p in range(d):
        for q in range(d - p):
            row = []
            for i, j in cols:
                if dx != 0:
                    t = dy / dx
                    value = sum(
                        (local_coefficient(i, a, point.u, p + d - beta)
                         * local_coefficient(j, b, point.v, beta)
                         * comb(beta, q) * t ** (beta - q)
                         for beta in range(q, p + d + 1)),
                        Fraction(0),
                    )
                else:
                    value = local_coefficient(i, a, point.u, q) * local_coefficient(j, b, point.v, p + d - q)
                row.append(value)
            rows.append(row)
    return rows


def build_constraints(d: int, points: Sequence[PointInstance]) -> ConstraintMatrix:
    """Multiplicity-d conditions at every point for (2d, 2d)-forms."""
    a = b = 2 * d
    matrix = ConstraintMatrix(a=a, b=b)
    for point in points:
        if point.depth == 0:
            matrix.entries.extend(_point_rows(point, d, a, b))
        else:
            matrix.entries.extend(_jet_rows(point, d, a, b))
    return matrix


def h0_oracle(d: int, points: Sequence[PointInstance]) -> int:
    """h0(d(-K)) = (2d+1)^2 - rank of the interpolation conditions."""
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    matrix = build_constraints(d, points)
    return matrix.n_cols - matrix.rank()


def certified_h0(d: int, plan: BlowupPlan, seeds: Optional[Iterable[int]] = None,
                 max_retries: Optional[int] = None, special: Optional[str] = None) -> int:
    """h0(d(-K)) for ``plan`` in generic position, agreed on by at least two seeds.

    Special positions can only raise h0, so on disagreement the smallest value
    wins once a second seed confirms it; extra seeds are drawn as needed.

    Raises:
        GenericityError: if no value is confirmed within ``max_retries`` extra seeds.
    """
    seeds = list(seeds) if seeds is not None else settings.seeds()
    retries = max_retries if max_retries is not None else settings.max_retries
    values: Dict[int, int] = {s: h0_oracle(d, instantiate(plan, s, special)) for s in seeds}
    extra = max(seeds) + 1
    for attempt in range(retries + 1):
        counts = Counter(values.values())
        lowest = min(counts)
        if len(counts) == 1 and len(values) >= 2:
            return lowest
        if counts[lowest] >= 2:
            logger.warning("Seeds disagree on h0(%d(-K)) for %s: %s; taking %d",
                           d, plan.short(), dict(sorted(values.items())), lowest)
            return lowest
        if attempt == retries:
            break
        values[extra] = h0_oracle(d, instantiate(plan, extra, special))
        extra += 1
    raise GenericityError(f"Could not certify generic position for {plan.short()} (values {values})")


def generic_seed(plan: BlowupPlan, expected: Dict[int, int], seeds: Optional[Iterable[int]] = None,
                 max_retries: Optional[int] = None, special: Optional[str] = None) -> int:
    """First seed whose points reproduce every certified h0 in ``expected``.

    Raises:
        GenericityError: if neither ``seeds`` nor ``max_retries`` extra seeds match.
    """
    seeds = list(seeds) if seeds is not None else settings.seeds()
    retries = max_retries if max_retries is not None else settings.max_retries
    candidates = seeds + list(range(max(seeds) + 1, max(seeds) + 1 + retries))
    for seed in candidates:
        points = instantiate(plan, seed, special)
        if all(h0_oracle(d, points) == value for d, value in sorted(expected.items())):
            return seed
        logger.debug("Seed %d is not generic for %s", seed, plan.short())
    raise GenericityError(f"No seed in {candidates} reproduces {expected} for {plan.short()}")
