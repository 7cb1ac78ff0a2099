"""The image of the surface under the map given by the sections of d(-K).

Sections are evaluated at random points of the torus u, v != 0, where every
fixed component is invisible; a common factor does not change the relations.
"""
import logging
import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod
from typing import List, Optional, Sequence, Tuple

from config.settings import settings
from core.errors import InsufficientSamplesError
from core.linalg import bareiss_rank
from oracle.interpolation import build_constraints, monomials
from oracle.points import PointInstance

logger = logging.getLogger(__name__)

Section = List[Tuple[int, int, int]]  # (coefficient, i, j)


def sections(points: Sequence[PointInstance], d: int) -> List[Section]:
    """Integer basis of the sections of d(-K) as (2d, 2d)-forms."""
    matrix = build_constraints(d, points)
    cols = monomials(matrix.a, matrix.b)
    basis = []
    for vector in matrix.kernel():
        basis.append([(int(c), i, j) for c, (i, j) in zip(vector, cols) if c])
    return basis


def evaluate(section: Section, u: int, v: int) -> int:
    """Value of a section at the affine point (u, v)."""
    return sum(c * u ** i * v ** j for c, i, j in section)


def _torus_points(count: int, seed: int) -> List[Tuple[int, int]]:
    rng = random.Random(seed)
    return [(rng.choice((-1, 1)) * rng.randint(1, 9), rng.choice((-1, 1)) * rng.randint(1, 9))
            for _ in range(count)]


def _products_rank(basis: List[Section], degree: int, samples: int, seed: int) -> Tuple[int, int]:
    """(number of degree-``degree`` monomials in the sections, rank of their evaluations)."""
    exponents = list(combinations_with_replacement(range(len(basis)), degree))
    rows = []
    for u, v in _torus_points(samples, seed):
        values = [evaluate(s, u, v) for s in basis]
        rows.append([Fraction(prod(values[i] for i in combo)) for combo in exponents])
    full = bareiss_rank(rows)
    held_back = max(1, samples // 10)
    if samples <= len(exponents) or bareiss_rank(rows[:-held_back]) != full:
        raise InsufficientSamplesError(
            f"Rank of {len(exponents)} degree-{degree} products not stable with {samples} samples"
        )
    return len(exponents), full


def hilbert_value(points: Sequence[PointInstance], d: int, degree: int,
                  samples: Optional[int] = None, seed: int = 0) -> int:
    """Dimension of the degree-``degree`` part of the image's homogeneous coordinate ring."""
    basis = sections(points, d)
    return _products_rank(basis, degree, samples or settings.samples, seed)[1]


def image_quadric_count(points: Sequence[PointInstance], d: int,
                        samples: Optional[int] = None, seed: int = 0) -> int:
    """Number of independent quadrics containing the image in CP^N.

    Raises:
        InsufficientSamplesError: if the evaluation rank has not stabilised.
    """
    basis = sections(points, d)
    n_products, rank = _products_rank(basis, 2, samples or settings.samples, seed)
    logger.debug("%d sections, %d quadric products, rank %d", len(basis), n_products, rank)
    return n_products - rank


def image_dimension(points: Sequence[PointInstance], d: int, seed: int = 0) -> int:
    """Projective dimension of the image: Jacobian rank of the affine cone map, minus 1."""
    basis = sections(points, d)
    u, v = _torus_points(1, seed)[0]
    rows = []
    for section in basis:
        du = sum(c * i * u ** (i - 1) * v ** j for c, i, j in section if i)
        dv = sum(c * j * u ** i * v ** (j - 1) for c, i, j in section if j)
        rows.append([Fraction(evaluate(section, u, v)), Fraction(du), Fraction(dv)])
    return bareiss_rank(rows) - 1


def image_degree(points: Sequence[PointInstance], d: int,
                 samples: Optional[int] = None, seed: int = 0) -> int:
    """Degree of a surface image from the second difference of its Hilbert function."""
    h = [hilbert_value(points, d, t, samples, seed) for t in (1, 2, 3)]
    return h[2] - 2 * h[1] + h[0]


def threefold_prediction(quadric_count: int, dimension: int) -> Tuple[int, int]:
    """Relation count and image dimension predicted for the threefold.

    The threefold image is fibred over the conic x0x1 = x2^2 with the surface
    image as a hyperplane section, which adds one quadric and one dimension.
    """
    return quadric_count + 1, dimension + 1
