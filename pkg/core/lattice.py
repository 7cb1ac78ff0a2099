"""Picard lattice of CP1 x CP1 blown up at up to eight points.

A class is written D = a*f1 + b*f2 - sum(m_i * e_i) where f1, f2 are the two
ruling classes and e_i the exceptional classes in blowup order. The pairing is
f1.f2 = 1, f1^2 = f2^2 = 0, e_i.e_j = -delta_ij, f_k.e_i = 0.
"""
from dataclasses import dataclass
from typing import Iterable, Tuple

from core.errors import ContractError, StructuralError


MAX_RANK = 8


@dataclass(frozen=True)
class DivisorClass:
    """An integer vector in the blowup lattice."""
    a: int
    b: int
    m: Tuple[int, ...] = ()
    
    def __post_init__(self):
        if len(self.m) > MAX_RANK:
            raise StructuralError(f"At most {MAX_RANK} exceptional classes, got {len(self.m)}")
    
    @property
    def rank(self) -> int:
        """Number of exceptional classes in the lattice this class lives in."""
        return len(self.m)
    
    @classmethod
    def zero(cls, rank: int = 0) -> "DivisorClass":
        return cls(0, 0, (0,) * rank)
    
    @classmethod
    def f1(cls, rank: int = 0) -> "DivisorClass":
        return cls(1, 0, (0,) * rank)
    
    @classmethod
    def f2(cls, rank: int = 0) -> "DivisorClass":
        return cls(0, 1, (0,) * rank)
    
    @classmethod
    def exceptional(cls, index: int, rank: int) -> "DivisorClass":
        """The class e_index (1-based) in a lattice of the given rank."""
        if not 1 <= index <= rank:
            raise StructuralError(f"Exceptional index {index} outside lattice of rank {rank}")
        m = [0] * rank
        m[index - 1] = -1
        return cls(0, 0, tuple(m))
    
    def extended(self, rank: int) -> "DivisorClass":
        """The same class viewed in a lattice with more exceptional classes."""
        if rank < self.rank:
            raise StructuralError(f"Cannot shrink rank {self.rank} to {rank}")
        return DivisorClass(self.a, self.b, self.m + (0,) * (rank - self.rank))
    
    def _check_rank(self, other: "DivisorClass"):
        if self.rank != other.rank:
            raise StructuralError(f"Lattice rank mismatch: {self.rank} vs {other.rank}")
    
    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_rank(other)
        return DivisorClass(self.a + other.a, self.b + other.b,
                            tuple(x + y for x, y in zip(self.m, other.m)))
    
    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_rank(other)
        return DivisorClass(self.a - other.a, self.b - other.b,
                            tuple(x - y for x, y in zip(self.m, other.m)))
    
    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b, tuple(-x for x in self.m))
    
    def __mul__(self, factor: int) -> "DivisorClass":
        return DivisorClass(factor * self.a, factor * self.b, tuple(factor * x for x in self.m))
    
    __rmul__ = __mul__
    
    def __str__(self) -> str:
        parts = [f"{self.a}f1", f"{self.b}f2"]
        parts += [f"{-x:+d}e{i + 1}" for i, x in enumerate(self.m) if x]
        return " ".join(parts)


def canonical_class(rank: int) -> DivisorClass:
    """K = -2f1 - 2f2 + sum(e_i)."""
    return DivisorClass(-2, -2, (-1,) * rank)


def anticanonical_class(rank: int) -> DivisorClass:
    return -canonical_class(rank)


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Symmetric bilinear pairing of two classes of the same lattice."""
    d1._check_rank(d2)
    return d1.a * d2.b + d1.b * d2.a - sum(x * y for x, y in zip(d1.m, d2.m))


def self_intersection(d: DivisorClass) -> int:
    """Square of ``d``."""
    return intersect(d, d)


def chi(d: DivisorClass) -> int:
    """Riemann-Roch: chi(O(D)) = 1 + (D^2 - D.K)/2 on a rational surface."""
    numerator = self_intersection(d) - intersect(d, canonical_class(d.rank))
    if numerator % 2:
        raise StructuralError(f"D^2 - D.K odd for {d}")  # impossible on an even-type lattice
    return 1 + numerator // 2


def adjunction_degree(ci: DivisorClass) -> int:
    """deg(-K|_Ci) for a smooth rational curve Ci, equal to Ci^2 + 2."""
    genus_term = intersect(ci, ci + canonical_class(ci.rank))
    if genus_term != -2:
        raise ContractError(f"{ci} is not the class of a smooth rational curve (C.(C+K) = {genus_term})")
    return self_intersection(ci) + 2


def gram_matrix(rank: int) -> Tuple[Tuple[int, ...], ...]:
    """Gram matrix in the basis f1, f2, e_1, ..., e_rank."""
    basis = [DivisorClass.f1(rank), DivisorClass.f2(rank)]
    basis += [DivisorClass.exceptional(i, rank) for i in range(1, rank + 1)]
    return tuple(tuple(intersect(x, y) for y in basis) for x in basis)


def total(classes: Iterable[DivisorClass], rank: int) -> DivisorClass:
    """Sum of ``classes``, zero of the given rank if empty."""
    result = DivisorClass.zero(rank)
    for d in classes:
        result = result + d
    return result
