"""Unit tests for exact rank and kernel computations."""
from fractions import Fraction as F

from core.linalg import bareiss_rank, integer_row, nullspace


class TestBareissRank:
    """Tests for fraction-free elimination."""
    
    def test_empty_and_zero(self):
        """Test the rank of empty and zero matrices."""
        assert bareiss_rank([]) == 0
        assert bareiss_rank([[F(0), F(0)], [F(0), F(0)]]) == 0
    
    def test_full_rank(self):
        """Test a full-rank square matrix."""
        assert bareiss_rank([[F(1), F(2)], [F(3), F(4)]]) == 2
    
    def test_dependent_rows(self):
        """Test that proportional rows count once."""
        rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(1, 2), F(1), F(3, 2)]]
        assert bareiss_rank(rows) == 1
    
    def test_skips_pivotless_columns(self):
        """Test that zero columns do not stop elimination."""
        rows = [[F(0), F(1), F(2)], [F(0), F(2), F(5)], [F(0), F(0), F(0)]]
        assert bareiss_rank(rows) == 2
    
    def test_rational_entries(self):
        """Test elimination over non-integer fractions."""
        rows = [[F(1, 3), F(1, 5)], [F(2, 7), F(1, 2)]]
        assert bareiss_rank(rows) == 2


class TestNullspace:
    """Tests for kernel bases."""
    
    def test_integer_row(self):
        """Test clearing denominators of a rational vector."""
        assert integer_row([F(1, 2), F(1, 3)]) == [3, 2]
    
    def test_kernel_vectors_are_annihilated(self):
        """Test that every kernel vector is integral and satisfies all rows."""
        rows = [[F(1), F(1), F(0)], [F(0), F(1), F(1)]]
        basis = nullspace(rows, 3)
        assert len(basis) == 1
        for vector in basis:
            for row in rows:
                assert sum(a * b for a, b in zip(row, vector)) == 0
            assert all(x.denominator == 1 for x in vector)
    
    def test_no_conditions(self):
        """Test that an empty system has the whole space as kernel."""
        assert len(nullspace([], 4)) == 4
