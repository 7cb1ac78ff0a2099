"""Exact arithmetic core: divisor lattice, linear algebra, errors."""
