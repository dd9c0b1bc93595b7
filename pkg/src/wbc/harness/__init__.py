"""Finite-ring tables, a brute-force oracle, instance generators and theorem suites."""
from .oracle import oracle_search
from .tables import budget, tables

__all__ = ["oracle_search", "budget", "tables"]
