"""Exact arithmetic kernel: scalars, truncated series, residues, linear algebra, cohomology."""
