"""Quintic-specific computations built on the exact kernel."""
