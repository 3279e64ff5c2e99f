"""Quintic mirror engine: exact mirror-theorem computations for the quintic threefold."""
