"""Exact linear algebra over the rationals on top of sympy's DomainMatrix."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from sympy.polys.matrices import DomainMatrix

from quintic_mirror.algebra.rational import QQ, Rational


@dataclass(frozen=True)
class LinearSystem:
    matrix: tuple[tuple[Rational, ...], ...]
    rhs: tuple[Rational, ...]
    cols: int

    @classmethod
    def build(cls, matrix: Sequence[Sequence[Any]], rhs: Sequence[Any], cols: int | None = None) -> LinearSystem:
        rows = tuple(tuple(QQ.convert(x) for x in row) for row in matrix)
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(row) != width for row in rows):
            raise ValueError("linear system rows must all have the same length")
        if len(rhs) != len(rows):
            raise ValueError("right-hand side length must match the number of rows")
        return cls(rows, tuple(QQ.convert(x) for x in rhs), width)

    @property
    def rows(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class SolveReport:
    rank: int
    consistent: bool
    particular: tuple[Rational, ...] | None
    nullspace: tuple[tuple[Rational, ...], ...] = field(default_factory=tuple)

    @property
    def nullity(self) -> int:
        return len(self.nullspace)

    @property
    def unique(self) -> bool:
        return self.consistent and not self.nullspace


def solve_exact(system: LinearSystem) -> SolveReport:
    """Row-reduce ``[A | b]`` exactly and read off rank, a particular solution
    with free variables set to zero, and a basis of the nullspace of ``A``."""
    cols = system.cols
    if system.rows == 0:
        basis = tuple(_unit(cols, j) for j in range(cols))
        return SolveReport(rank=0, consistent=True, particular=(QQ.zero,) * cols, nullspace=basis)

    augmented = [list(row) + [b] for row, b in zip(system.matrix, system.rhs)]
    reduced, pivots = DomainMatrix(augmented, (system.rows, cols + 1), QQ).rref()
    entries = reduced.to_Matrix()
    value = lambda i, j: QQ.from_sympy(entries[i, j])  # noqa: E731

    if cols in pivots:
        return SolveReport(rank=len(pivots) - 1, consistent=False, particular=None)

    particular = [QQ.zero] * cols
    for row, col in enumerate(pivots):
        particular[col] = value(row, cols)

    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = [QQ.zero] * cols
        vector[free] = QQ.one
        for row, col in enumerate(pivots):
            vector[col] = -value(row, free)
        basis.append(tuple(vector))
    return SolveReport(
        rank=len(pivots),
        consistent=True,
        particular=tuple(particular),
        nullspace=tuple(basis),
    )


def _unit(size: int, index: int) -> tuple[Rational, ...]:
    return tuple(QQ.one if j == index else QQ.zero for j in range(size))
