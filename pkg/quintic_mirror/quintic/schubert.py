"""Schubert calculus on G(2, n): the classical count of lines on a hypersurface.

Lines on a degree-k hypersurface in ℙ^{n−1} are the zeros of a section of
Sym^k S* on G(2, n); with k + 1 = 2(n − 2) their number is the top Chern
number. k = 5, n = 5 gives the quintic threefold, k = 3, n = 4 the cubic surface.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator

from sympy import Poly, symbols
from sympy.polys.polyfuncs import symmetrize

logger = logging.getLogger(__name__)

Partition = tuple[int, int]


@dataclass(frozen=True, eq=False)
class SchubertClass:
    """Integer combination of σ_{a,b}, n − 2 ≥ a ≥ b ≥ 0, in H*(G(2, n))."""

    n: int
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        width = self.n - 2
        cleaned = {}
        for (a, b), c in self.coeffs.items():
            if not width >= a >= b >= 0:
                raise ValueError(f"sigma_{{{a},{b}}} is not a Schubert class of G(2,{self.n})")
            if c:
                cleaned[(a, b)] = int(c)
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def basis(cls, n: int, a: int, b: int = 0) -> SchubertClass:
        return cls(n, {(a, b): 1})

    @classmethod
    def unit(cls, n: int) -> SchubertClass:
        return cls.basis(n, 0, 0)

    @property
    def top(self) -> Partition:
        return (self.n - 2, self.n - 2)

    def degree_of(self, partition: Partition) -> int:
        return self.coeffs.get(partition, 0)

    def items(self) -> Iterator[tuple[Partition, int]]:
        return iter(sorted(self.coeffs.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: SchubertClass) -> SchubertClass:
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return SchubertClass(self.n, out)

    def __sub__(self, other: SchubertClass) -> SchubertClass:
        return self + other.scale(-1)

    def scale(self, factor: int) -> SchubertClass:
        return SchubertClass(self.n, {k: c * factor for k, c in self.coeffs.items()})

    def __mul__(self, other: SchubertClass) -> SchubertClass:
        return schubert_mul(self, other)

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*s{a}{b}" for (a, b), c in self.items())
        return terms or "0"


def pieri_sigma1(x: SchubertClass) -> SchubertClass:
    width = x.n - 2
    out: dict[Partition, int] = {}
    for (a, b), c in x.coeffs.items():
        if a + 1 <= width:
            out[(a + 1, b)] = out.get((a + 1, b), 0) + c
        if b + 1 <= a:
            out[(a, b + 1)] = out.get((a, b + 1), 0) + c
    return SchubertClass(x.n, out)


def pieri_sigma11(x: SchubertClass) -> SchubertClass:
    width = x.n - 2
    out = {(a + 1, b + 1): c for (a, b), c in x.coeffs.items() if a + 1 <= width}
    return SchubertClass(x.n, out)


def _times_special(x: SchubertClass, c: int) -> SchubertClass:
    """x·σ_c through Giambelli: σ_c = σ₁σ_{c−1} − σ₁₁σ_{c−2}."""
    if c == 0:
        return x
    if c == 1:
        return pieri_sigma1(x)
    return pieri_sigma1(_times_special(x, c - 1)) - pieri_sigma11(_times_special(x, c - 2))


def schubert_mul(x: SchubertClass, y: SchubertClass) -> SchubertClass:
    if x.n != y.n:
        raise ValueError("Schubert classes live on different Grassmannians")
    total = SchubertClass(x.n)
    for (a, b), c in y.coeffs.items():
        # σ_{a,b} = σ₁₁^b · σ_{a−b}
        term = _times_special(x, a - b)
        for _ in range(b):
            term = pieri_sigma11(term)
        total = total + term.scale(c)
    return total


def chern_polynomial(k: int):
    """c_{k+1}(Sym^k S*) in e₁ = σ₁, e₂ = σ₁₁, as a sympy Poly."""
    x1, x2 = symbols("x1 x2")
    top = 1
    for i in range(k + 1):
        top *= i * x1 + (k - i) * x2
    symmetric, remainder, definitions = symmetrize(top.expand(), x1, x2, formal=True)
    if remainder != 0:
        raise ArithmeticError("Chern class of Sym^k S* must be symmetric in the Chern roots")
    e1, e2 = (symbol for symbol, _ in definitions)
    return Poly(symmetric, e1, e2)


def count_lines(k: int, n: int) -> int:
    if k + 1 != 2 * (n - 2):
        raise ValueError(f"Sym^{k} S* has rank {k + 1}, G(2,{n}) has dimension {2 * (n - 2)}")
    chern = chern_polynomial(k)
    total = SchubertClass(n)
    for (i, j), coeff in chern.terms():
        if int(coeff) != coeff:
            raise ArithmeticError("Chern polynomial has non-integer coefficients")
        term = SchubertClass.unit(n)
        for _ in range(i):
            term = pieri_sigma1(term)
        for _ in range(j):
            term = pieri_sigma11(term)
        total = total + term.scale(int(coeff))
    count = total.degree_of(total.top)
    logger.debug("lines on a degree-%s hypersurface in P^%s: %s", k, n - 1, count)
    return count


def count_lines_on_quintic() -> int:
    return count_lines(5, 5)


def count_lines_on_cubic_surface() -> int:
    return count_lines(3, 4)
