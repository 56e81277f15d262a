"""Picard lattices of nonsingular del Pezzo surfaces.

A surface of degree ``d`` is presented either as the blow-up of the plane in
``9 - d`` points (basis ``E0, E1, ..., E_{9-d}``, form ``diag(1, -1, ..., -1)``)
or, for ``d = 8`` only, as the quadric ``P1 x P1`` (hyperbolic plane form).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

BLOWUP = "blowup"
QUADRIC = "quadric"


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class DelPezzoLattice:
    degree: int
    variant: str = BLOWUP

    def __post_init__(self) -> None:
        if self.variant not in (BLOWUP, QUADRIC):
            raise LatticeError(f"unknown variant {self.variant!r}")
        if not 1 <= self.degree <= 9:
            raise LatticeError(f"degree must lie in [1, 9], got {self.degree}")
        if self.variant == QUADRIC and self.degree != 8:
            raise LatticeError("the quadric presentation exists only in degree 8")

    @property
    def rank(self) -> int:
        return 2 if self.variant == QUADRIC else 10 - self.degree

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        if self.variant == QUADRIC:
            return ((0, 1), (1, 0))
        n = self.rank
        return tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n))
                     for i in range(n))

    def divisor(self, *coefficients: int) -> "DivisorClass":
        return DivisorClass(tuple(int(c) for c in coefficients), self)

    def basis(self, i: int) -> "DivisorClass":
        """``E_i`` in the blow-up basis (or the i-th ruling for the quadric)."""
        return self.divisor(*(1 if j == i else 0 for j in range(self.rank)))

    @cached_property
    def canonical_class(self) -> "DivisorClass":
        if self.variant == QUADRIC:
            return self.divisor(-2, -2)
        return self.divisor(-3, *([1] * (self.rank - 1)))

    @cached_property
    def anticanonical_class(self) -> "DivisorClass":
        return -self.canonical_class

    @property
    def fano_index(self) -> int:
        return fano_index_of(self.degree, self.variant)[0]

    @property
    def fundamental_class(self) -> "DivisorClass":
        return fano_index_of(self.degree, self.variant)[1]

    def signature(self) -> tuple[int, int]:
        eig = np.linalg.eigvalsh(np.array(self.gram, dtype=float))
        return int((eig > 0).sum()), int((eig < 0).sum())

    def determinant(self) -> int:
        return int(round(np.linalg.det(np.array(self.gram, dtype=float))))

    def __repr__(self) -> str:
        return f"DelPezzoLattice({self.degree}, {self.variant!r})"


@dataclass(frozen=True)
class DivisorClass:
    coefficients: tuple[int, ...]
    lattice: DelPezzoLattice

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.lattice.rank:
            raise LatticeError(
                f"class has {len(self.coefficients)} coefficients, lattice rank is {self.lattice.rank}")

    def _check(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.lattice != self.lattice:
            raise LatticeError(f"lattice mismatch: {self.lattice} vs {other.lattice}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
                            self.lattice)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coefficients), self.lattice)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coefficients), self.lattice)

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def __iter__(self):
        return iter(self.coefficients)

    def is_primitive(self) -> bool:
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g == 1

    def __str__(self) -> str:
        if self.lattice.variant == QUADRIC:
            return f"({self.coefficients[0]}, {self.coefficients[1]})"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign}{mag}E{i}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number ``a . b``."""
    a._check(b)
    g = a.lattice.gram
    if a.lattice.variant == QUADRIC:
        return a.coefficients[0] * b.coefficients[1] + a.coefficients[1] * b.coefficients[0]
    return sum(g[i][i] * x * y for i, (x, y) in enumerate(zip(a.coefficients, b.coefficients)))


def arithmetic_genus(c: DivisorClass) -> Fraction:
    """``1 + (C^2 + C.K) / 2`` by adjunction, returned unrounded."""
    k = c.lattice.canonical_class
    return 1 + Fraction(intersect(c, c) + intersect(c, k), 2)


@lru_cache(maxsize=None)
def fano_index_of(d: int, variant: str = BLOWUP) -> tuple[int, DivisorClass]:
    """Return ``(r, H)`` with ``-K = r H`` and ``H`` primitive."""
    lat = DelPezzoLattice(d, variant)
    anti = lat.anticanonical_class
    r = 0
    for c in anti.coefficients:
        r = gcd(r, c)
    h = DivisorClass(tuple(c // r for c in anti.coefficients), lat)
    return r, h
