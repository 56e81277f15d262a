"""Enumeration of lines, conics and cubics on del Pezzo lattices.

A curve class of H-degree ``h`` is an integral class ``C`` with ``C.H = h``
and ``p_a(C) = 0``; adjunction then forces ``C^2 = r h - 2``.  Effectivity
is taken numerically (on del Pezzo surfaces the numerical conditions
suffice).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .picard import QUADRIC, DelPezzoLattice, DivisorClass, arithmetic_genus, intersect

LINE, CONIC, CUBIC = 1, 2, 3


@dataclass(frozen=True)
class CurveClass:
    divisor: DivisorClass
    h_degree: int

    @property
    def self_intersection(self) -> int:
        return intersect(self.divisor, self.divisor)

    @property
    def genus(self) -> int:
        return int(arithmetic_genus(self.divisor))

    def check(self) -> bool:
        """Re-verify the three defining invariants."""
        lat = self.divisor.lattice
        anti_deg = intersect(self.divisor, lat.anticanonical_class)
        return (arithmetic_genus(self.divisor) == 0
                and anti_deg == lat.fano_index * self.h_degree
                and self.self_intersection == 2 * self.genus - 2 + anti_deg)

    def __str__(self) -> str:
        return str(self.divisor)


@dataclass(frozen=True)
class Inequality:
    """One exactly-checked step ``lhs <op> rhs`` of a bound derivation."""

    claim: str
    lhs: Fraction
    op: str
    rhs: Fraction

    def holds(self) -> bool:
        return {"<=": self.lhs <= self.rhs, "<": self.lhs < self.rhs,
                ">": self.lhs > self.rhs, ">=": self.lhs >= self.rhs,
                "=": self.lhs == self.rhs}[self.op]


@dataclass(frozen=True)
class CoefficientBound:
    bound: int
    leading_range: tuple[int, int]
    chain: tuple[Inequality, ...]

    def verified(self) -> bool:
        return all(step.holds() for step in self.chain)

    def __int__(self) -> int:
        return self.bound


def _targets(lattice: DelPezzoLattice, h_degree: int) -> tuple[int, int]:
    """``(C.(-K), C^2)`` forced for a rational curve of the given H-degree."""
    if not 1 <= h_degree <= 3:
        raise ValueError(f"h_degree must be 1, 2 or 3, got {h_degree}")
    delta = lattice.fano_index * h_degree
    return delta, delta - 2


def coefficient_bound(lattice: DelPezzoLattice, h_degree: int) -> CoefficientBound:
    """Bound every coefficient of a solution class, with its derivation.

    Blow-up presentation, ``C = a E0 - sum b_i E_i`` on ``k = 9 - d`` points:
    the conditions read ``sum b = 3a - delta`` and ``sum b^2 = a^2 - s``.
    Cauchy-Schwarz ``(sum b)^2 <= k sum b^2`` gives the quadratic
    ``q(a) = d a^2 - 6 delta a + delta^2 + k s <= 0``; each ``b_i^2`` is then
    at most ``a^2 - s``.
    """
    delta, s = _targets(lattice, h_degree)
    if lattice.variant == QUADRIC:
        # C = (p, q): p + q = h (H = (1, 1)) and pq = h - 1, so {p, q} = {1, h - 1}
        h = h_degree
        chain = (
            Inequality("root sum 1 + (h - 1) = p + q", Fraction(1 + (h - 1)), "=", Fraction(h)),
            Inequality("root product 1 * (h - 1) = pq", Fraction(h - 1), "=", Fraction(s, 2)),
        )
        b = max(1, abs(h - 1))
        return CoefficientBound(b, (min(1, h - 1), b), chain)

    d, k = lattice.degree, lattice.rank - 1
    if k == 0:
        # rank one: C = a E0 with 3a = delta
        a = Fraction(delta, 3)
        chain = (Inequality("3a = C.(-K) determines a", 3 * a, "=", Fraction(delta)),)
        b = abs(a.numerator // a.denominator) if a.denominator == 1 else 0
        return CoefficientBound(b, (b, b), chain)

    def q(a: int) -> Fraction:
        return Fraction(d * a * a - 6 * delta * a + delta * delta + k * s)

    # the integers where q <= 0 form an interval around the real roots of q
    disc = 36 * delta * delta - 4 * d * (delta * delta + k * s)
    if disc < 0:
        chain = (Inequality("discriminant of q is negative: no admissible a",
                            Fraction(disc), "<", Fraction(0)),)
        return CoefficientBound(0, (1, 0), chain)
    a = (6 * delta - isqrt(disc)) // (2 * d) - 1
    while q(a) > 0 and a <= (6 * delta + isqrt(disc)) // (2 * d) + 1:
        a += 1
    amin = amax = a
    while q(amax + 1) <= 0:
        amax += 1
    chain: list[Inequality] = [
        Inequality("leading coefficient of q is the degree d > 0 (q convex)",
                   Fraction(d), ">", Fraction(0)),
        Inequality(f"q({amin - 1}) > 0 excludes a <= {amin - 1}", q(amin - 1), ">", Fraction(0)),
        Inequality(f"q({amax + 1}) > 0 excludes a >= {amax + 1}", q(amax + 1), ">", Fraction(0)),
    ]
    amax_abs = max(abs(amin), abs(amax))
    bsq = amax_abs * amax_abs - s
    bb = isqrt(max(bsq, 0))
    chain.append(Inequality(f"b_i^2 <= a^2 - C^2 <= {bsq} so |b_i| <= {bb}",
                            Fraction(bb * bb), "<=", Fraction(bsq)))
    chain.append(Inequality(f"(|b_i| = {bb + 1}) is too large",
                            Fraction((bb + 1) ** 2), ">", Fraction(bsq)))
    return CoefficientBound(max(amax_abs, bb), (amin, amax), tuple(chain))


def _blowup_solutions(k: int, a: int, total: int, squares: int, bound: int):
    """Integer vectors ``b`` in ``[-bound, bound]^k`` with given sum and sum of squares."""
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(i: int, total: int, squares: int) -> None:
        rem = k - i
        if rem == 0:
            if total == 0 and squares == 0:
                out.append(tuple(prefix))
            return
        if squares < 0 or total * total > rem * squares:
            return
        for b in range(-bound, bound + 1):
            sq = squares - b * b
            if sq < 0:
                continue
            prefix.append(b)
            rec(i + 1, total - b, sq)
            prefix.pop()

    rec(0, total, squares)
    return out


def enumerate_curves(lattice: DelPezzoLattice, h_degree: int,
                     bound: int | None = None) -> list[CurveClass]:
    """All rational curve classes of the given H-degree, lexicographically sorted.

    ``bound`` overrides the proven coefficient bound (used to check that a
    larger search box adds nothing).
    """
    if bound is None:
        bound = coefficient_bound(lattice, h_degree).bound
    delta, s = _targets(lattice, h_degree)
    found: list[DivisorClass] = []
    if lattice.variant == QUADRIC:
        for p in range(-bound, bound + 1):
            for q in range(-bound, bound + 1):
                c = lattice.divisor(p, q)
                if intersect(c, lattice.fundamental_class) == h_degree and 2 * p * q == s:
                    found.append(c)
    else:
        k = lattice.rank - 1
        for a in range(-bound, bound + 1):
            # C = a E0 - sum b_i E_i
            for b in _blowup_solutions(k, a, 3 * a - delta, a * a - s, bound):
                found.append(lattice.divisor(a, *(-x for x in b)))
    curves = [CurveClass(c, h_degree) for c in found
              if intersect(c, lattice.fundamental_class) == h_degree and arithmetic_genus(c) == 0]
    curves.sort(key=lambda cc: cc.divisor.coefficients)
    for cc in curves:
        if not cc.check():
            raise AssertionError(f"enumerated class {cc} violates the curve invariants")
    return curves


def lines(lattice: DelPezzoLattice) -> list[CurveClass]:
    return enumerate_curves(lattice, LINE)


def conics(lattice: DelPezzoLattice) -> list[CurveClass]:
    return enumerate_curves(lattice, CONIC)


def cubics(lattice: DelPezzoLattice) -> list[CurveClass]:
    return enumerate_curves(lattice, CUBIC)
