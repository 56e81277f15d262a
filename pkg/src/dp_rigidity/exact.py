"""Exact rational scalars and a small rational simplex solver.

Every scalar in the package is a :class:`fractions.Fraction`.  The linear
programs solved here are tiny (a handful of variables), so the simplex
below favours a guaranteed finite run (Bland's rule) over speed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

LE, EQ, GE = "<=", "=", ">="
_RELATIONS = (LE, EQ, GE)


class MalformedProgramError(ValueError):
    """Raised when a linear program has inconsistent dimensions or relations."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they have no place on an exact result path.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}")
    return Fraction(value)


def rational_str(q: Fraction) -> str:
    """Serialize as ``"p/q"`` (``"p"`` when integral)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def clamp1(q: RationalLike) -> Fraction:
    """``min(1, q)``."""
    return min(Fraction(1), as_rational(q))


def rmin(*values: RationalLike) -> Fraction:
    return min(as_rational(v) for v in values)


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def holds(self, point: Sequence[Fraction]) -> bool:
        lhs = sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0))
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearProgram:
    """``minimize objective . x`` subject to ``constraints``.

    ``nonneg[j]`` marks variable ``j`` as constrained to ``x_j >= 0``; the
    others are free.
    """

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...] = ()
    nonneg: tuple[bool, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.objective)
        if self.nonneg is None:
            object.__setattr__(self, "nonneg", (True,) * n)
        elif len(self.nonneg) != n:
            raise MalformedProgramError(
                f"nonneg flags have length {len(self.nonneg)}, expected {n}")
        for k, con in enumerate(self.constraints):
            if len(con.coeffs) != n:
                raise MalformedProgramError(
                    f"constraint {k} has {len(con.coeffs)} coefficients, expected {n}")
            if con.relation not in _RELATIONS:
                raise MalformedProgramError(f"constraint {k}: unknown relation {con.relation!r}")

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @classmethod
    def build(cls, objective: Iterable[RationalLike],
              constraints: Iterable[tuple[Iterable[RationalLike], str, RationalLike]] = (),
              nonneg: Iterable[bool] | None = None) -> "LinearProgram":
        """Convenience constructor taking plain ints/strings/Fractions."""
        obj = tuple(as_rational(c) for c in objective)
        cons = tuple(Constraint(tuple(as_rational(c) for c in coeffs), rel, as_rational(rhs))
                     for coeffs, rel, rhs in constraints)
        return cls(obj, cons, None if nonneg is None else tuple(nonneg))

    def is_feasible_point(self, point: Sequence[Fraction]) -> bool:
        if len(point) != self.num_vars:
            return False
        if any(flag and x < 0 for flag, x in zip(self.nonneg, point)):
            return False
        return all(con.holds(point) for con in self.constraints)

    def value_at(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.objective, point)), Fraction(0))


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    witness: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


@dataclass
class _Tableau:
    rows: list[list[Fraction]]  # each row: coefficients..., rhs
    basis: list[int]
    ncols: int
    cost: list[Fraction] = field(default_factory=list)  # reduced costs, last entry = -value

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        p = row[c]
        if p != 1:
            self.rows[r] = row = [v / p for v in row]
        for k, other in enumerate(self.rows):
            if k != r and other[c] != 0:
                f = other[c]
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
        if self.cost[c] != 0:
            f = self.cost[c]
            self.cost = [a - f * b for a, b in zip(self.cost, row)]
        self.basis[r] = c

    def run(self, allowed: Sequence[bool]) -> bool:
        """Minimize with Bland's rule; return False when unbounded."""
        while True:
            entering = next((j for j in range(self.ncols)
                             if allowed[j] and self.cost[j] < 0), None)
            if entering is None:
                return True
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return False
            self.pivot(best[1], entering)


def lp_minimize(lp: LinearProgram) -> LPResult:
    """Solve ``lp`` exactly by two-phase simplex.

    On ``optimal`` the witness is re-checked against every constraint before
    returning, so a returned optimum is always a verified feasible point.
    """
    n = lp.num_vars
    # column map: free variables are split into a difference of two columns
    cols: list[tuple[int, int]] = []  # (original index, sign)
    for j in range(n):
        cols.append((j, 1))
        if not lp.nonneg[j]:
            cols.append((j, -1))
    nstruct = len(cols)

    m = len(lp.constraints)
    rels: list[str] = []
    body: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for con in lp.constraints:
        row = [con.coeffs[j] * s for j, s in cols]
        b, rel = con.rhs, con.relation
        if b < 0:
            row = [-v for v in row]
            b = -b
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        body.append(row)
        rhs.append(b)
        rels.append(rel)

    nslack = sum(1 for r in rels if r != EQ)
    nart = sum(1 for r in rels if r != LE)
    ncols = nstruct + nslack + nart
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    s_idx, a_idx = nstruct, nstruct + nslack
    for i in range(m):
        row = body[i] + [Fraction(0)] * (nslack + nart) + [rhs[i]]
        if rels[i] == LE:
            row[s_idx] = Fraction(1)
            basis.append(s_idx)
            s_idx += 1
        else:
            if rels[i] == GE:
                row[s_idx] = Fraction(-1)
                s_idx += 1
            row[a_idx] = Fraction(1)
            basis.append(a_idx)
            a_idx += 1
        rows.append(row)

    tab = _Tableau(rows, basis, ncols)
    artificial = [j >= nstruct + nslack for j in range(ncols)]

    # phase 1: minimize the sum of artificials
    cost = [Fraction(1) if artificial[j] else Fraction(0) for j in range(ncols)] + [Fraction(0)]
    for r, b in enumerate(tab.basis):
        if artificial[b]:
            cost = [c - v for c, v in zip(cost, tab.rows[r])]
    tab.cost = cost
    tab.run([True] * ncols)
    if -tab.cost[-1] != 0:
        return LPResult("infeasible")

    # drive zero-level artificials out of the basis; drop redundant rows
    r = 0
    while r < len(tab.rows):
        if artificial[tab.basis[r]]:
            c = next((j for j in range(ncols) if not artificial[j] and tab.rows[r][j] != 0), None)
            if c is None:
                del tab.rows[r]
                del tab.basis[r]
                continue
            tab.pivot(r, c)
        r += 1

    # phase 2
    cost = [Fraction(0)] * (ncols + 1)
    for k, (j, s) in enumerate(cols):
        cost[k] = lp.objective[j] * s
    for r, b in enumerate(tab.basis):
        if cost[b] != 0:
            f = cost[b]
            cost = [c - f * v for c, v in zip(cost, tab.rows[r])]
    tab.cost = cost
    if not tab.run([not a for a in artificial]):
        return LPResult("unbounded")

    values = [Fraction(0)] * ncols
    for r, b in enumerate(tab.basis):
        values[b] = tab.rows[r][-1]
    witness = [Fraction(0)] * n
    for k, (j, s) in enumerate(cols):
        witness[j] += s * values[k]
    witness_t = tuple(witness)
    if not lp.is_feasible_point(witness_t):
        raise ArithmeticError("simplex produced an infeasible witness")
    value = lp.value_at(witness_t)
    if value != -tab.cost[-1]:
        raise ArithmeticError("simplex objective disagrees with witness")
    return LPResult("optimal", value, witness_t)
