"""Log canonical thresholds.

Local catalog values, the weighted-homogeneous formula, Newton-polyhedron
thresholds via exact LP, the sum rule for polynomials in disjoint variables,
per-degree global bounds for anticanonical members, and the arithmetic
certificate behind the total-threshold rigidity criterion.

Newton thresholds assume the polynomial is nondegenerate with respect to its
Newton polyhedron; this is not checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .exact import EQ, GE, LinearProgram, as_rational, clamp1, lp_minimize
from .picard import BLOWUP, QUADRIC, DelPezzoLattice

SMOOTH = "smooth"
NODE = "node"
CUSP = "cusp"
TACNODE = "tacnode"
ORDINARY_TRIPLE_POINT = "ordinary_triple_point"

LOCAL_LCT = {
    SMOOTH: Fraction(1),
    NODE: Fraction(1),
    CUSP: Fraction(5, 6),
    TACNODE: Fraction(3, 4),
    ORDINARY_TRIPLE_POINT: Fraction(2, 3),
}

# degenerate labels of anticanonical members -> local singularity kind
LABEL_TO_SINGULARITY = {
    "cusp": CUSP,
    "tangential_pair": TACNODE,
    "concurrent_three": ORDINARY_TRIPLE_POINT,
    "normal_crossing": NODE,
}


class ZeroPolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class LocalSingularity:
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in LOCAL_LCT:
            raise ValueError(f"unknown singularity kind {self.kind!r}")

    @property
    def lct(self) -> Fraction:
        return LOCAL_LCT[self.kind]


def lct_local(s: LocalSingularity | str) -> Fraction:
    kind = s.kind if isinstance(s, LocalSingularity) else LocalSingularity(s).kind
    return LOCAL_LCT[kind]


def singularity_for_lct(value: Fraction) -> str | None:
    """Catalog kind with this threshold (``smooth`` for 1), if any."""
    for kind in (SMOOTH, CUSP, TACNODE, ORDINARY_TRIPLE_POINT):
        if LOCAL_LCT[kind] == value:
            return kind
    return None


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        w = tuple(as_rational(x) for x in self.weights)
        if not w or any(not 0 < x <= 1 for x in w):
            raise ValueError(f"weights must lie in (0, 1], got {w}")
        object.__setattr__(self, "weights", w)

    @classmethod
    def of_support(cls, support: Iterable[Sequence[int]]) -> "WeightSystem | None":
        """The weights making every monomial of ``support`` weighted degree 1.

        ``None`` unless a unique solution with positive entries exists.
        """
        pts = [tuple(p) for p in support]
        if not pts:
            return None
        n = len(pts[0])
        w = _solve_unique(pts, [Fraction(1)] * len(pts), n)
        if w is None or any(x <= 0 or x > 1 for x in w):
            return None
        return cls(tuple(w))


def lct_weighted_homogeneous(w: WeightSystem) -> Fraction:
    """``min(1, sum of weights)``."""
    return clamp1(sum(w.weights, Fraction(0)))


@dataclass(frozen=True)
class NewtonPolyhedron:
    exponents: frozenset[tuple[int, ...]]
    dimension: int

    def __post_init__(self) -> None:
        if not self.exponents:
            raise ZeroPolynomialError("the zero polynomial has no Newton polyhedron")
        if any(len(e) != self.dimension or min(e) < 0 for e in self.exponents):
            raise ValueError("exponent vectors must be nonnegative of length dimension")

    @classmethod
    def of(cls, support: Iterable[Sequence[int]]) -> "NewtonPolyhedron":
        pts = frozenset(tuple(int(x) for x in p) for p in support)
        if not pts:
            raise ZeroPolynomialError("the zero polynomial has no Newton polyhedron")
        return cls(pts, len(next(iter(pts))))

    def diagonal_program(self) -> LinearProgram:
        """Variables ``(lambda_1..lambda_k, s)``: minimize ``s`` such that a
        convex combination of the exponents is dominated by ``s (1, ..., 1)``."""
        pts = sorted(self.exponents)
        k, n = len(pts), self.dimension
        cons = [([1] * k + [0], EQ, 1)]
        for i in range(n):
            cons.append(([-p[i] for p in pts] + [1], GE, 0))
        return LinearProgram.build([0] * k + [1], cons)

    def diagonal_coefficient(self) -> Fraction:
        res = lp_minimize(self.diagonal_program())
        if not res.optimal:
            raise ArithmeticError(f"diagonal program ended {res.status}")
        return res.value


def lct_newton(p: NewtonPolyhedron | Iterable[Sequence[int]]) -> Fraction:
    """``min(1, 1/s*)`` where ``s* (1, ..., 1)`` is where the diagonal enters
    the Newton polyhedron."""
    if not isinstance(p, NewtonPolyhedron):
        p = NewtonPolyhedron.of(p)
    s = p.diagonal_coefficient()
    if s <= 1:
        return Fraction(1)
    return 1 / s


def kuwata_combine(c_g: Fraction, c_h: Fraction) -> Fraction:
    """Threshold of ``g(x) + h(y)`` in disjoint variables: ``min(1, c_g + c_h)``."""
    return clamp1(as_rational(c_g) + as_rational(c_h))


def variable_blocks(support: Iterable[Sequence[int]]) -> list[list[int]]:
    """Partition of the variables into blocks no monomial straddles."""
    pts = [tuple(p) for p in support]
    n = len(pts[0])
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in pts:
        used = [i for i, e in enumerate(p) if e]
        for i in used[1:]:
            parent[find(i)] = find(used[0])
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        if any(p[i] for p in pts):
            blocks.setdefault(find(i), []).append(i)
    return sorted(blocks.values())


def lct_support(support: Iterable[Sequence[int]]) -> Fraction:
    """Threshold at the origin, splitting disjoint variable blocks first.

    If every monomial lives in a single block, the polynomial is a sum of
    polynomials in disjoint variables and the block thresholds combine by
    :func:`kuwata_combine`; otherwise this is :func:`lct_newton`.
    """
    pts = sorted({tuple(p) for p in support})
    if not pts:
        raise ZeroPolynomialError("the zero polynomial has no threshold")
    if any(not any(p) for p in pts):
        return Fraction(1)  # nonzero constant term: the origin is not on the divisor
    blocks = variable_blocks(pts)
    if len(blocks) <= 1:
        return lct_newton(pts)
    total = None
    for block in blocks:
        sub = [tuple(p[i] for i in block) for p in pts if any(p[i] for i in block)]
        c = lct_newton(sub)
        total = c if total is None else kuwata_combine(total, c)
    return total


# --- global thresholds on del Pezzo surfaces ------------------------------

def global_lct_bound(d: int, variant: str = BLOWUP) -> Fraction:
    """Largest ``c`` with ``K_S + cC`` lc for every ``C`` in ``|-K_S|``."""
    DelPezzoLattice(d, variant)  # validates (d, variant)
    if d == 8:
        return Fraction(1, 2) if variant == QUADRIC else Fraction(1, 3)
    return {1: Fraction(5, 6), 2: Fraction(3, 4), 3: Fraction(2, 3), 4: Fraction(2, 3),
            5: Fraction(1, 2), 6: Fraction(1, 2), 7: Fraction(1, 3), 9: Fraction(1, 3)}[d]


# --- total threshold condition and the rigidity ledger ----------------------

def _check_tau(*taus: Fraction) -> tuple[Fraction, ...]:
    out = tuple(as_rational(t) for t in taus)
    for t in out:
        if not 0 < t <= 1:
            raise ValueError(f"thresholds must lie in (0, 1], got {t}")
    return out


def total_lct_condition(tau_x: Fraction, tau_y: Fraction) -> bool:
    """``tau_X + tau_Y > 1`` (strict)."""
    tau_x, tau_y = _check_tau(tau_x, tau_y)
    return tau_x + tau_y > 1


@dataclass(frozen=True)
class RigidityLedger:
    """Discrepancy data of the two special fibers over each other's model.

    ``a, n``: discrepancies; ``l, e``: multiplicities in the complement
    pullbacks; ``b = m = 1`` since both special fibers are reduced and
    irreducible.
    """

    a: Fraction
    n: Fraction
    l: Fraction
    e: Fraction
    tau_x: Fraction
    tau_y: Fraction
    b: int = 1
    m: int = 1

    def violations(self) -> list[str]:
        bad = []
        if self.b != 1 or self.m != 1:
            bad.append("b = m = 1")
        if min(self.a, self.n) < 0:
            bad.append("a, n >= 0")
        if not (self.a + self.n == self.l == self.e):
            bad.append("a + n = l = e")
        if not self.l > 0:
            bad.append("l > 0")
        if not self.a - 1 - self.tau_x * self.e >= -1:
            bad.append("a - 1 - tau_X e >= -1")
        if not self.n - 1 - self.tau_y * self.l >= -1:
            bad.append("n - 1 - tau_Y l >= -1")
        return bad

    def is_valid(self) -> bool:
        return not self.violations()


@dataclass(frozen=True)
class RigidityCertificate:
    rigid: bool
    witness: RigidityLedger | None


def ledger_program(tau_x: Fraction, tau_y: Fraction) -> LinearProgram:
    """Feasibility program over ``(a, n, l, e) >= 0``, scaled so that ``l = 1``.

    The ledger conditions are homogeneous, so ``l > 0`` may be normalized.
    """
    return LinearProgram.build(
        [0, 0, 0, 0],
        [
            ([1, 1, -1, 0], EQ, 0),          # a + n = l
            ([0, 0, 1, -1], EQ, 0),          # l = e
            ([0, 0, 1, 0], EQ, 1),           # l = 1
            ([1, 0, 0, -tau_x], GE, 0),      # a - tau_X e >= 0
            ([0, 1, -tau_y, 0], GE, 0),      # n - tau_Y l >= 0
        ],
    )


def rigidity_certificate(tau_x: Fraction, tau_y: Fraction) -> RigidityCertificate:
    """Decide by exact LP whether a ledger contradicting rigidity exists.

    Infeasible means the birational map must be an isomorphism in
    codimension one.  A feasible ledger is rescaled to the smallest integral
    one and returned as the witness.
    """
    tau_x, tau_y = _check_tau(tau_x, tau_y)
    res = lp_minimize(ledger_program(tau_x, tau_y))
    if res.status == "infeasible":
        return RigidityCertificate(True, None)
    a, n, l, e = res.witness
    scale = lcm(*(x.denominator for x in (a, n, l, e)))
    ledger = RigidityLedger(a * scale, n * scale, l * scale, e * scale, tau_x, tau_y)
    if not ledger.is_valid():
        raise ArithmeticError(f"LP witness fails the ledger checks: {ledger.violations()}")
    return RigidityCertificate(False, ledger)


# --- exact linear algebra helper ------------------------------------------

def _solve_unique(rows: Sequence[Sequence[int]], rhs: Sequence[Fraction],
                  n: int) -> list[Fraction] | None:
    """Unique solution of ``rows . x = rhs`` (possibly overdetermined), else None."""
    m = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in m):
        return None
    if len(piv_cols) < n:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = m[i][-1]
    return x
