"""Decompositions of anticanonical members on del Pezzo surfaces of degree <= 4.

An anticanonical member is written ``C = sum m_i C_i`` with distinct integral
components.  The pipeline is

1. :func:`enumerate_shapes` -- multiplicity patterns with ``sum m_i <= d``;
2. :func:`filter_fano_index` -- drop patterns making ``-K`` divisible;
3. :func:`solve_configurations` -- search intersection matrices compatible
   with adjunction, the degree equation and connectedness;
4. :func:`classify_degenerations` -- the configurations admitting a
   non-lc geometric realization.

An empty result in step 3 is an exhaustive proof that the pattern does not
occur.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .curves import enumerate_curves
from .picard import DelPezzoLattice, DivisorClass, intersect

NORMAL_CROSSING = "normal_crossing"
CONCURRENT_THREE = "concurrent_three"
TANGENTIAL_PAIR = "tangential_pair"
CUSP = "cusp"
OTHER = "other"

LC = "lc"
WORSE_THAN_LC = "worse_than_lc"

_DEGENERATE = frozenset({CONCURRENT_THREE, TANGENTIAL_PAIR, CUSP})
_CURVE_NAMES = {1: "line", 2: "conic", 3: "cubic"}
MAX_PAIRWISE = 2


class UnsupportedDegreeError(ValueError):
    pass


def _check_degree(d: int) -> None:
    if not 1 <= d <= 4:
        raise UnsupportedDegreeError(f"decompositions are classified for 1 <= d <= 4, got {d}")


@dataclass(frozen=True)
class DecompositionShape:
    """A multiplicity pattern ``m_1 C_1 + ... + m_n C_n`` (``m`` ascending)."""

    degree: int
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.multiplicities or any(m < 1 for m in self.multiplicities):
            raise ValueError("multiplicities must be positive")
        if sum(self.multiplicities) > self.degree:
            raise ValueError("sum of multiplicities exceeds the degree")
        object.__setattr__(self, "multiplicities", tuple(sorted(self.multiplicities)))

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    @property
    def content(self) -> int:
        g = 0
        for m in self.multiplicities:
            g = gcd(g, m)
        return g

    def degree_assignments(self, fano_index: int = 1) -> list[tuple[int, ...]]:
        """H-degrees ``deg_i >= 1`` with ``r * sum m_i deg_i = d``."""
        if self.degree % fano_index:
            return []
        target = self.degree // fano_index
        out = []
        for degs in itertools.product(range(1, target + 1), repeat=self.n):
            if sum(m * g for m, g in zip(self.multiplicities, degs)) == target:
                out.append(degs)
        return out

    def __str__(self) -> str:
        return "+".join(f"{'' if m == 1 else m}C{i + 1}" for i, m in enumerate(self.multiplicities))


@dataclass(frozen=True)
class Configuration:
    shape: DecompositionShape
    h_degrees: tuple[int, ...]
    self_intersections: tuple[int, ...]
    pairwise: tuple[tuple[int, ...], ...]
    lattice_only: bool = field(default=False, compare=False)
    realization: tuple[DivisorClass, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def parts(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.shape.multiplicities, self.h_degrees))

    def square(self) -> int:
        """``(sum m_i C_i)^2`` recomputed from the matrix."""
        m = self.shape.multiplicities
        total = 0
        for i in range(self.n):
            for j in range(self.n):
                cij = self.self_intersections[i] if i == j else self.pairwise[i][j]
                total += m[i] * m[j] * cij
        return total

    def is_connected(self) -> bool:
        seen, stack = {0}, [0]
        while stack:
            i = stack.pop()
            for j in range(self.n):
                if j not in seen and self.pairwise[i][j] > 0:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n

    def describe(self) -> str:
        if self.n == 1:
            return "irreducible member of arithmetic genus 1"
        names = [_CURVE_NAMES.get(g, f"degree-{g} curve") for g in self.h_degrees]
        prods = ", ".join(f"C{i + 1}.C{j + 1}={self.pairwise[i][j]}"
                          for i, j in itertools.combinations(range(self.n), 2))
        return f"{' + '.join(names)} ({prods})"


def enumerate_shapes(d: int) -> list[DecompositionShape]:
    """Every multiplicity pattern with ``sum m_i <= d``.

    Patterns with a common factor come last; within each group the order is
    by largest multiplicity, then by number of components.
    """
    _check_degree(d)
    shapes = set()

    def partitions(total: int, largest: int):
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in partitions(total - first, first):
                yield (first,) + rest

    for total in range(1, d + 1):
        for p in partitions(total, total):
            shapes.add(DecompositionShape(d, p))
    return sorted(shapes, key=lambda s: (s.content > 1, max(s.multiplicities), s.n,
                                         s.multiplicities))


def filter_fano_index(shapes: list[DecompositionShape], r: int = 1
                      ) -> tuple[list[DecompositionShape], list[DecompositionShape]]:
    """Split into ``(kept, excluded)``.

    A pattern whose multiplicities share a factor ``q > 1`` writes ``-K`` as
    ``q`` times an integral class; that is impossible when ``q`` does not
    divide the Fano index ``r``.
    """
    kept, excluded = [], []
    for s in shapes:
        q = s.content
        (excluded if q > 1 and r % q else kept).append(s)
    return kept, excluded


def _canonical_key(mults, degs, selfs, mat) -> tuple:
    n = len(mults)
    best = None
    for perm in itertools.permutations(range(n)):
        key = (tuple((mults[p], degs[p], selfs[p]) for p in perm),
               tuple(mat[perm[i]][perm[j]] for i in range(n) for j in range(n)))
        if best is None or key < best:
            best = key
    return best


def _from_key(shape: DecompositionShape, key: tuple) -> Configuration:
    comps, flat = key
    n = len(comps)
    mat = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
    canon_shape = DecompositionShape(shape.degree, tuple(c[0] for c in comps))
    return Configuration(canon_shape, tuple(c[1] for c in comps), tuple(c[2] for c in comps), mat)


def solve_configurations(shape: DecompositionShape, fano_index: int = 1) -> list[Configuration]:
    """All lattice-consistent configurations realizing ``shape``.

    For reducible members every component is a smooth rational curve, so
    ``C_i^2 = r deg_i - 2``.  The unknowns are the products ``C_i.C_j`` in
    ``[0, 2]``; the constraints are ``C_i.C = r deg_i`` for each ``i``
    (equivalently adjunction), ``C^2 = d`` and connectedness.
    """
    d, r = shape.degree, fano_index
    mults = shape.multiplicities
    n = shape.n
    keys = set()
    for degs in shape.degree_assignments(r):
        if n == 1:
            # irreducible: m C = -K, so C^2 = d / m^2 and p_a follows by adjunction
            m = mults[0]
            if d % (m * m):
                continue
            c2 = d // (m * m)
            twice_pa_minus_2 = c2 - m * c2
            if twice_pa_minus_2 % 2 or twice_pa_minus_2 < -2:
                continue
            keys.add((((m, degs[0], c2),), (0,)))
            continue
        selfs = tuple(r * g - 2 for g in degs)
        pairs = list(itertools.combinations(range(n), 2))
        for values in itertools.product(range(MAX_PAIRWISE + 1), repeat=len(pairs)):
            mat = [[0] * n for _ in range(n)]
            for (i, j), v in zip(pairs, values):
                mat[i][j] = mat[j][i] = v
            for i in range(n):
                mat[i][i] = selfs[i]
            ok = all(sum(mults[j] * mat[i][j] for j in range(n)) == r * degs[i]
                     for i in range(n))
            if not ok:
                continue
            cfg = Configuration(shape, degs, selfs,
                                tuple(tuple(0 if i == j else mat[i][j] for j in range(n))
                                      for i in range(n)))
            if cfg.square() != d or not cfg.is_connected():
                continue
            keys.add(_canonical_key(mults, degs, selfs, cfg.pairwise))
    return [_from_key(shape, k) for k in sorted(keys)]


def realize(config: Configuration, lattice: DelPezzoLattice) -> tuple[DivisorClass, ...] | None:
    """Find actual curve classes ``C_i`` with ``sum m_i C_i = -K`` and the given products.

    Returns ``None`` when no tuple of enumerated curve classes realizes the
    configuration in ``lattice``.
    """
    anti = lattice.anticanonical_class
    mults = config.shape.multiplicities
    if config.n == 1:
        m = mults[0]
        coeffs = anti.coefficients
        if any(c % m for c in coeffs):
            return None
        c = DivisorClass(tuple(x // m for x in coeffs), lattice)
        return (c,) if intersect(c, c) == config.self_intersections[0] else None
    pools = {g: [cc.divisor for cc in enumerate_curves(lattice, g)] for g in set(config.h_degrees)}
    n = config.n
    pool_sets = {g: set(v) for g, v in pools.items()}

    def rec(chosen: list[DivisorClass]) -> tuple[DivisorClass, ...] | None:
        i = len(chosen)
        if i == n - 1:
            rest = anti
            for m, c in zip(mults, chosen):
                rest = rest - m * c
            if any(x % mults[i] for x in rest.coefficients):
                return None
            last = DivisorClass(tuple(x // mults[i] for x in rest.coefficients), lattice)
            if last not in pool_sets[config.h_degrees[i]] or last in chosen:
                return None
            if all(intersect(last, chosen[j]) == config.pairwise[i][j] for j in range(i)):
                return tuple(chosen) + (last,)
            return None
        for c in pools[config.h_degrees[i]]:
            if c in chosen:
                continue
            if all(intersect(c, chosen[j]) == config.pairwise[i][j] for j in range(i)):
                found = rec(chosen + [c])
                if found:
                    return found
        return None

    return rec([])


@dataclass(frozen=True)
class LcClassification:
    configuration: Configuration
    verdict: str
    singularity_label: str
    description: str

    def __post_init__(self) -> None:
        if (self.verdict == WORSE_THAN_LC) != (self.singularity_label in _DEGENERATE):
            raise ValueError(f"verdict {self.verdict} inconsistent with {self.singularity_label}")


def degenerate_labels(config: Configuration) -> list[str]:
    """Non-lc geometric realizations admitted by a configuration.

    The lattice cannot see whether intersection points coincide, so this
    reports what the numbers allow: an irreducible member may acquire a cusp,
    a pair meeting with multiplicity 2 may be tangent at one point, and three
    pairwise-meeting components may pass through a common point.
    """
    if config.n == 1:
        return [CUSP] if config.self_intersections[0] > 0 else []
    labels = []
    if any(config.pairwise[i][j] >= 2 for i, j in itertools.combinations(range(config.n), 2)):
        labels.append(TANGENTIAL_PAIR)
    if any(all(config.pairwise[a][b] >= 1 for a, b in itertools.combinations(t, 2))
           for t in itertools.combinations(range(config.n), 3)):
        labels.append(CONCURRENT_THREE)
    return labels


def _describe_degenerate(config: Configuration, label: str) -> str:
    if label == CUSP:
        return "cuspidal rational curve"
    names = [_CURVE_NAMES.get(g, f"degree-{g} curve") for g in config.h_degrees]
    if label == TANGENTIAL_PAIR:
        return f"{names[0]} and {names[1]} meeting tangentially at one point with C1.C2=2"
    prods = "=".join(f"C{i + 1}.C{j + 1}" for i, j in itertools.combinations(range(config.n), 2))
    return f"{', '.join(names)} through one common point with {prods}=1"


@lru_cache(maxsize=None)
def survey(d: int, realize_in_lattice: bool = True) -> dict:
    """Run the whole pipeline for degree ``d`` and collect every stage."""
    _check_degree(d)
    shapes = enumerate_shapes(d)
    kept, excluded = filter_fano_index(shapes)
    lattice = DelPezzoLattice(d)
    solved = {}
    for s in kept:
        configs = []
        for c in solve_configurations(s):
            realization = realize(c, lattice) if realize_in_lattice else None
            configs.append(Configuration(c.shape, c.h_degrees, c.self_intersections, c.pairwise,
                                         lattice_only=realize_in_lattice and realization is None,
                                         realization=realization))
        solved[s] = configs
    return {"shapes": shapes, "kept": kept, "excluded": excluded, "solved": solved}


def classify_degenerations(d: int) -> list[LcClassification]:
    """The worse-than-lc anticanonical members in degree ``d``.

    Ordered by number of components (most first); ties by H-degrees.
    """
    data = survey(d)
    configs = [c for cs in data["solved"].values() for c in cs]
    configs.sort(key=lambda c: (-c.n, c.h_degrees, c.pairwise))
    out = []
    for c in configs:
        for label in degenerate_labels(c):
            out.append(LcClassification(c, WORSE_THAN_LC, label, _describe_degenerate(c, label)))
    return out
