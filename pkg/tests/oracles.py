"""Independent reference computations used only by the tests.

None of these share code with the library paths they check: the facet
oracle enumerates vertices of the dual polyhedron directly, the vertex
oracle brute-forces small linear programs, and the curve oracle scans a box.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


def solve_square(rows, rhs):
    """Exact Gauss-Jordan; returns None for a singular system."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


def facet_lct(support):
    """Threshold from the dual description of the Newton polyhedron.

    ``1/s*`` equals the minimum of ``sum(a)`` over ``a >= 0`` with
    ``a . p >= 1`` for every exponent ``p``; that minimum sits at a vertex,
    and each vertex is cut out by ``n`` independent tight constraints.
    """
    pts = sorted({tuple(p) for p in support})
    n = len(pts[0])
    if any(not any(p) for p in pts):
        return Fraction(1)
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    planes = [(p, 1) for p in pts] + [(u, 0) for u in unit]
    best = None
    for chosen in itertools.combinations(planes, n):
        a = solve_square([c[0] for c in chosen], [c[1] for c in chosen])
        if a is None or min(a) < 0:
            continue
        if all(sum(x * y for x, y in zip(a, p)) >= 1 for p in pts):
            v = sum(a)
            best = v if best is None else min(best, v)
    return min(Fraction(1), best)


def quasi_homogeneous_weights(support):
    """Positive weights giving every exponent weight 1, if unique."""
    pts = sorted({tuple(p) for p in support})
    n = len(pts[0])
    for rows in itertools.combinations(pts, n):
        w = solve_square(rows, [1] * n)
        if w is not None:
            break
    else:
        return None
    if min(w) <= 0:
        return None
    if any(sum(x * y for x, y in zip(w, p)) != 1 for p in pts):
        return None
    return w


def isolated_for_generic_coefficients(support):
    """Kreuzer-Skarke condition: for every nonempty set ``I`` of variables
    either some monomial lives in ``I`` alone or there are ``|I|`` distinct
    outside variables ``k`` with a monomial ``x_I^m x_k``."""
    pts = {tuple(p) for p in support}
    n = len(next(iter(pts)))
    for size in range(1, n + 1):
        for I in itertools.combinations(range(n), size):
            inside = set(I)
            if any(any(p) and all(p[i] == 0 for i in range(n) if i not in inside) for p in pts):
                continue
            ks = {k for k in range(n) if k not in inside for p in pts
                  if p[k] == 1 and any(p[i] for i in I)
                  and all(p[j] == 0 for j in range(n) if j not in inside and j != k)}
            if len(ks) < size:
                return False
    return True


def brute_force_lp(objective, constraints):
    """Minimum over vertices of ``{x >= 0, constraints}``; ``None`` when
    infeasible. Only valid for bounded-below objectives on small systems."""
    n = len(objective)
    planes = [(c, r, b) for c, r, b in constraints]
    planes += [(tuple(int(i == j) for j in range(n)), ">=", 0) for i in range(n)]

    def ok(x):
        for c, r, b in planes:
            v = sum(Fraction(a) * y for a, y in zip(c, x))
            if (r == "<=" and v > b) or (r == ">=" and v < b) or (r == "==" and v != b):
                return False
        return True

    best = None
    for chosen in itertools.combinations(planes, n):
        x = solve_square([c[0] for c in chosen], [c[2] for c in chosen])
        if x is None or not ok(x):
            continue
        v = sum(Fraction(a) * y for a, y in zip(objective, x))
        best = v if best is None else min(best, v)
    return best


def box_curves(degree, h_degree, box):
    """All blow-up classes with ``C.H = h`` and ``C^2 = h - 2`` whose
    coefficients lie in ``[-box, box]`` (``E0`` coefficient in
    ``[-3 box, 3 box]``), scanned without pruning. Fano index 1 only."""
    import numpy as np

    k = 9 - degree
    rng = np.arange(-box, box + 1, dtype=np.int64)
    rest = (np.array(np.meshgrid(*[rng] * (k - 1), indexing="ij")).reshape(k - 1, -1).T
            if k > 1 else np.zeros((1, 0), dtype=np.int64))
    rest_s, rest_sq = rest.sum(axis=1), (rest ** 2).sum(axis=1)
    out = []
    for b0 in (rng if k else [None]):
        s = rest_s + (b0 if k else 0)
        sq = rest_sq + (b0 * b0 if k else 0)
        for a in range(-3 * box, 3 * box + 1):
            # C = a E0 - sum b_i E_i, so C.(-K) = 3a - sum b and C^2 = a^2 - sum b^2
            mask = (3 * a - s == h_degree) & (a * a - sq == h_degree - 2)
            for row in rest[mask]:
                head = () if not k else (-int(b0),)
                out.append((a, *head, *(-int(x) for x in row)))
    return sorted(out)


def classical_lines(degree):
    """Lines on a blow-up of P^2 in ``9 - degree`` points, from the classical
    list: exceptional curves, lines through 2 points, conics through 5,
    cubics through 7 with a double point, quartics through 8 with three
    double points, quintics with six, sextics with seven double points and
    a triple point."""
    k = 9 - degree
    shapes = [(0, (-1,)), (1, (1, 1)), (2, (1,) * 5), (3, (2,) + (1,) * 6),
              (4, (2, 2, 2) + (1,) * 5), (5, (2,) * 6 + (1, 1)),
              (6, (3,) + (2,) * 7)]
    out = set()
    for a, mults in shapes:
        if len(mults) > k:
            continue
        for pos in itertools.permutations(range(k), len(mults)):
            b = [0] * k
            for p, m in zip(pos, mults):
                b[p] = m
            out.add((a, *(-x for x in b)))
    return sorted(out)



def newton_corpus():
    """Supports in at most three variables with exponents at most 8.

    Exhaustive where that is affordable: every support in one variable,
    every support of size at most 2 in two variables, every 3-point support
    with exponents at most 5 in two variables; in three variables every
    monomial, every pair with exponents at most 3, every triple with
    exponents at most 2, and the diagonal family ``x^a + y^b + z^c``
    optionally with one extra mixed monomial.
    """
    pts1 = [(i,) for i in range(9)]
    for k in range(1, 10):
        yield from itertools.combinations(pts1, k)
    pts2 = list(itertools.product(range(9), repeat=2))
    for k in (1, 2):
        yield from itertools.combinations(pts2, k)
    yield from itertools.combinations(list(itertools.product(range(6), repeat=2)), 3)
    yield from ((p,) for p in itertools.product(range(9), repeat=3))
    yield from itertools.combinations(list(itertools.product(range(4), repeat=3)), 2)
    yield from itertools.combinations(list(itertools.product(range(3), repeat=3)), 3)
    mixed = [None, (1, 1, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1), (2, 1, 0), (0, 2, 1)]
    for a, b, c in itertools.product(range(1, 9), repeat=3):
        for m in mixed:
            yield tuple(x for x in ((a, 0, 0), (0, b, 0), (0, 0, c), m) if x)
