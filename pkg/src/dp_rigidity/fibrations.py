"""Weighted-projective del Pezzo fibrations over a DVR with parameter ``t``.

Models are hypersurfaces in a weighted projective 3-space over the base,
birational maps are monomial (each coordinate is a power of ``t`` times a
permuted coordinate), and thresholds of transformed divisors are computed
on a coordinate chart through the singular point.

Only coordinate charts are supported; every singular point handled here is
a coordinate point.
"""
from __future__ import annotations

import ast
import operator
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

import sympy

from .anticanonical import (CONCURRENT_THREE, CUSP, NORMAL_CROSSING, OTHER, TANGENTIAL_PAIR)
from .lct import LABEL_TO_SINGULARITY, lct_support, singularity_for_lct
from .polynomial import Polynomial, parse_polynomial

FIXTURE_ENV = "DP_RIGIDITY_FIXTURES"

EXAMPLES = ("corti_kollar_deg3", "cE6_deg3", "line_conic_deg3", "grinenko_deg2", "grinenko_deg1")


class FibrationError(ValueError):
    pass


class VariableMismatchError(FibrationError):
    pass


class DegenerateModelError(FibrationError):
    pass


class UnsupportedChartError(FibrationError):
    pass


class PointNotOnDivisorError(FibrationError):
    pass


# --- ambient and models -----------------------------------------------------

@dataclass(frozen=True)
class WeightedAmbient:
    names: tuple[str, ...]
    weights: tuple[int, ...]
    base: str = "t"

    def __post_init__(self) -> None:
        if len(self.names) != len(self.weights):
            raise ValueError("one weight per variable")
        if len(set(self.names + (self.base,))) != len(self.names) + 1:
            raise ValueError("variable names must be distinct (and differ from the base)")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    @classmethod
    def from_spec(cls, spec: str, base: str = "t") -> "WeightedAmbient":
        """``"x:1 y:1 z:2 w:3"`` (commas optional, weight defaults to 1)."""
        names, weights = [], []
        for tok in re.split(r"[,\s]+", spec.strip()):
            name, _, w = tok.partition(":")
            names.append(name)
            weights.append(int(w) if w else 1)
        return cls(tuple(names), tuple(weights), base)

    @property
    def variables(self) -> tuple[str, ...]:
        """Polynomial variables: the coordinates followed by the base parameter."""
        return self.names + (self.base,)

    def weight_map(self) -> dict[str, int]:
        return dict(zip(self.names, self.weights))

    def parse(self, text: str, params: Mapping[str, int] | None = None) -> Polynomial:
        return parse_polynomial(text, self.variables, params)

    def weighted_degree(self, poly: Polynomial) -> int:
        degs = poly.weighted_degrees(self.weight_map())
        if len(degs) != 1:
            raise FibrationError(f"{poly} is not weighted homogeneous (degrees {sorted(degs)})")
        return degs.pop()


@dataclass(frozen=True)
class HypersurfaceModel:
    ambient: WeightedAmbient
    equation: Polynomial
    name: str = ""

    def __post_init__(self) -> None:
        if self.equation.variables != self.ambient.variables:
            raise VariableMismatchError("equation variables differ from the ambient")
        if self.equation.is_zero():
            raise DegenerateModelError("zero equation")
        self.ambient.weighted_degree(self.equation)

    @property
    def weighted_degree(self) -> int:
        return self.ambient.weighted_degree(self.equation)

    def special_fiber(self) -> Polynomial:
        fib = self.equation.subs({self.ambient.base: 0})
        if fib.is_zero():
            raise DegenerateModelError(f"special fiber of {self.name or self.equation} vanishes")
        return fib


@dataclass(frozen=True)
class DivisorOnModel:
    equation: Polynomial

    def __post_init__(self) -> None:
        if self.equation.is_zero():
            raise FibrationError("divisor equation is identically zero")

    def __str__(self) -> str:
        return str(self.equation)


# --- monomial maps --------------------------------------------------------

@dataclass(frozen=True)
class MonomialMap:
    """Coordinate ``i`` of the image is ``t^{t_powers[i]} * x_{perm[i]}``."""

    ambient: WeightedAmbient
    t_powers: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.ambient.names)
        if len(self.t_powers) != n or sorted(self.perm) != list(range(n)):
            raise FibrationError("a monomial map needs one t-power per coordinate and a permutation")
        w = self.ambient.weights
        if any(w[i] != w[self.perm[i]] for i in range(n)):
            raise FibrationError("the permutation must preserve weights")

    @classmethod
    def parse(cls, text: str, ambient: WeightedAmbient,
              params: Mapping[str, int] | None = None) -> "MonomialMap":
        """Parse ``"[t^(2*n)*x, t^(2*n)*y, t^(3*n)*z, w]"`` (image coordinates in order)."""
        body = text.strip()
        if body[:1] in "[(" and body[-1:] in "])":
            body = body[1:-1]
        parts = [p for p in body.split(",")]
        if len(parts) != len(ambient.names):
            raise FibrationError(f"map has {len(parts)} entries, ambient has {len(ambient.names)}")
        powers, perm = [], []
        ti = ambient.variables.index(ambient.base)
        for part in parts:
            poly = parse_polynomial(part, ambient.variables, params)
            if len(poly) != 1 or next(iter(poly.terms.values())) != 1:
                raise FibrationError(f"map entry {part.strip()!r} is not a monic monomial")
            (e,) = poly.terms
            coords = [i for i in range(len(ambient.names)) if e[i]]
            if len(coords) != 1 or e[coords[0]] != 1:
                raise FibrationError(f"map entry {part.strip()!r} must contain one coordinate")
            powers.append(e[ti])
            perm.append(coords[0])
        return cls(ambient, tuple(powers), tuple(perm))

    def inverse(self) -> "MonomialMap":
        n = len(self.perm)
        powers = [0] * n
        perm = [0] * n
        for i, j in enumerate(self.perm):
            powers[j] = -self.t_powers[i]
            perm[j] = i
        return MonomialMap(self.ambient, tuple(powers), tuple(perm)).normalized()

    def normalized(self) -> "MonomialMap":
        """Rescale by ``t^c`` acting with the weights so all t-powers are >= 0, minimal."""
        w = self.ambient.weights
        c = max(_ceil_div(-a, wi) for a, wi in zip(self.t_powers, w))
        return MonomialMap(self.ambient, tuple(a + c * wi for a, wi in zip(self.t_powers, w)),
                           self.perm)

    def compose(self, inner: "MonomialMap") -> "MonomialMap":
        """``self`` after ``inner``, normalized."""
        _check_same_ambient(self.ambient, inner.ambient)
        powers = tuple(a + inner.t_powers[j] for a, j in zip(self.t_powers, self.perm))
        perm = tuple(inner.perm[j] for j in self.perm)
        return MonomialMap(self.ambient, powers, perm).normalized()

    def is_identity(self) -> bool:
        """Identity up to the weighted rescaling by a power of ``t``."""
        n = self.normalized()
        return n.perm == tuple(range(len(n.perm))) and not any(n.t_powers)

    def __str__(self) -> str:
        out = []
        for a, j in zip(self.t_powers, self.perm):
            x = self.ambient.names[j]
            out.append(x if a == 0 else (f"t*{x}" if a == 1 else f"t^{a}*{x}"))
        return "[" + ", ".join(out) + "]"


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _substitute_monomial(poly: Polynomial, ambient: WeightedAmbient,
                         powers: Sequence[int], perm: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Replace coordinate ``i`` by ``t^{powers[i]} x_{perm[i]}``; t-exponents may go negative."""
    n = len(ambient.names)
    out: dict[tuple[int, ...], int] = {}
    for e, c in poly.terms.items():
        new = [0] * (n + 1)
        new[n] = e[n]
        for i in range(n):
            if e[i]:
                new[perm[i]] += e[i]
                new[n] += e[i] * powers[i]
        key = tuple(new)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _shift_t(terms: Mapping[tuple[int, ...], int], variables: tuple[str, ...]
             ) -> tuple[Polynomial, int]:
    """Divide a Laurent-in-t polynomial by ``t^k`` (``k`` = least t-exponent)."""
    k = min(e[-1] for e in terms)
    return Polynomial(variables, {e[:-1] + (e[-1] - k,): c for e, c in terms.items()}), k


@dataclass(frozen=True)
class MapCheck:
    valid: bool
    t_power: int | None
    discrepancy: Polynomial | None = None


def _check_same_ambient(*amb: WeightedAmbient) -> None:
    if len(set(amb)) != 1:
        raise VariableMismatchError(f"ambients differ: {amb}")


def apply_map(source: HypersurfaceModel, fmap: MonomialMap, target: HypersurfaceModel) -> MapCheck:
    """Check that pulling the target equation back along ``fmap`` gives ``t^k`` times the source.

    On failure ``discrepancy`` is the difference after removing the least
    t-power from both sides.
    """
    _check_same_ambient(source.ambient, fmap.ambient, target.ambient)
    terms = _substitute_monomial(target.equation, target.ambient, fmap.t_powers, fmap.perm)
    if not terms:
        return MapCheck(False, None, source.equation)
    pulled, low = _shift_t(terms, target.ambient.variables)
    src, src_low = _shift_t(source.equation.terms, source.ambient.variables)
    if pulled == src:
        return MapCheck(True, low - src_low)
    return MapCheck(False, None, pulled - src)


def _normalize_divisor(poly: Polynomial, base: str) -> Polynomial:
    """Remove integer content and fix the sign: the term of least t-degree
    (first in graded-lex order among those) gets a positive coefficient."""
    g = poly.content()
    if g > 1:
        poly = poly.scale_exact(g)
    ti = poly.index(base)
    lead = min(poly.terms, key=lambda e: (e[ti], -sum(e), tuple(-x for x in e)))
    return -poly if poly.terms[lead] < 0 else poly


def transform_divisor(d: DivisorOnModel, fmap: MonomialMap) -> DivisorOnModel:
    """Birational transform of ``d`` under ``fmap``.

    The image of ``(f = 0)`` is cut out by ``f`` composed with the inverse
    map, cleared of its t-power and scalar content.
    """
    amb = fmap.ambient
    if d.equation.variables != amb.variables:
        raise VariableMismatchError("divisor and map use different variables")
    n = len(amb.names)
    # inverse: source coordinate perm[i] = t^{-a_i} * (image coordinate i)
    inv_powers = [0] * n
    inv_perm = [0] * n
    for i, j in enumerate(fmap.perm):
        inv_powers[j] = -fmap.t_powers[i]
        inv_perm[j] = i
    terms = _substitute_monomial(d.equation, amb, inv_powers, inv_perm)
    poly, _ = _shift_t(terms, amb.variables)
    return DivisorOnModel(_normalize_divisor(poly, amb.base))


# --- special fiber ----------------------------------------------------------

@dataclass(frozen=True)
class FiberRestriction:
    fiber: Polynomial
    divisor: Polynomial | None
    curve: Polynomial | None
    eliminated: str | None
    binary_form: bool
    discriminant: int | None
    distinct_roots: int | None
    label: str
    description: str
    local_lct: Fraction | None = None


def _linear_variable(poly: Polynomial, candidates: Sequence[str]) -> tuple[str, int] | None:
    """A variable occurring only in one term, to the first power, with coefficient +-1."""
    for v in candidates:
        i = poly.index(v)
        hits = [(e, c) for e, c in poly.terms.items() if e[i]]
        if len(hits) == 1:
            e, c = hits[0]
            if e[i] == 1 and sum(e) == 1 and abs(c) == 1:
                return v, c
    return None


def _solve_linear(poly: Polynomial, v: str, c: int) -> Polynomial:
    """``v`` expressed from ``poly = c v + rest = 0``."""
    rest = poly - c * Polynomial.var(poly.variables, v)
    return -rest if c == 1 else rest


def _binary_form_roots(form: Polynomial, a: str, b: str) -> tuple[int, int]:
    """``(discriminant, number of distinct roots in P^1)`` of a binary form."""
    X, Y = sympy.symbols("X Y")
    ia, ib = form.index(a), form.index(b)
    expr = sum(c * X ** e[ia] * Y ** e[ib] for e, c in form.terms.items())
    deg = max(e[ia] + e[ib] for e in form.terms)
    dehom = sympy.Poly(expr.subs(Y, 1), X)
    disc = int(sympy.discriminant(expr.subs(Y, 1), X)) if dehom.degree() >= 1 else 0
    sqf = sympy.sqf_part(dehom)
    roots = sqf.degree() + (1 if dehom.degree() < deg else 0)
    return disc, roots


def _coordinate_point_thresholds(curve: Polynomial, names: Sequence[str], base: str
                                 ) -> dict[str, Fraction]:
    """Threshold of the curve at each coordinate point of ``names`` lying on it."""
    out = {}
    for u in names:
        chart = curve.subs({u: 1})
        others = [v for v in names if v != u]
        at_origin = chart.subs({v: 0 for v in others})
        if not at_origin.is_zero():
            continue
        out[u] = lct_support(chart.support(others))
    return out


_NAMES = {1: "line", 2: "conic", 3: "cubic"}
_LABEL_FOR_KIND = {kind: label for label, kind in LABEL_TO_SINGULARITY.items()}
_LABEL_FOR_KIND["smooth"] = NORMAL_CROSSING


def restrict_special_fiber(model: HypersurfaceModel, d: DivisorOnModel | None = None
                           ) -> FiberRestriction:
    """Set ``t = 0`` and describe the restricted divisor on the special fiber."""
    amb = model.ambient
    fiber = model.special_fiber()
    if d is None:
        return FiberRestriction(fiber, None, None, None, False, None, None, OTHER,
                                "special fiber")
    dfib = d.equation.subs({amb.base: 0})
    if dfib.is_zero():
        raise DegenerateModelError("the divisor contains the special fiber")
    lin = _linear_variable(dfib, amb.names)
    if lin is None:
        return FiberRestriction(fiber, dfib, None, None, False, None, None, OTHER,
                                "divisor not linear in a coordinate")
    v, c = lin
    curve = fiber.subs({v: _solve_linear(dfib, v, c)})
    if curve.is_zero():
        raise DegenerateModelError("the divisor restricts to a component of the special fiber")
    rest = [x for x in amb.names if x != v]
    used = curve.used_variables()
    if len(used) == 2:
        disc, roots = _binary_form_roots(curve, *used)
        deg = max(sum(e) for e in curve.terms)
        if roots == deg == 3:
            label, desc = CONCURRENT_THREE, "three concurrent lines"
        elif roots == deg:
            label, desc = (NORMAL_CROSSING if deg <= 2 else OTHER), f"{deg} concurrent lines"
        else:
            label, desc = OTHER, f"{roots} distinct lines, non-reduced"
        return FiberRestriction(fiber, dfib, curve, v, True, disc, roots, label, desc)

    thresholds = _coordinate_point_thresholds(curve, rest, amb.base)
    worst = min(thresholds.values(), default=Fraction(1))
    label = _LABEL_FOR_KIND.get(singularity_for_lct(worst), OTHER)
    desc = _describe_curve(curve, rest, label)
    return FiberRestriction(fiber, dfib, curve, v, False, None, None, label, desc, worst)


def _describe_curve(curve: Polynomial, names: Sequence[str], label: str) -> str:
    if label == CUSP:
        return "cuspidal rational curve"
    # split off coordinate-hyperplane components (monomial factors)
    idx = [curve.index(v) for v in names]
    common = [min(e[i] for e in curve.terms) for i in idx]
    parts = []
    for v, k in zip(names, common):
        parts += ["line"] * k
    residual_deg = max(sum(e) for e in curve.terms) - sum(common)
    if residual_deg:
        parts.append(_NAMES.get(residual_deg, f"degree-{residual_deg} curve"))
    joined = " and ".join(["a " + p for p in parts])
    if label == TANGENTIAL_PAIR:
        return f"{joined} meeting tangentially"
    if label == CONCURRENT_THREE:
        return f"{joined} through a common point"
    return joined


# --- local models -----------------------------------------------------------

@dataclass(frozen=True)
class LocalModel:
    chart: str
    eliminated: str
    equation: Polynomial  # over the remaining coordinates and t

    @property
    def variables(self) -> tuple[str, ...]:
        return self.equation.variables

    def support(self) -> list[tuple[int, ...]]:
        return self.equation.support()

    def lct(self) -> Fraction:
        return lct_support(self.support())


def _chart_name(model: HypersurfaceModel, point) -> str:
    names = model.ambient.names
    if isinstance(point, str):
        if point not in names:
            raise UnsupportedChartError(f"unknown chart coordinate {point!r}")
        return point
    pt = tuple(point)
    if len(pt) != len(names) or sorted(pt) != [0] * (len(names) - 1) + [1]:
        raise UnsupportedChartError(f"only coordinate points are supported, got {pt}")
    return names[pt.index(1)]


def local_model(model: HypersurfaceModel, d: DivisorOnModel, point) -> LocalModel:
    """Local equation of the divisor on the model at a coordinate point.

    On the chart ``point = 1`` the divisor is solved for a coordinate in which
    it is linear; substituting into the model equation leaves the local
    equation in the remaining coordinates and ``t``, with the point at the
    origin.
    """
    amb = model.ambient
    u = _chart_name(model, point)
    eq = model.equation.subs({u: 1})
    div = d.equation.subs({u: 1})
    chart_vars = [x for x in amb.names if x != u]
    origin = {x: 0 for x in chart_vars + [amb.base]}
    if not eq.subs(origin).is_zero():
        raise PointNotOnDivisorError(f"the coordinate point {u}=1 is not on the model")
    if not div.subs(origin).is_zero():
        raise PointNotOnDivisorError(f"the coordinate point {u}=1 is not on the divisor")
    lin = _linear_variable(div, chart_vars)
    if lin is None:
        raise UnsupportedChartError(f"divisor {div} is not linear in a chart coordinate")
    v, c = lin
    local = eq.subs({v: _solve_linear(div, v, c)})
    keep = [x for x in chart_vars if x != v] + [amb.base]
    return LocalModel(u, v, local.restrict_variables(keep))


# --- fixtures and reports ---------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv}


def eval_formula(text: str, params: Mapping[str, int]) -> Fraction:
    """Exact value of an arithmetic formula such as ``(4*n+1)/(6*n)``."""
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in params:
                raise FibrationError(f"unbound parameter {node.id!r} in {text!r}")
            return Fraction(params[node.id])
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Call) and getattr(node.func, "id", "") == "min":
            return min(ev(a) for a in node.args)
        raise FibrationError(f"unsupported formula syntax in {text!r}")
    return ev(ast.parse(text, mode="eval"))


def fixture_dir() -> Path:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("dp_rigidity") / "fixtures"))


def read_fixture(path: Path) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment line."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FibrationError(f"{path}:{lineno}: expected 'key = value'")
        out[key.strip()] = value.strip()
    return out


@dataclass(frozen=True)
class ExampleSpec:
    name: str
    fields: Mapping[str, str]

    @property
    def params(self) -> tuple[str, ...]:
        raw = self.fields.get("params", "").strip()
        return tuple(p.strip() for p in raw.split(",") if p.strip())

    def ambient(self) -> WeightedAmbient:
        return WeightedAmbient.from_spec(self.fields["ambient"], self.fields.get("base", "t"))

    def model(self, key: str, params: Mapping[str, int]) -> HypersurfaceModel:
        amb = self.ambient()
        return HypersurfaceModel(amb, parse_polynomial(self.fields[key], amb.variables, params),
                                 self.fields.get(f"{key}_name", key))

    def monomial_map(self, params: Mapping[str, int]) -> MonomialMap:
        amb = self.ambient()
        if "map" in self.fields:
            return MonomialMap.parse(self.fields["map"], amb, params)
        return MonomialMap.parse(self.fields["map_inverse_of"], amb, params).inverse()


@lru_cache(maxsize=None)
def _load_examples(directory: str) -> dict[str, ExampleSpec]:
    out = {}
    for path in sorted(Path(directory).glob("*.txt")):
        fields = read_fixture(path)
        name = fields.get("name", path.stem)
        out[name] = ExampleSpec(name, fields)
    return out


def load_examples() -> dict[str, ExampleSpec]:
    return _load_examples(str(fixture_dir()))


@dataclass(frozen=True)
class Report:
    name: str
    params: Mapping[str, int]
    map_valid: bool
    t_power: int | None
    expected_t_power: int | None
    transformed_divisor: str | None = None
    fiber_configuration: str | None = None
    fiber_label: str | None = None
    local_equation: str | None = None
    local_lct: Fraction | None = None
    expected_lct: Fraction | None = None
    is_lc: bool | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def matches(self) -> bool:
        ok = self.map_valid and self.t_power == self.expected_t_power
        if self.expected_lct is not None:
            ok = ok and self.local_lct == self.expected_lct
        return ok


def verify_example(name: str, params: Mapping[str, int] | None = None) -> Report:
    """Run map check, divisor transform, fiber restriction and local threshold."""
    examples = load_examples()
    if name not in examples:
        raise FibrationError(f"unknown example {name!r}; known: {', '.join(sorted(examples))}")
    spec = examples[name]
    params = {k: int(v) for k, v in (params or {}).items()}
    missing = [p for p in spec.params if p not in params]
    if missing:
        raise FibrationError(f"example {name} needs parameter(s) {', '.join(missing)}")
    params = {p: params[p] for p in spec.params}
    for p, v in params.items():
        if v < 1:
            raise FibrationError(f"parameter {p} must be a positive integer, got {v}")

    source = spec.model("source", params)
    target = spec.model("target", params)
    fmap = spec.monomial_map(params)
    check = apply_map(source, fmap, target)
    expected_k = (int(eval_formula(spec.fields["expected_t_power"], params))
                  if "expected_t_power" in spec.fields else None)
    if "divisor" not in spec.fields:
        return Report(name, params, check.valid, check.t_power, expected_k,
                      notes=("no divisor pipeline",))

    amb = source.ambient
    divisor = DivisorOnModel(parse_polynomial(spec.fields["divisor"], amb.variables, params))
    image = transform_divisor(divisor, fmap)
    fiber = restrict_special_fiber(target, image)
    local = local_model(target, image, spec.fields["point"])
    value = local.lct()
    expected = (eval_formula(spec.fields["expected_lct"], params)
                if "expected_lct" in spec.fields else None)
    return Report(name, params, check.valid, check.t_power, expected_k,
                  transformed_divisor=str(image.equation),
                  fiber_configuration=fiber.description,
                  fiber_label=fiber.label,
                  local_equation=str(local.equation),
                  local_lct=value,
                  expected_lct=expected,
                  is_lc=value >= 1)
