"""Sparse integer polynomials over named single-letter variables, with a parser.

Grammar (whitespace insensitive)::

    poly     := sign? term (sign term)*
    term     := factor ('*'? factor)*
    factor   := (INT | VAR) ('^' exponent)?
    exponent := INT | PARAM | '(' expr ')'
    expr     := integer expression in + - * ( ) over INT and bound PARAMs

Canonical printing lists terms in graded-lex order with explicit ``*`` and
``^``, so ``parse(str(p)) == p`` and ``str(parse(s)) == s`` for canonical
``s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, text: str = "", position: int = -1) -> None:
        self.text = text
        self.position = position
        where = f" at position {position}" if position >= 0 else ""
        super().__init__(f"{message}{where}" + (f": {text!r}" if text else ""))


class UnboundParameterError(PolynomialSyntaxError):
    pass


class NegativeExponentError(PolynomialSyntaxError):
    pass


Exponent = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Polynomial:
    variables: tuple[str, ...]
    terms: Mapping[Exponent, int]

    def __post_init__(self) -> None:
        clean = {}
        for e, c in self.terms.items():
            if len(e) != len(self.variables):
                raise ValueError(f"exponent {e} does not match variables {self.variables}")
            if c:
                clean[tuple(e)] = int(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=_grlex_key)))

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "Polynomial":
        return cls(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Iterable[str], c: int) -> "Polynomial":
        v = tuple(variables)
        return cls(v, {(0,) * len(v): c})

    @classmethod
    def var(cls, variables: Iterable[str], name: str, power: int = 1) -> "Polynomial":
        v = tuple(variables)
        if name not in v:
            raise KeyError(f"unknown variable {name!r}")
        return cls(v, {tuple(power if x == name else 0 for x in v): 1})

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
        return other

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(self.terms.items())))

    # inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def degree_in(self, name: str) -> int:
        i = self.index(name)
        return max((e[i] for e in self.terms), default=0)

    def min_degree_in(self, name: str) -> int:
        i = self.index(name)
        return min((e[i] for e in self.terms), default=0)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables) if any(e[i] for e in self.terms))

    def support(self, names: Iterable[str] | None = None) -> list[Exponent]:
        if names is None:
            return list(self.terms)
        idx = [self.index(n) for n in names]
        return [tuple(e[i] for i in idx) for e in self.terms]

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def weighted_degrees(self, weights: Mapping[str, int]) -> set[int]:
        """Set of weighted degrees of the terms (variables missing from
        ``weights`` count with weight 0)."""
        w = [weights.get(v, 0) for v in self.variables]
        return {sum(a * b for a, b in zip(e, w)) for e in self.terms}

    # transformation ---------------------------------------------------

    def subs(self, values: Mapping[str, "Polynomial | int"]) -> "Polynomial":
        """Substitute polynomials (or integers) for variables."""
        images = []
        for v in self.variables:
            if v in values:
                val = values[v]
                images.append(self._coerce(val) if isinstance(val, int) else val)
            else:
                images.append(Polynomial.var(self.variables, v))
        for img in images:
            if img.variables != self.variables:
                raise ValueError("substituted polynomial uses a different variable set")
        out = Polynomial.zero(self.variables)
        cache: dict[tuple[int, int], Polynomial] = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(self.variables, c)
            for i, k in enumerate(e):
                if k:
                    if (i, k) not in cache:
                        cache[(i, k)] = images[i] ** k
                    term = term * cache[(i, k)]
            out = out + term
        return out

    def divide_monomial(self, exponent: Exponent) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            q = tuple(a - b for a, b in zip(e, exponent))
            if min(q) < 0:
                raise ArithmeticError("monomial does not divide the polynomial")
            out[q] = c
        return Polynomial(self.variables, out)

    def scale_exact(self, k: int) -> "Polynomial":
        """Divide every coefficient by ``k`` (must divide exactly)."""
        if any(c % k for c in self.terms.values()):
            raise ArithmeticError(f"{k} does not divide every coefficient")
        return Polynomial(self.variables, {e: c // k for e, c in self.terms.items()})

    def restrict_variables(self, names: Iterable[str]) -> "Polynomial":
        """Re-express over ``names``; every dropped variable must be absent."""
        names = tuple(names)
        idx = []
        for n in names:
            idx.append(self.variables.index(n) if n in self.variables else None)
        for i, v in enumerate(self.variables):
            if v not in names and any(e[i] for e in self.terms):
                raise ValueError(f"variable {v!r} still occurs")
        return Polynomial(names, {tuple(e[i] if i is not None else 0 for i in idx): c
                                  for e, c in self.terms.items()})

    # printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.terms.items():
            factors = [v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            sign = "-" if c < 0 else "+"
            out.append(sign + body)
        s = "".join(out)
        return s[1:] if s.startswith("+") else s

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, variables={self.variables})"


def _grlex_key(item: tuple[Exponent, int]):
    e = item[0]
    return (-sum(e), tuple(-x for x in e))


# --- parser ---------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...], params: Mapping[str, int]) -> None:
        self.text = text
        self.variables = variables
        self.params = params
        self.pos = 0

    def error(self, msg: str, cls=PolynomialSyntaxError):
        return cls(msg, self.text, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Polynomial:
        if not self.peek():
            raise self.error("empty polynomial")
        result = Polynomial.zero(self.variables)
        sign = -1 if self.take("-") else (self.take("+") and 1) or 1
        result = result + sign * self.term()
        while True:
            if self.take("+"):
                result = result + self.term()
            elif self.take("-"):
                result = result - self.term()
            elif self.peek() == "":
                return result
            else:
                raise self.error(f"unexpected character {self.peek()!r}")

    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.factor()
            elif ch and (ch.isalnum()):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> Polynomial:
        ch = self.peek()
        if ch.isdigit():
            base = Polynomial.constant(self.variables, self.integer())
        elif ch.isalpha():
            start = self.pos
            self.pos += 1
            if ch not in self.variables:
                self.pos = start
                raise self.error(f"unknown variable {ch!r}")
            base = Polynomial.var(self.variables, ch)
        elif ch == "(":
            self.pos += 1
            inner_start = self.pos
            depth = 1
            while self.pos < len(self.text) and depth:
                depth += {"(": 1, ")": -1}.get(self.text[self.pos], 0)
                self.pos += 1
            if depth:
                raise self.error("unbalanced parenthesis")
            base = _Parser(self.text[inner_start:self.pos - 1], self.variables, self.params).parse()
        else:
            raise self.error("expected a factor" if ch else "unexpected end of input")
        if self.take("^"):
            k = self.exponent()
            if k < 0:
                raise self.error(f"negative exponent {k}", NegativeExponentError)
            base = base ** k
        return base

    def exponent(self) -> int:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if not self.take(")"):
                raise self.error("expected ')'")
            return value
        if ch == "-":
            self.pos += 1
            return -self.exponent()
        return self.atom()

    def expr(self) -> int:
        value = self.product()
        while True:
            if self.take("+"):
                value += self.product()
            elif self.take("-"):
                value -= self.product()
            else:
                return value

    def product(self) -> int:
        value = self.atom()
        while self.take("*"):
            value *= self.atom()
        return value

    def atom(self) -> int:
        ch = self.peek()
        if ch.isdigit():
            return self.integer()
        if ch == "(":
            self.pos += 1
            v = self.expr()
            if not self.take(")"):
                raise self.error("expected ')'")
            return v
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch.isalpha():
            if ch not in self.params:
                raise self.error(f"unbound parameter {ch!r}", UnboundParameterError)
            self.pos += 1
            return int(self.params[ch])
        raise self.error("expected an exponent")


def parse_polynomial(text: str, variables: Iterable[str],
                     params: Mapping[str, int] | None = None) -> Polynomial:
    """Parse ``text`` over ``variables`` (single letters) with bound ``params``."""
    variables = tuple(variables)
    for v in variables:
        if len(v) != 1 or not v.isalpha():
            raise ValueError(f"variables must be single letters, got {v!r}")
    if len(set(variables)) != len(variables):
        raise ValueError("duplicate variable names")
    return _Parser(text, variables, dict(params or {})).parse()
