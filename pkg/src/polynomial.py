"""Multivariate polynomials over QQ: parsing, printing and the handful of
operations the singularity pipeline needs.

Polynomials are sympy ``PolyElement`` objects living in a ``PolyRing`` over
``QQ`` with the declared variable order. Grammar accepted by :func:`parse`::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := NUMBER | NAME | '(' expr ')'

``NUMBER`` is an integer or a ``p/q`` literal. Implicit multiplication is a
syntax error.
"""
import re
import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from src.errors import InputError, NotSingularGermError, PolynomialSyntaxError, UnknownVariableError
from src.linalg import Rational, format_rational, parse_rational, qmatrix, rank


logger = logging.getLogger(__name__)

Polynomial = PolyElement
Monomial = Tuple[int, ...]

_TOKEN_PATTERN = re.compile(
    r"(?P<space>[ \t\r\n]+)"
    r"|(?P<number>\d+(?:[ \t]*/[ \t]*\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()])"
)


class ProjectivePoint(BaseModel):
    """Homogeneous coordinates with at least one nonzero entry."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    coordinates: Tuple[Rational, ...]

    @field_validator("coordinates", mode="before")
    @classmethod
    def _convert(cls, value):
        coordinates = tuple(parse_rational(entry) for entry in value)
        if not any(c != QQ.zero for c in coordinates):
            raise ValueError("a projective point needs a nonzero coordinate")
        return coordinates

    @property
    def chart(self) -> int:
        return next(i for i, c in enumerate(self.coordinates) if c != QQ.zero)

    def normalized(self) -> Tuple[Rational, ...]:
        scale = self.coordinates[self.chart]
        return tuple(c / scale for c in self.coordinates)

    def __str__(self):
        return "(" + ":".join(format_rational(c) for c in self.coordinates) + ")"


@lru_cache(maxsize=None)
def polynomial_ring(names: Tuple[str, ...]) -> PolyRing:
    return PolyRing(list(names), QQ, grevlex)


def variables(f: Polynomial) -> List[str]:
    return [str(symbol) for symbol in f.ring.symbols]


def _natural_key(name: str):
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position, line, line_start = 0, 1, 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        column = position - line_start + 1
        if not match:
            raise PolynomialSyntaxError(f"Unexpected character {text[position]!r}", line, column)
        kind = match.lastgroup
        chunk = match.group()
        if kind != "space":
            tokens.append(_Token(kind, chunk, line, column))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = position + chunk.rfind("\n") + 1
        position = match.end()
    tokens.append(_Token("end", "", line, position - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], ring: PolyRing):
        self.tokens = tokens
        self.index = 0
        self.ring = ring
        self.generators = dict(zip(variables(ring.zero), ring.gens))

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _fail(self, message: str):
        token = self.current
        raise PolynomialSyntaxError(message, token.line, token.column)

    def _accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.index += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            self._fail("Empty expression")
        result = self.expr()
        if self.current.kind != "end":
            self._fail(f"Unexpected token {self.current.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            if self._accept("+"):
                result = result + self.term()
            elif self._accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self._accept("*"):
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        if self._accept("-"):
            return -self.unary()
        if self._accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self._accept("^"):
            token = self.current
            if token.kind != "number" or "/" in token.text:
                self._fail("Exponent must be a non-negative integer")
            self.index += 1
            return base ** int(token.text)
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "number":
            self.index += 1
            return self.ring.ground_new(parse_rational(token.text.replace(" ", "").replace("\t", "")))
        if token.kind == "name":
            self.index += 1
            return self.generators[token.text]
        if self._accept("("):
            inner = self.expr()
            if not self._accept(")"):
                self._fail("Expected ')'")
            return inner
        if token.kind == "end":
            self._fail("Unexpected end of input")
        self._fail(f"Unexpected token {token.text!r}")


def parse(text: str, declared: Optional[Sequence[str]] = None) -> Polynomial:
    """Parse ``text`` into a polynomial.

    Without ``declared`` the variables are the names that occur, in natural
    sort order (``x2`` before ``x10``).
    """
    tokens = _tokenize(text)
    names = []
    for token in tokens:
        if token.kind == "name" and token.text not in names:
            names.append(token.text)
    if declared is not None:
        declared = list(declared)
        for token in tokens:
            if token.kind == "name" and token.text not in declared:
                raise UnknownVariableError(
                    f"Unknown variable {token.text!r} at line {token.line}, column {token.column}"
                )
        names = declared
    else:
        names = sorted(names, key=_natural_key)
    ring = polynomial_ring(tuple(names))
    result = _Parser(tokens, ring).parse()
    logger.debug("Parsed %r into %d terms over %s", text, len(result), names)
    return result


def _monomial_text(names: Sequence[str], monomial: Monomial) -> str:
    factors = []
    for name, exponent in zip(names, monomial):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: descending degree-lexicographic terms, explicit ``*``."""
    if not f:
        return "0"
    names = variables(f)
    ordered = sorted(f.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)
    pieces = []
    for position, (monomial, coefficient) in enumerate(ordered):
        magnitude = -coefficient if coefficient < 0 else coefficient
        monomial_text = _monomial_text(names, monomial)
        if not monomial_text:
            body = format_rational(magnitude)
        elif magnitude == QQ.one:
            body = monomial_text
        else:
            body = f"{format_rational(magnitude)}*{monomial_text}"
        if position == 0:
            pieces.append(f"-{body}" if coefficient < 0 else body)
        else:
            pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
    return "".join(pieces)


def partials(f: Polynomial) -> List[Polynomial]:
    return [f.diff(generator) for generator in f.ring.gens]


def homogeneous_degree(f: Polynomial) -> Optional[int]:
    """Common total degree of all terms, or ``None`` if f is not homogeneous."""
    if not f:
        raise InputError("The zero polynomial has no degree")
    degrees = {sum(monomial) for monomial in f.keys()}
    return degrees.pop() if len(degrees) == 1 else None


def weighted_degree(f: Polynomial, weights: Sequence[int]) -> Optional[int]:
    if not f:
        raise InputError("The zero polynomial has no weighted degree")
    if len(weights) != f.ring.ngens:
        raise InputError(f"Expected {f.ring.ngens} weights, got {len(weights)}")
    if any(w <= 0 for w in weights):
        raise InputError("Weights must be positive integers")
    degrees = {sum(w * e for w, e in zip(weights, monomial)) for monomial in f.keys()}
    return degrees.pop() if len(degrees) == 1 else None


def evaluate(f: Polynomial, point: Sequence[Rational]) -> Rational:
    if len(point) != f.ring.ngens:
        raise InputError(f"Point has {len(point)} coordinates, expected {f.ring.ngens}")
    total = QQ.zero
    for monomial, coefficient in f.items():
        value = coefficient
        for coordinate, exponent in zip(point, monomial):
            if exponent:
                value *= coordinate ** exponent
        total += value
    return total


def dehomogenize(f: Polynomial, chart: int) -> Polynomial:
    """Set variable ``chart`` to 1, dropping it from the ring."""
    names = variables(f)
    remaining = tuple(name for i, name in enumerate(names) if i != chart)
    ring = polynomial_ring(remaining)
    terms = {}
    for monomial, coefficient in f.items():
        reduced = monomial[:chart] + monomial[chart + 1:]
        terms[reduced] = terms.get(reduced, QQ.zero) + coefficient
    return ring.from_dict({m: c for m, c in terms.items() if c != QQ.zero})


def translate(f: Polynomial, shift: Sequence[Rational]) -> Polynomial:
    """Substitute ``x_i -> x_i + shift_i``; the point ``shift`` moves to 0."""
    ring = f.ring
    shifted = [generator + ring.ground_new(a) for generator, a in zip(ring.gens, shift)]
    result = ring.zero
    for monomial, coefficient in f.items():
        term = ring.ground_new(coefficient)
        for base, exponent in zip(shifted, monomial):
            if exponent:
                term = term * base ** exponent
        result += term
    return result


def localize_at(f: Polynomial, point: ProjectivePoint) -> Polynomial:
    """Affine germ of V(f) at ``point``, in the first chart where it lives."""
    if len(point.coordinates) != f.ring.ngens:
        raise InputError(f"Point {point} does not live in the {f.ring.ngens}-variable ambient space")
    chart = point.chart
    normalized = point.normalized()
    affine = dehomogenize(f, chart)
    shift = [c for i, c in enumerate(normalized) if i != chart]
    germ = translate(affine, shift)
    logger.debug("Localized at %s in chart %d: %d terms", point, chart, len(germ))
    return germ


def is_singular_point(f: Polynomial, point: ProjectivePoint) -> bool:
    if len(point.coordinates) != f.ring.ngens:
        raise InputError(f"Point {point} does not live in the {f.ring.ngens}-variable ambient space")
    coordinates = list(point.normalized())
    if evaluate(f, coordinates) != QQ.zero:
        return False
    return all(evaluate(partial, coordinates) == QQ.zero for partial in partials(f))


def hessian_rank_at_origin(g: Polynomial) -> int:
    """Rank of the matrix of second partials of a singular germ at 0."""
    n = g.ring.ngens
    for monomial, coefficient in g.items():
        if sum(monomial) <= 1 and coefficient != QQ.zero:
            raise NotSingularGermError("not a singular germ: nonzero constant or linear part")
    hessian = [[QQ.zero] * n for _ in range(n)]
    for monomial, coefficient in g.items():
        if sum(monomial) != 2:
            continue
        support = [i for i, e in enumerate(monomial) if e]
        if len(support) == 1:
            i = support[0]
            hessian[i][i] = 2 * coefficient
        else:
            i, j = support
            hessian[i][j] = coefficient
            hessian[j][i] = coefficient
    return rank(qmatrix(hessian, n, n))


def linear_part_vanishes(g: Polynomial) -> bool:
    return all(sum(monomial) != 1 for monomial in g.keys())


def constant_term(g: Polynomial) -> Rational:
    return g.get(g.ring.zero_monom, QQ.zero)


def singular_points_check(f: Polynomial, points: Sequence[ProjectivePoint]) -> List[ProjectivePoint]:
    """Return the points among ``points`` that are not singular on V(f)."""
    return [point for point in points if not is_singular_point(f, point)]
