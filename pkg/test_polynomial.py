import random

import pytest
from pydantic import ValidationError
from sympy.polys.domains import QQ

from src.errors import NotSingularGermError, PolynomialSyntaxError, UnknownVariableError
from src.linalg import format_rational
from src.polynomial import (
    ProjectivePoint,
    constant_term,
    evaluate,
    format_polynomial,
    hessian_rank_at_origin,
    homogeneous_degree,
    is_singular_point,
    localize_at,
    parse,
    partials,
    polynomial_ring,
    singular_points_check,
    variables,
    weighted_degree,
)

QUINTIC = "x0^5+x1^5+x2^5+x3^5+x4^5-5*x0*x1*x2*x3*x4"


def point(*coordinates):
    return ProjectivePoint(coordinates=[str(c) for c in coordinates])


def test_parse_nodal_cubic():
    f = parse("y^2 - x^2*(x-1)")
    assert variables(f) == ["x", "y"]
    assert format_polynomial(f) == "-x^3 + x^2 + y^2"


def test_parse_zero_with_declared_variables():
    f = parse("0", ["x", "y"])
    assert not f
    assert format_polynomial(f) == "0"


def test_parse_quintic():
    f = parse(QUINTIC)
    assert variables(f) == ["x0", "x1", "x2", "x3", "x4"]
    assert len(f) == 6
    assert homogeneous_degree(f) == 5


def test_variables_sort_naturally():
    assert variables(parse("x10 + x2 + x1")) == ["x1", "x2", "x10"]


def test_declared_order_is_kept():
    assert variables(parse("x + z", ["z", "y", "x"])) == ["z", "y", "x"]


def test_rational_coefficients():
    f = parse("1/2*x^2 - 3/4*y")
    assert format_polynomial(f) == "1/2*x^2 - 3/4*y"


def test_unary_minus_and_parentheses():
    assert format_polynomial(parse("-(x - y)^2")) == "-x^2 + 2*x*y - y^2"


@pytest.mark.parametrize("text", ["x*", "2x", "(x + y", "x^y", "x^1/2", ""])
def test_syntax_errors(text):
    with pytest.raises(PolynomialSyntaxError):
        parse(text)


def test_syntax_error_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse("x +\n  y $")
    assert info.value.line == 2
    assert info.value.column == 5


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse("x + q", ["x", "y"])


def test_partials():
    f = parse("x^2 + y^3")
    assert partials(f) == [parse("2*x", ["x", "y"]), parse("3*y^2", ["x", "y"])]
    assert all(not g for g in partials(parse("5", ["x", "y"])))
    assert partials(parse("x^3 + y^5")) == [parse("3*x^2", ["x", "y"]), parse("5*y^4", ["x", "y"])]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("v^2*w - u*(u - w)*(u - 3*w)", 3),
        ("x^2 + y", None),
        ("x^5 + y^5", 5),
    ],
)
def test_homogeneous_degree(text, expected):
    assert homogeneous_degree(parse(text)) == expected


def test_localize_nodal_cubic():
    f = parse("v^2*w - u^2*(u - w)")
    germ = localize_at(f, point(0, 0, 1))
    assert variables(germ) == ["u", "v"]
    assert format_polynomial(germ) == "-u^3 + u^2 + v^2"
    assert constant_term(germ) == 0


def test_localize_off_the_hypersurface_has_constant_term():
    germ = localize_at(parse("x^2 + y^2 + z^2"), point(0, 0, 1))
    assert constant_term(germ) != 0


def test_localize_translates_to_origin():
    germ = localize_at(parse("y*z", ["x", "y", "z"]), point(1, 0, 0))
    assert format_polynomial(germ) == "y*z"

    germ = localize_at(parse("x*y - z^2"), point(2, 2, 2))
    assert constant_term(germ) == 0


def test_is_singular_point():
    assert is_singular_point(parse(QUINTIC), point(1, 1, 1, 1, 1))
    assert not is_singular_point(parse("x^2 + y^2 + z^2"), point(1, 0, 0))
    assert is_singular_point(parse("y*z", ["x", "y", "z"]), point(1, 0, 0))


def test_singular_points_check_returns_offenders():
    f = parse("y*z", ["x", "y", "z"])
    offenders = singular_points_check(f, [point(1, 0, 0), point(0, 1, 0)])
    assert offenders == [point(0, 1, 0)]


def test_projective_point_needs_nonzero_coordinate():
    with pytest.raises(ValidationError):
        point(0, 0, 0)


def test_projective_point_normalizes_in_first_chart():
    p = point(0, 2, 4)
    assert p.chart == 1
    assert [format_rational(c) for c in p.normalized()] == ["0", "1", "2"]


@pytest.mark.parametrize("text, expected", [("x^2 + y^2", 2), ("x^2 + y^3", 1), ("x^3 + y^5", 0)])
def test_hessian_rank(text, expected):
    assert hessian_rank_at_origin(parse(text)) == expected


def test_hessian_rejects_smooth_germ():
    with pytest.raises(NotSingularGermError):
        hessian_rank_at_origin(parse("x + y^2"))


@pytest.mark.parametrize(
    "text, weights, expected",
    [
        ("x^3 + y^5", [5, 3], 15),
        ("x^2 + y^2 + z^2 + w^2", [1, 1, 1, 1], 2),
        ("x^2 + y^3", [1, 1], None),
    ],
)
def test_weighted_degree(text, weights, expected):
    assert weighted_degree(parse(text), weights) == expected


NAMES = ("x", "y", "z")


def _coefficient(rng):
    numerator = rng.choice([n for n in range(-5, 6) if n])
    return QQ(numerator, rng.randint(1, 4))


def _random_polynomial(rng, degree=None):
    ring = polynomial_ring(NAMES)
    terms = {}
    for _ in range(rng.randint(1, 5)):
        total = degree if degree is not None else rng.randint(0, 4)
        a = rng.randint(0, total)
        b = rng.randint(0, total - a)
        terms[(a, b, total - a - b)] = _coefficient(rng)
    return ring.from_dict(terms)


@pytest.mark.parametrize("seed", range(30))
def test_format_then_parse_is_identity(seed):
    f = _random_polynomial(random.Random(seed))
    text = format_polynomial(f)
    assert parse(text, NAMES) == f
    assert format_polynomial(parse(text, NAMES)) == text


@pytest.mark.parametrize("seed", range(20))
def test_homogeneous_degree_adds_under_products(seed):
    rng = random.Random(seed)
    f = _random_polynomial(rng, rng.randint(1, 3))
    g = _random_polynomial(rng, rng.randint(1, 3))
    assert homogeneous_degree(f * g) == homogeneous_degree(f) + homogeneous_degree(g)


@pytest.mark.parametrize("seed", range(20))
def test_euler_relation(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 5)
    f = _random_polynomial(rng, d)
    ring = f.ring
    total = sum((x * partial for x, partial in zip(ring.gens, partials(f))), ring.zero)
    assert total == f * d


@pytest.mark.parametrize("seed", range(20))
def test_localized_constant_term_is_the_value_at_the_point(seed):
    rng = random.Random(seed)
    coordinates = [rng.randint(-2, 2) for _ in NAMES]
    if not any(coordinates):
        coordinates[rng.randrange(len(NAMES))] = 1
    p = point(*coordinates)
    normalized = list(p.normalized())
    d = rng.randint(1, 4)
    f = _random_polynomial(rng, d)
    ring = f.ring
    vanishing = f - ring.gens[p.chart] ** d * evaluate(f, normalized)
    assert evaluate(vanishing, normalized) == 0
    for g in (f, vanishing):
        germ = localize_at(g, p)
        assert constant_term(germ) == evaluate(g, normalized)
        assert (not constant_term(germ)) == (evaluate(g, normalized) == 0)
