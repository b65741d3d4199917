import itertools
import random
from math import gcd

import pytest
from pydantic import ValidationError
from sympy import Poly, Symbol, totient
from sympy.polys.domains import QQ

from src.errors import InputError, MonodromyInconsistencyError
from src.monodromy import (
    MonodromyDivisor,
    MonodromyReport,
    Provenance,
    brieskorn_pham_eigenvalues,
    characteristic_polynomial,
    eigenvalue_one_multiplicity,
    eigenvalue_orders,
    milnor_orlik,
    node_rule,
    rank_T_minus_1,
    weighted_homogeneous_report,
    weighted_milnor_number,
)


def test_even_node_has_trivial_monodromy():
    divisor = milnor_orlik([1, 1, 1, 1], 2)
    assert divisor.expand() == {1: 1}
    assert eigenvalue_one_multiplicity(divisor) == 1
    assert rank_T_minus_1(1, divisor) == 0


def test_odd_node_has_eigenvalue_minus_one():
    divisor = milnor_orlik([1, 1, 1], 2)
    assert divisor.expand() == {2: 1}
    assert eigenvalue_one_multiplicity(divisor) == 0
    assert rank_T_minus_1(1, divisor) == 1


def test_e8_divisor():
    divisor = milnor_orlik([5, 3], 15)
    assert divisor.eigenvalue_count() == 8
    assert divisor.expand() == {15: 1}
    assert eigenvalue_one_multiplicity(divisor) == 0
    assert rank_T_minus_1(8, divisor) == 8


def test_e8_against_enumeration():
    fractions = brieskorn_pham_eigenvalues([3, 5])
    assert len(fractions) == 8
    assert QQ.zero not in fractions
    assert eigenvalue_orders(fractions) == {15: 8}


def test_brieskorn_pham_node_in_three_variables():
    assert brieskorn_pham_eigenvalues([2, 2, 2]) == [QQ(1, 2)]


def test_brieskorn_pham_rejects_linear_terms():
    with pytest.raises(InputError):
        brieskorn_pham_eigenvalues([1, 3])


def test_empty_divisor():
    assert eigenvalue_one_multiplicity(MonodromyDivisor()) == 0


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_node_rule_agrees_with_milnor_orlik(k):
    report = node_rule(k)
    assert report.mu == 1
    assert report.source is Provenance.NODE_RULE
    assert report.rank_T_minus_1 == rank_T_minus_1(1, milnor_orlik([1] * k, 2))
    assert report.trivial is (k % 2 == 0)


def test_node_rule_needs_two_variables():
    with pytest.raises(InputError):
        node_rule(1)


def test_weighted_homogeneous_report():
    report = weighted_homogeneous_report([5, 3], 15)
    assert (report.mu, report.rank_T_minus_1, report.trivial) == (8, 8, False)
    assert report.source is Provenance.MILNOR_ORLIK


def test_weighted_milnor_number():
    assert weighted_milnor_number([1, 1, 1, 1], 2) == 1
    assert weighted_milnor_number([6, 4, 3], 12) == 6


def test_non_integral_divisor_rejected():
    with pytest.raises(MonodromyInconsistencyError):
        milnor_orlik([2], 3)


def test_bad_weights_rejected():
    with pytest.raises(InputError):
        milnor_orlik([0, 1], 2)


def test_mismatched_eigenvalue_count():
    with pytest.raises(MonodromyInconsistencyError):
        rank_T_minus_1(2, milnor_orlik([1, 1, 1], 2))


def test_negative_multiplicity_rejected():
    with pytest.raises(MonodromyInconsistencyError):
        MonodromyDivisor(entries={1: -1}).expand()


def test_report_rank_bounded_by_mu():
    with pytest.raises(ValidationError):
        MonodromyReport(mu=1, rank_T_minus_1=2, trivial=False, source=Provenance.USER)


def test_characteristic_polynomial():
    t = Symbol("t")
    assert characteristic_polynomial(milnor_orlik([1, 1, 1], 2)) == Poly(t + 1, t)
    assert characteristic_polynomial(milnor_orlik([1, 1], 2)) == Poly(t - 1, t)
    e8 = characteristic_polynomial(milnor_orlik([5, 3], 15))
    assert e8.degree() == 8
    assert e8.eval(1) != 0


def _brieskorn_pham(exponents):
    degree = 1
    for a in exponents:
        degree = degree * a // gcd(degree, a)
    return [degree // a for a in exponents], degree


SWEEP = [list(e) for k in (2, 3) for e in itertools.combinations_with_replacement(range(2, 6), k)]


@pytest.mark.parametrize("exponents", SWEEP)
def test_divisor_counts_match_weighted_product(exponents):
    weights, degree = _brieskorn_pham(exponents)
    divisor = milnor_orlik(weights, degree)
    expanded = divisor.expand()
    mu = weighted_milnor_number(weights, degree)
    assert divisor.eigenvalue_count() == mu
    assert sum(m * int(totient(e)) for e, m in expanded.items()) == mu


@pytest.mark.parametrize("exponents", SWEEP)
def test_divisor_matches_eigenvalue_enumeration(exponents):
    weights, degree = _brieskorn_pham(exponents)
    expanded = milnor_orlik(weights, degree).expand()
    enumerated = eigenvalue_orders(brieskorn_pham_eigenvalues(exponents))
    assert enumerated == {e: m * int(totient(e)) for e, m in expanded.items()}


@pytest.mark.parametrize("seed", range(20))
def test_divisor_ignores_weight_order(seed):
    rng = random.Random(seed)
    exponents = [rng.randint(2, 6) for _ in range(rng.randint(2, 4))]
    weights, degree = _brieskorn_pham(exponents)
    shuffled = weights[:]
    rng.shuffle(shuffled)
    assert milnor_orlik(shuffled, degree).expand() == milnor_orlik(weights, degree).expand()


def test_non_brieskorn_weights_ignore_order():
    # x^2*y + y^4
    assert milnor_orlik([3, 2], 8).expand() == milnor_orlik([2, 3], 8).expand()
    assert weighted_milnor_number([3, 2], 8) == 5
