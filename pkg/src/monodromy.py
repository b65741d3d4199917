"""Characteristic data of the Milnor monodromy T on H_n(F).

Weighted-homogeneous germs use the Milnor–Orlik divisor, nodes the parity
rule. A divisor is an integer combination of the symbols ``Λ_m``, where
``Λ_m`` stands for the set of all m-th roots of unity, and
``Λ_a · Λ_b = gcd(a, b) · Λ_lcm(a, b)``.
"""
import enum
import logging
from collections import Counter
from math import gcd
from typing import Dict, List, Sequence

from pydantic import BaseModel, Field, model_validator
from sympy import Poly, Symbol, cyclotomic_poly
from sympy.polys.domains import QQ

from src.errors import InputError, MonodromyInconsistencyError


logger = logging.getLogger(__name__)


class Provenance(str, enum.Enum):
    """Where a reported number came from."""

    GROEBNER = "groebner"
    MILNOR_ORLIK = "milnor-orlik"
    NODE_RULE = "node-rule"
    USER = "user"
    USER_OVERRIDE = "user-override"
    FORMULA = "formula"
    DERIVED = "derived"
    DEFAULT = "default"


class MonodromyDivisor(BaseModel):
    entries: Dict[int, int] = Field(default_factory=dict, description="Λ_m -> integer multiplicity")

    def expand(self) -> Dict[int, int]:
        """Multiplicity of each primitive root of unity, keyed by its order."""
        orders = {e for m in self.entries for e in _divisors(m)}
        expanded = {}
        for e in sorted(orders):
            multiplicity = sum(c for m, c in self.entries.items() if m % e == 0)
            if multiplicity < 0:
                raise MonodromyInconsistencyError(
                    f"Divisor {self.entries} gives negative multiplicity for order {e}"
                )
            if multiplicity:
                expanded[e] = multiplicity
        return expanded

    def eigenvalue_count(self) -> int:
        return sum(c * m for m, c in self.entries.items())


class MonodromyReport(BaseModel):
    mu: int = Field(ge=0)
    rank_T_minus_1: int = Field(ge=0)
    trivial: bool
    source: Provenance

    @model_validator(mode="after")
    def _check(self):
        if self.rank_T_minus_1 > self.mu:
            raise ValueError(f"rk(T-1)={self.rank_T_minus_1} exceeds mu={self.mu}")
        if self.trivial != (self.rank_T_minus_1 == 0):
            raise ValueError("trivial must hold exactly when rk(T-1) = 0")
        return self


def _divisors(m: int) -> List[int]:
    return [e for e in range(1, m + 1) if m % e == 0]


def _multiply(left: Dict[int, object], right: Dict[int, object]) -> Dict[int, object]:
    product = {}
    for a, x in left.items():
        for b, y in right.items():
            key = a * b // gcd(a, b)
            product[key] = product.get(key, QQ.zero) + x * y * gcd(a, b)
    return {m: c for m, c in product.items() if c != QQ.zero}


def milnor_orlik(weights: Sequence[int], degree: int) -> MonodromyDivisor:
    """Divisor Π (Λ_{u_i} / v_i − 1) with d / w_i = u_i / v_i in lowest terms."""
    if degree <= 0 or not weights or any(w <= 0 for w in weights):
        raise InputError("Weights and degree must be positive integers")
    result = {1: QQ.one}
    for w in weights:
        ratio = QQ(degree, w)
        u, v = QQ.numer(ratio), QQ.denom(ratio)
        factor = {1: -QQ.one}
        factor[int(u)] = factor.get(int(u), QQ.zero) + QQ(1, int(v))
        factor = {m: c for m, c in factor.items() if c != QQ.zero}
        result = _multiply(result, factor)
    entries = {}
    for m, c in result.items():
        if QQ.denom(c) != 1:
            raise MonodromyInconsistencyError(
                f"Weights {list(weights)} with degree {degree} give a non-integral divisor"
            )
        entries[m] = int(QQ.numer(c))
    divisor = MonodromyDivisor(entries=entries)
    logger.debug("Milnor-Orlik divisor for weights %s, degree %d: %s", list(weights), degree, entries)
    return divisor


def weighted_milnor_number(weights: Sequence[int], degree: int) -> int:
    mu = QQ.one
    for w in weights:
        mu *= QQ(degree, w) - 1
    if QQ.denom(mu) != 1 or mu < 0:
        raise MonodromyInconsistencyError(f"Weights {list(weights)} with degree {degree} give mu = {mu}")
    return int(QQ.numer(mu))


def eigenvalue_one_multiplicity(div: MonodromyDivisor) -> int:
    return div.expand().get(1, 0)


def rank_T_minus_1(mu: int, div: MonodromyDivisor) -> int:
    """μ minus the multiplicity of 1; valid because T has finite order here."""
    count = div.eigenvalue_count()
    if count != mu:
        raise MonodromyInconsistencyError(f"Divisor expands to {count} eigenvalues but mu = {mu}")
    return mu - eigenvalue_one_multiplicity(div)


def node_rule(k: int) -> MonodromyReport:
    """A_1 in k variables: one eigenvalue (−1)^k."""
    if k < 2:
        raise InputError(f"The node rule needs at least 2 variables, got {k}")
    rank = k % 2
    return MonodromyReport(mu=1, rank_T_minus_1=rank, trivial=rank == 0, source=Provenance.NODE_RULE)


def weighted_homogeneous_report(weights: Sequence[int], degree: int) -> MonodromyReport:
    mu = weighted_milnor_number(weights, degree)
    rank = rank_T_minus_1(mu, milnor_orlik(weights, degree))
    return MonodromyReport(mu=mu, rank_T_minus_1=rank, trivial=rank == 0, source=Provenance.MILNOR_ORLIK)


def characteristic_polynomial(div: MonodromyDivisor, variable: str = "t") -> Poly:
    t = Symbol(variable)
    result = Poly(1, t)
    for order, multiplicity in div.expand().items():
        result *= Poly(cyclotomic_poly(order, t), t) ** multiplicity
    return result


def brieskorn_pham_eigenvalues(exponents: Sequence[int]) -> List:
    """Eigenvalues of x_1^{a_1} + ... + x_k^{a_k} as exponents in [0, 1).

    Each eigenvalue is exp(2πi·q) for the returned q = Σ j_i / a_i mod 1,
    with 1 ≤ j_i < a_i.
    """
    fractions = [QQ.zero]
    for a in exponents:
        if a < 2:
            raise InputError(f"Brieskorn-Pham exponents must be at least 2, got {a}")
        fractions = [q + QQ(j, a) for q in fractions for j in range(1, a)]
    return [q - (QQ.numer(q) // QQ.denom(q)) for q in fractions]


def eigenvalue_orders(fractions: Sequence) -> Dict[int, int]:
    """Count eigenvalues exp(2πi·q) by their multiplicative order."""
    return dict(Counter(int(QQ.denom(q)) for q in fractions))
