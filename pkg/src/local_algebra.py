"""Milnor numbers through standard bases of the Jacobian ideal.

Global (degrevlex) Gröbner bases come from sympy's Buchberger
implementation. The local ring needs a local order, so standard bases for
``negdegrevlex`` are computed here with Mora's tangent-cone normal form.
"""
import enum
import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.groebnertools import groebner
from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm
from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.orderings import grevlex

from src.config import load_settings
from src.errors import (
    InputError,
    NonIsolatedSingularityError,
    NotSingularGermError,
    ReductionLimitError,
    SmoothGermError,
)
from src.polynomial import Monomial, Polynomial, constant_term, hessian_rank_at_origin, linear_part_vanishes, partials


logger = logging.getLogger(__name__)


class NegDegRevLexOrder(SympyMonomialOrder):
    """Local degree reverse lexicographic order: 1 is the largest monomial."""

    alias = "negdegrevlex"
    is_global = False

    def __call__(self, monomial):
        return (-sum(monomial), tuple(reversed([-m for m in monomial])))


negdegrevlex = NegDegRevLexOrder()


class MonomialOrder(str, enum.Enum):
    DEGREVLEX_GLOBAL = "degrevlex-global"
    NEGDEGREVLEX_LOCAL = "negdegrevlex-local"

    @property
    def key(self):
        return grevlex if self is MonomialOrder.DEGREVLEX_GLOBAL else negdegrevlex

    @property
    def is_global(self) -> bool:
        return self is MonomialOrder.DEGREVLEX_GLOBAL


@dataclass(frozen=True)
class StandardBasis:
    generators: List[Polynomial]
    order: MonomialOrder

    def leading_monomials(self) -> List[Monomial]:
        return [leading_monomial(g, self.order) for g in self.generators]


def leading_monomial(f: Polynomial, order: MonomialOrder) -> Monomial:
    return max(f.keys(), key=order.key)


def leading_coefficient(f: Polynomial, order: MonomialOrder):
    return f[leading_monomial(f, order)]


def monic(f: Polynomial, order: MonomialOrder) -> Polynomial:
    return f.mul_ground(QQ.one / leading_coefficient(f, order))


def ecart(f: Polynomial, order: MonomialOrder) -> int:
    return max(sum(m) for m in f.keys()) - sum(leading_monomial(f, order))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lm_f, lm_g = leading_monomial(f, order), leading_monomial(g, order)
    lcm = monomial_lcm(lm_f, lm_g)
    left = f.mul_monom(monomial_div(lcm, lm_f)).mul_ground(QQ.one / f[lm_f])
    right = g.mul_monom(monomial_div(lcm, lm_g)).mul_ground(QQ.one / g[lm_g])
    return left - right


def _reduce_once(h: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lm_h, lm_g = leading_monomial(h, order), leading_monomial(g, order)
    factor = h[lm_h] / g[lm_g]
    return h - g.mul_monom(monomial_div(lm_h, lm_g)).mul_ground(factor)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = MonomialOrder.DEGREVLEX_GLOBAL) -> StandardBasis:
    """Reduced Gröbner basis for a global order (sympy, normal strategy)."""
    if not order.is_global:
        raise InputError("Buchberger's algorithm needs a global order; use local_standard_basis")
    nonzero = [g for g in gens if g]
    if not nonzero:
        raise InputError("Cannot compute a basis of the zero ideal")
    ring = nonzero[0].ring
    basis = groebner(nonzero, ring, method="buchberger")
    logger.debug("Global Gröbner basis with %d generators", len(basis))
    return StandardBasis(generators=list(basis), order=order)


def mora_normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial],
    order: MonomialOrder = MonomialOrder.NEGDEGREVLEX_LOCAL,
    limit: Optional[int] = None,
) -> Polynomial:
    """Weak normal form with écart-minimal reducer choice.

    Whenever the chosen reducer has a larger écart than the current
    remainder, the remainder itself joins the reducer list.
    """
    if order.is_global:
        raise InputError("Mora's normal form is for local orders")
    limit = limit if limit is not None else load_settings().mora_limit
    reducers = [(g, leading_monomial(g, order), ecart(g, order)) for g in basis if g]
    h = f
    steps = 0
    while h:
        lm_h = leading_monomial(h, order)
        candidates = [
            (e, index, g) for index, (g, lm_g, e) in enumerate(reducers) if monomial_divides(lm_g, lm_h)
        ]
        if not candidates:
            break
        e_g, _, g = min(candidates, key=lambda candidate: (candidate[0], candidate[1]))
        e_h = ecart(h, order)
        if e_g > e_h:
            reducers.append((h, lm_h, e_h))
            logger.debug("Mora: remainder with écart %d appended as reducer", e_h)
        h = _reduce_once(h, g, order)
        steps += 1
        if steps > limit:
            raise ReductionLimitError(f"Mora reduction exceeded {limit} steps")
    return h


def _select_pair(pairs, basis, order):
    def weight(pair):
        i, j = pair
        lcm = monomial_lcm(leading_monomial(basis[i], order), leading_monomial(basis[j], order))
        return (sum(lcm), j, i)

    return min(pairs, key=weight)


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _minimalize(basis: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    kept = []
    for index, g in enumerate(basis):
        lm_g = leading_monomial(g, order)
        redundant = False
        for other_index, other in enumerate(basis):
            if other_index == index:
                continue
            lm_other = leading_monomial(other, order)
            if monomial_divides(lm_other, lm_g) and (lm_other != lm_g or other_index < index):
                redundant = True
                break
        if not redundant:
            kept.append(g)
    return kept


def local_standard_basis(gens: Sequence[Polynomial], limit: Optional[int] = None) -> StandardBasis:
    """Standard basis for negdegrevlex: Buchberger's loop around Mora's normal form."""
    order = MonomialOrder.NEGDEGREVLEX_LOCAL
    basis = [monic(g, order) for g in gens if g]
    if not basis:
        raise InputError("Cannot compute a basis of the zero ideal")
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        pair = _select_pair(pairs, basis, order)
        pairs.remove(pair)
        f, g = basis[pair[0]], basis[pair[1]]
        if _coprime(leading_monomial(f, order), leading_monomial(g, order)):
            continue
        remainder = mora_normal_form(s_polynomial(f, g, order), basis, order, limit)
        if remainder:
            basis.append(monic(remainder, order))
            new_index = len(basis) - 1
            pairs.extend((k, new_index) for k in range(new_index))
            logger.debug("S-pair %s added generator with leading monomial %s", pair,
                         leading_monomial(basis[-1], order))
    return StandardBasis(generators=_minimalize(basis, order), order=order)


def staircase_dimension(b: StandardBasis) -> Optional[int]:
    """Number of standard monomials; ``None`` when the staircase is infinite."""
    leading = b.leading_monomials()
    n = len(leading[0]) if leading else 0
    bounds = []
    for i in range(n):
        powers = [m[i] for m in leading if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not powers:
            return None
        bounds.append(min(powers))
    count = 0
    for monomial in product(*[range(bound) for bound in bounds]):
        if not any(monomial_divides(lm, monomial) for lm in leading):
            count += 1
    return count


def _check_singular_germ(germ: Polynomial):
    if not germ:
        raise NonIsolatedSingularityError("The zero germ is singular everywhere")
    if constant_term(germ) != QQ.zero:
        raise NotSingularGermError("Germ does not vanish at the origin; the point is not on the hypersurface")
    if not linear_part_vanishes(germ):
        raise SmoothGermError("Germ has a nonzero linear part; the point is smooth")


def milnor_number(germ: Polynomial, limit: Optional[int] = None) -> int:
    """dim O/J_g computed on the local standard basis of the partials."""
    _check_singular_germ(germ)
    basis = local_standard_basis(partials(germ), limit)
    mu = staircase_dimension(basis)
    if mu is None:
        raise NonIsolatedSingularityError("non-isolated singularity: the local Milnor algebra is infinite")
    logger.info("Milnor number %d from %d standard-basis generators", mu, len(basis.generators))
    return mu


def global_milnor_number(germ: Polynomial) -> Optional[int]:
    """Total Milnor number over all affine critical points (global Gröbner basis)."""
    _check_singular_germ(germ)
    return staircase_dimension(buchberger(partials(germ)))


def is_node(germ: Polynomial, n_vars: Optional[int] = None) -> bool:
    _check_singular_germ(germ)
    n = germ.ring.ngens if n_vars is None else n_vars
    if n != germ.ring.ngens:
        raise InputError(f"Germ has {germ.ring.ngens} variables, expected {n}")
    return hessian_rank_at_origin(germ) == n
