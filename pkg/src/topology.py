"""Betti numbers of the smooth deformation V_s, the Milnor fiber, the links and
the singular fiber V, all from closed formulas and exact-sequence bookkeeping.
"""
import logging
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, NonNegativeInt, model_validator

from src.errors import InconsistentDataError, InputError, RangeError


logger = logging.getLogger(__name__)


class BettiVector(BaseModel):
    ranks: List[NonNegativeInt] = Field(default_factory=list, description="b_0, b_1, ... up to the top degree")

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.ranks):
            return self.ranks[degree]
        return 0

    def __len__(self):
        return len(self.ranks)

    def reduced(self) -> List[int]:
        if not self.ranks:
            return []
        return [max(self.ranks[0] - 1, 0)] + list(self.ranks[1:])

    def __str__(self):
        return "(" + ", ".join(str(r) for r in self.ranks) + ")"


class LinkComponent(BaseModel):
    label: str
    betti: BettiVector
    count: int = Field(default=1, ge=1)


class LinkProfile(BaseModel):
    """Links L_x of all singular points; ``count`` copies of each entry."""

    n: int = Field(ge=1)
    components: List[LinkComponent] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check(self):
        for component in self.components:
            ranks = component.betti.ranks
            if len(ranks) != 2 * self.n:
                raise ValueError(f"Link {component.label} needs {2 * self.n} Betti numbers, got {len(ranks)}")
            if ranks != ranks[::-1]:
                raise ValueError(f"Link {component.label} violates Poincaré duality: {ranks}")
            if self.n >= 2 and ranks[0] != 1:
                raise ValueError(f"Link {component.label} of a surface or higher must be connected")
        return self

    def total(self, degree: int) -> int:
        return sum(component.count * component.betti[degree] for component in self.components)


def euler_characteristic(betti: Union[BettiVector, Sequence[int]]) -> int:
    ranks = betti.ranks if isinstance(betti, BettiVector) else betti
    return sum((-1) ** i * b for i, b in enumerate(ranks))


def smooth_hypersurface_betti(n: int, d: int) -> BettiVector:
    """Betti numbers of a smooth degree-d hypersurface in P^{n+1}."""
    if n < 1 or d < 1:
        raise InputError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    chi = (n + 2) + ((1 - d) ** (n + 2) - 1) // d
    ranks = [1 if i % 2 == 0 else 0 for i in range(2 * n + 1)]
    ranks[n] = chi - n if n % 2 == 0 else (n + 1) - chi
    logger.debug("Smooth hypersurface n=%d d=%d: chi=%d, b_n=%d", n, d, chi, ranks[n])
    return BettiVector(ranks=ranks)


def milnor_fiber_betti(mu: int, n: int) -> BettiVector:
    if mu < 0:
        raise RangeError(f"Milnor number must be non-negative, got {mu}")
    ranks = [0] * (2 * n + 1)
    ranks[0] = 1
    ranks[n] += mu
    return BettiVector(ranks=ranks)


def link_betti(mu: int, rkT1: int, n: int, branches: Optional[int] = None) -> BettiVector:
    """Betti numbers of the link of one isolated singularity.

    For n >= 2 the link is (n-2)-connected and the Wang sequence gives
    b_{n-1} = b_n = mu - rk(T-1). For curves b_0 = b_1 = 1 + mu - rk(T-1),
    the number of branches.
    """
    if not 0 <= rkT1 <= mu:
        raise RangeError(f"rk(T-1)={rkT1} must lie between 0 and mu={mu}")
    if n == 1:
        components = 1 + mu - rkT1
        if branches is not None and branches != components:
            raise InconsistentDataError(
                f"Branch count {branches} disagrees with 1 + mu - rk(T-1) = {components}"
            )
        return BettiVector(ranks=[components, components])
    ranks = [0] * (2 * n)
    ranks[0] = ranks[2 * n - 1] = 1
    ranks[n - 1] = ranks[n] = mu - rkT1
    return BettiVector(ranks=ranks)


def singular_fiber_betti(smooth: BettiVector, mu_total: int, rkT1_total: int, rho: int, n: int) -> BettiVector:
    """Betti numbers of V from those of V_s through the specialization sequence."""
    if n < 2:
        raise InputError("Singular fiber Betti numbers are only produced for n >= 2")
    if len(smooth) != 2 * n + 1:
        raise InputError(f"Smooth Betti vector needs {2 * n + 1} entries, got {len(smooth)}")
    if rho < 0:
        raise RangeError(f"rho must be non-negative, got {rho}")
    if rho + rkT1_total > mu_total:
        raise RangeError(f"rho + rk(T-1) = {rho + rkT1_total} exceeds the total Milnor number {mu_total}")
    if rho > smooth[n] - rkT1_total:
        raise RangeError(f"rho = {rho} exceeds b_n(V_s) - rk(T-1) = {smooth[n] - rkT1_total}")
    ranks = list(smooth.ranks)
    ranks[n] = smooth[n] - rho - rkT1_total
    ranks[n + 1] = smooth[n + 1] + mu_total - rho - rkT1_total
    return BettiVector(ranks=ranks)


def truncated_link_euler(link: LinkProfile) -> int:
    """Sum over i < n of (-1)^i b_i(L), L the disjoint union of all links."""
    return sum((-1) ** i * link.total(i) for i in range(link.n))


def specialization_euler_defect(smooth: BettiVector, singular: BettiVector, mu_total: int, n: int) -> int:
    """chi(V_s) - chi(V) - (-1)^n mu; zero on consistent data."""
    return euler_characteristic(smooth) - euler_characteristic(singular) - (-1) ** n * mu_total


def specialization_sequence_defect(smooth: BettiVector, singular: BettiVector, mu_total: int, n: int) -> int:
    """Alternating rank sum of 0 -> H_{n+1}V_s -> H_{n+1}V -> H_nF -> H_nV_s -> H_nV -> 0."""
    return smooth[n + 1] - singular[n + 1] + mu_total - smooth[n] + singular[n]


def wang_sequence_defect(link: BettiVector, mu: int, rkT1: int, n: int) -> Tuple[int, int]:
    """Defects of the two short exact pieces of the Wang sequence.

    With F the Milnor fiber and S - L the complement of the link in the
    sphere, ker(T-1) on H_nF is H_{n+1}(S - L) and coker(T-1) injects into
    H_n(S - L) with the H_0F contribution added when n = 1. Alexander
    duality turns both complement ranks into link ranks.
    """
    kernel = mu - rkT1
    shift = 1 if n == 1 else 0
    upper = link[n - 1] - shift
    lower = link[n] - shift
    return upper - kernel, lower - kernel
