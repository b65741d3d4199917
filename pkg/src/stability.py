"""The stability pipeline.

A :class:`HypersurfaceProfile` lists the singular points of V with whatever
local data the user has (a germ, a rational point on V(f), weights, or the
raw invariants). :func:`resolve_profile` fills in mu, rk(T-1) and branch
counts from the engines; the remaining functions turn the resolved profile
into Betti numbers of the intersection space IV, stability verdicts, the
middle-degree bounds and the Euler characteristic identities.
"""
import logging
from functools import reduce
from math import gcd
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, NonNegativeInt, ValidationError

from src.errors import InconsistentDataError, InputError, InsufficientDataError, RangeError
from src.local_algebra import is_node, milnor_number
from src.monodromy import Provenance, node_rule, weighted_homogeneous_report
from src.polynomial import (
    Polynomial,
    ProjectivePoint,
    format_polynomial,
    homogeneous_degree,
    is_singular_point,
    localize_at,
    parse,
    weighted_degree,
)
from src.topology import (
    BettiVector,
    LinkComponent,
    LinkProfile,
    euler_characteristic,
    link_betti,
    singular_fiber_betti,
    smooth_hypersurface_betti,
    specialization_sequence_defect,
    truncated_link_euler,
    wang_sequence_defect,
)


logger = logging.getLogger(__name__)


class SingularityData(BaseModel):
    label: str = Field(description="Name of the singular point or orbit")
    germ: Optional[str] = Field(default=None, description="Local equation in n+1 variables, singular at 0")
    point: Optional[List[str]] = Field(default=None, description="Rational homogeneous coordinates on V(f)")
    weights: Optional[List[int]] = Field(default=None, description="Weights of a weighted-homogeneous germ")
    weighted_degree: Optional[int] = Field(default=None, description="Weighted degree matching weights")
    mu: Optional[NonNegativeInt] = None
    rank_T_minus_1: Optional[NonNegativeInt] = None
    branches: Optional[int] = Field(default=None, ge=1, description="Number of local branches (curves)")
    count: int = Field(default=1, ge=1, description="Identical copies of this singularity")
    provenance: Dict[str, str] = Field(default_factory=dict)

    def is_resolved(self, n: int) -> bool:
        if self.mu is None or self.rank_T_minus_1 is None or "mu" not in self.provenance:
            return False
        return n != 1 or self.branches is not None


class HypersurfaceProfile(BaseModel):
    n: int = Field(ge=1, description="Complex dimension of V")
    d: int = Field(ge=1, description="Degree of the defining polynomial")
    polynomial: Optional[str] = None
    variables: Optional[List[str]] = Field(default=None, description="Declared variable order of the polynomial")
    singularities: List[SingularityData] = Field(default_factory=list)
    rho: Optional[NonNegativeInt] = Field(default=None, description="rk(H_n(L) -> H_n(M))")
    ih_ranks: Optional[List[NonNegativeInt]] = None
    singular_ranks: Optional[List[NonNegativeInt]] = Field(default=None, description="Betti numbers of V itself")
    assume_trivial_monodromy: bool = False

    @property
    def point_count(self) -> int:
        return sum(s.count for s in self.singularities)

    def is_resolved(self) -> bool:
        return all(s.is_resolved(self.n) for s in self.singularities)


class MiddleBounds(BaseModel):
    lower: int
    upper: Optional[int] = Field(default=None, description="b_n(V_s), when HI_n injects into it")
    components: Dict[str, int] = Field(default_factory=dict)
    skipped: List[str] = Field(default_factory=list)


class EulerIdentity(BaseModel):
    lhs: int
    rhs: int
    holds: bool


class StabilityVerdict(BaseModel):
    flags: Dict[int, bool] = Field(description="degree -> b_i(IV) == b_i(V_s)")
    trivial_monodromy: bool
    stable: bool


class StabilityReport(BaseModel):
    n: int
    d: int
    smooth: BettiVector
    intersection_space: BettiVector
    singular: Optional[BettiVector] = None
    link_b0: int
    link_bn: int
    link_truncated_euler: int
    mu_total: int
    rank_T_minus_1_total: int
    singular_point_count: int
    rho: int
    verdict: StabilityVerdict
    middle_bounds: MiddleBounds
    middle_expressions: List[int]
    euler_identity: Optional[EulerIdentity] = None
    intersection_euler_identity: Optional[EulerIdentity] = None
    checks: Dict[str, bool] = Field(default_factory=dict)
    singularities: List[SingularityData] = Field(default_factory=list)
    provenance: Dict[str, str] = Field(default_factory=dict)
    trace: List[str] = Field(default_factory=list)


def _note(trace: Optional[List[str]], message: str):
    logger.debug(message)
    if trace is not None:
        trace.append(message)


def _profile_polynomial(profile: HypersurfaceProfile) -> Optional[Polynomial]:
    if profile.polynomial is None:
        return None
    f = parse(profile.polynomial, profile.variables)
    if f.ring.ngens != profile.n + 2:
        raise InconsistentDataError(
            f"Polynomial has {f.ring.ngens} variables, a hypersurface of dimension {profile.n} needs {profile.n + 2}"
        )
    degree = homogeneous_degree(f)
    if degree != profile.d:
        raise InconsistentDataError(f"Polynomial is not homogeneous of degree {profile.d}")
    return f


def _point_germ(s: SingularityData, polynomial: Optional[Polynomial]) -> Polynomial:
    if polynomial is None:
        raise InsufficientDataError(f"Singularity {s.label} gives a point but the profile has no polynomial")
    try:
        point = ProjectivePoint(coordinates=s.point)
    except ValidationError as exc:
        raise InputError(f"Invalid point for {s.label}: {exc.errors()[0]['msg']}") from exc
    if not is_singular_point(polynomial, point):
        raise InconsistentDataError(f"{point} is not a singular point of V(f)")
    return localize_at(polynomial, point)


def _local_germ(s: SingularityData, n: int, polynomial: Optional[Polynomial]) -> Optional[Polynomial]:
    if s.germ is not None:
        germ = parse(s.germ)
    elif s.point is not None:
        germ = _point_germ(s, polynomial)
    else:
        return None
    if germ.ring.ngens != n + 1:
        raise InconsistentDataError(
            f"Germ of {s.label} has {germ.ring.ngens} variables, expected {n + 1}"
        )
    return germ


def _detect_weights(germ: Polynomial) -> Optional[Tuple[List[int], int]]:
    """Weights for homogeneous and Brieskorn-Pham germs, else ``None``."""
    degree = homogeneous_degree(germ)
    if degree is not None:
        return [1] * germ.ring.ngens, degree
    exponents = {}
    for monomial in germ.keys():
        support = [i for i, e in enumerate(monomial) if e]
        if len(support) != 1 or support[0] in exponents:
            return None
        exponents[support[0]] = monomial[support[0]]
    if len(exponents) != germ.ring.ngens:
        return None
    values = [exponents[i] for i in range(germ.ring.ngens)]
    lcm = reduce(lambda a, b: a * b // gcd(a, b), values)
    return [lcm // a for a in values], lcm


def resolve_singularity(
    s: SingularityData,
    n: int,
    polynomial: Optional[Polynomial] = None,
    assume_trivial_monodromy: bool = False,
    limit: Optional[int] = None,
    trace: Optional[List[str]] = None,
) -> SingularityData:
    """Fill in mu, rk(T-1) and (for curves) the branch count of ``s``.

    Engine values win over supplied values; a supplied value that disagrees
    with an engine is an error.
    """
    provenance = dict(s.provenance)
    germ = _local_germ(s, n, polynomial)

    mu, mu_source = None, None
    if germ is not None:
        mu, mu_source = milnor_number(germ, limit), Provenance.GROEBNER
        _note(trace, f"{s.label}: mu={mu} from the local standard basis of J({format_polynomial(germ)})")
        if s.germ is not None and s.point is not None:
            at_point = milnor_number(_point_germ(s, polynomial), limit)
            if at_point != mu:
                raise InconsistentDataError(f"{s.label}: the germ has mu={mu} but the point gives mu={at_point}")
            _note(trace, f"{s.label}: germ and point agree on mu={mu}")

    weights, degree = s.weights, s.weighted_degree
    if (weights is None) != (degree is None):
        raise InsufficientDataError(f"Singularity {s.label} needs both weights and weighted_degree")
    if weights is not None:
        if len(weights) != n + 1:
            raise InconsistentDataError(f"{s.label}: expected {n + 1} weights, got {len(weights)}")
        if germ is not None and weighted_degree(germ, weights) != degree:
            raise InconsistentDataError(f"{s.label}: germ is not weighted homogeneous of degree {degree}")
    elif germ is not None:
        detected = _detect_weights(germ)
        if detected is not None:
            weights, degree = detected
            _note(trace, f"{s.label}: germ is weighted homogeneous with weights {weights}, degree {degree}")

    weighted = weighted_homogeneous_report(weights, degree) if weights is not None else None
    if weighted is not None:
        if mu is None:
            mu, mu_source = weighted.mu, Provenance.MILNOR_ORLIK
            _note(trace, f"{s.label}: mu={mu} from the weighted-homogeneous product formula")
        elif weighted.mu != mu:
            raise InconsistentDataError(f"{s.label}: weights give mu={weighted.mu}, standard basis gives {mu}")

    if mu is None:
        if s.mu is None:
            raise InsufficientDataError(
                f"insufficient singularity data for {s.label}: give a germ, a point, weights or mu"
            )
        mu, mu_source = s.mu, Provenance.USER
    elif s.mu is not None and s.mu != mu:
        raise InconsistentDataError(f"{s.label}: supplied mu={s.mu} but computed mu={mu}")
    if mu < 1:
        raise RangeError(f"{s.label}: a singular point has mu >= 1, got {mu}")

    rank, rank_source = None, None
    node = is_node(germ) if germ is not None else mu == 1
    if node:
        rank, rank_source = node_rule(n + 1).rank_T_minus_1, Provenance.NODE_RULE
        _note(trace, f"{s.label}: node in {n + 1} variables, eigenvalue (-1)^{n + 1}, rk(T-1)={rank}")
    elif weighted is not None:
        rank, rank_source = weighted.rank_T_minus_1, Provenance.MILNOR_ORLIK
        _note(trace, f"{s.label}: rk(T-1)={rank} from the Milnor-Orlik divisor")

    if rank is not None:
        if s.rank_T_minus_1 is not None and s.rank_T_minus_1 != rank:
            raise InconsistentDataError(f"{s.label}: supplied rk(T-1)={s.rank_T_minus_1} but computed {rank}")
    elif assume_trivial_monodromy:
        if s.rank_T_minus_1:
            logger.warning("%s: overriding supplied rk(T-1)=%d with 0", s.label, s.rank_T_minus_1)
        rank, rank_source = 0, Provenance.USER_OVERRIDE
        logger.warning("%s: monodromy assumed trivial by user override", s.label)
    elif s.rank_T_minus_1 is not None:
        rank, rank_source = s.rank_T_minus_1, Provenance.USER
    else:
        raise InsufficientDataError(
            f"insufficient singularity data for {s.label}: rk(T-1) is not computable, supply rank_T_minus_1"
        )
    if rank > mu:
        raise RangeError(f"{s.label}: rk(T-1)={rank} exceeds mu={mu}")

    branches = s.branches
    if n == 1:
        expected = 1 + mu - rank
        if branches is not None and branches != expected:
            raise InconsistentDataError(f"{s.label}: {branches} branches but 1 + mu - rk(T-1) = {expected}")
        provenance["branches"] = Provenance.USER.value if branches is not None else Provenance.FORMULA.value
        branches = expected
    elif branches is not None and branches != 1:
        raise InconsistentDataError(f"{s.label}: links in dimension {n} are connected, got {branches} branches")

    provenance.update(mu=mu_source.value, rank_T_minus_1=rank_source.value)
    logger.info("Resolved %s: mu=%d (%s), rk(T-1)=%d (%s)", s.label, mu, mu_source.value, rank, rank_source.value)
    return s.model_copy(update={"mu": mu, "rank_T_minus_1": rank, "branches": branches, "provenance": provenance})


def resolve_profile(
    profile: HypersurfaceProfile, limit: Optional[int] = None, trace: Optional[List[str]] = None
) -> HypersurfaceProfile:
    polynomial = _profile_polynomial(profile)
    if profile.n == 2 and profile.singularities:
        logger.warning("n = 2: intersection spaces of surfaces need an ad hoc truncation; using the rank formulas")
    resolved = []
    for s in profile.singularities:
        if s.is_resolved(profile.n):
            resolved.append(s)
            continue
        resolved.append(
            resolve_singularity(s, profile.n, polynomial, profile.assume_trivial_monodromy, limit, trace)
        )
    return profile.model_copy(update={"singularities": resolved})


def _ensure_resolved(profile: HypersurfaceProfile) -> HypersurfaceProfile:
    if profile.is_resolved():
        return profile
    return resolve_profile(profile)


def _totals(profile: HypersurfaceProfile) -> Tuple[int, int]:
    mu = sum(s.count * s.mu for s in profile.singularities)
    rank = sum(s.count * s.rank_T_minus_1 for s in profile.singularities)
    return mu, rank


def link_profile(profile: HypersurfaceProfile) -> LinkProfile:
    profile = _ensure_resolved(profile)
    components = [
        LinkComponent(
            label=s.label,
            betti=link_betti(s.mu, s.rank_T_minus_1, profile.n, s.branches if profile.n == 1 else None),
            count=s.count,
        )
        for s in profile.singularities
    ]
    return LinkProfile(n=profile.n, components=components)


def hi_betti(profile: HypersurfaceProfile) -> BettiVector:
    """Betti numbers of the middle-perversity intersection space IV."""
    profile = _ensure_resolved(profile)
    n = profile.n
    smooth = smooth_hypersurface_betti(n, profile.d)
    if not profile.singularities:
        return smooth
    links = link_profile(profile)
    mu, rank = _totals(profile)
    if n == 1:
        r = profile.point_count
        b1 = smooth[1] + links.total(1) - mu + r - 2
        ranks = [1, b1, 0]
    else:
        ranks = list(smooth.ranks)
        ranks[0] = 1
        ranks[1] = ranks[2 * n - 1] = smooth[1] + links.total(0) - 1
        ranks[n] = smooth[n] + links.total(n) - mu
        ranks[2 * n] = 0
    if any(b < 0 for b in ranks):
        raise RangeError(f"Singularity data is not realizable: rk(T-1) total {rank} gives ranks {ranks}")
    return BettiVector(ranks=ranks)


def middle_rank_expressions(profile: HypersurfaceProfile) -> Tuple[int, int]:
    """The two closed expressions for b_n(IV), via rk(T-1) and via the link."""
    profile = _ensure_resolved(profile)
    n = profile.n
    smooth = smooth_hypersurface_betti(n, profile.d)
    if not profile.singularities:
        return smooth[n], smooth[n]
    links = link_profile(profile)
    mu, rank = _totals(profile)
    if n == 1:
        r = profile.point_count
        return smooth[1] - rank + 2 * (r - 1), smooth[1] + links.total(1) - mu + r - 2
    return smooth[n] - rank, smooth[n] + links.total(n) - mu


def reduced_duality_holds(hi: BettiVector, n: int) -> bool:
    reduced = hi.reduced()
    top = 2 * n
    return all(
        (reduced[i] if i < len(reduced) else 0) == (reduced[top - i] if top - i < len(reduced) else 0)
        for i in range(top + 1)
    )


def stability_verdict(profile: HypersurfaceProfile) -> StabilityVerdict:
    profile = _ensure_resolved(profile)
    n = profile.n
    smooth = smooth_hypersurface_betti(n, profile.d)
    hi = hi_betti(profile)
    flags = {i: hi[i] == smooth[i] for i in range(1, 2 * n)}
    _, rank = _totals(profile)
    if n == 1 and profile.singularities:
        stable = rank == 2 * (profile.point_count - 1)
    else:
        stable = rank == 0
    return StabilityVerdict(flags=flags, trivial_monodromy=rank == 0, stable=stable)


def resolve_rho(profile: HypersurfaceProfile) -> Tuple[int, Provenance]:
    """rho from the profile: derived from singular_ranks, supplied, or 0 by default."""
    profile = _ensure_resolved(profile)
    n = profile.n
    if not profile.singularities:
        return 0, Provenance.DERIVED
    if n >= 2 and profile.singular_ranks is not None:
        if len(profile.singular_ranks) != 2 * n + 1:
            raise InputError(f"singular_ranks needs {2 * n + 1} entries, got {len(profile.singular_ranks)}")
        hi = hi_betti(profile)
        rho = hi[n] - profile.singular_ranks[n]
        if rho < 0:
            raise InconsistentDataError(f"b_n(V)={profile.singular_ranks[n]} exceeds b_n(IV)={hi[n]}")
        if profile.rho is not None and profile.rho != rho:
            raise InconsistentDataError(f"Supplied rho={profile.rho} but singular_ranks give rho={rho}")
        mu, rank = _totals(profile)
        expected = singular_fiber_betti(smooth_hypersurface_betti(n, profile.d), mu, rank, rho, n)
        if expected.ranks != list(profile.singular_ranks):
            raise InconsistentDataError(
                f"singular_ranks {profile.singular_ranks} disagree with the specialization sequence {expected}"
            )
        return rho, Provenance.DERIVED
    if profile.rho is not None:
        return profile.rho, Provenance.USER
    if n >= 2:
        logger.warning("rho not supplied; using 0")
    return 0, Provenance.DEFAULT


def singular_betti(profile: HypersurfaceProfile) -> Optional[BettiVector]:
    """Betti numbers of V for n >= 2, ``None`` for curves."""
    profile = _ensure_resolved(profile)
    if profile.n < 2:
        return None
    smooth = smooth_hypersurface_betti(profile.n, profile.d)
    if not profile.singularities:
        return smooth
    rho, _ = resolve_rho(profile)
    mu, rank = _totals(profile)
    return singular_fiber_betti(smooth, mu, rank, rho, profile.n)


def middle_bounds(profile: HypersurfaceProfile) -> MiddleBounds:
    """max(IH_n, H_n(M), H_n(M, dM)) <= HI_n <= H_n(V_s), from what is available."""
    profile = _ensure_resolved(profile)
    n = profile.n
    smooth = smooth_hypersurface_betti(n, profile.d)
    components, skipped = {}, []
    if profile.ih_ranks is not None:
        components["IH_n"] = profile.ih_ranks[n] if n < len(profile.ih_ranks) else 0
    else:
        skipped.append("IH_n: no ih_ranks supplied")
    if not profile.singularities:
        components["H_n(M)"] = components["H_n(M,dM)"] = smooth[n]
    elif n < 2:
        skipped.append("H_n(M), H_n(M,dM): not tracked for curves")
    else:
        _, source = resolve_rho(profile)
        if source is Provenance.DEFAULT:
            skipped.append("H_n(M), H_n(M,dM): rho unknown")
        else:
            components["H_n(M)"] = components["H_n(M,dM)"] = singular_betti(profile)[n]
    lower = max(components.values(), default=0)
    upper = smooth[n]
    if n == 1 and profile.point_count > 1:
        skipped.append("upper: HI_1 -> H_1(V_s) is only injective for a single singular point")
        upper = None
    return MiddleBounds(lower=lower, upper=upper, components=components, skipped=skipped)


def _check_ih(profile: HypersurfaceProfile) -> List[int]:
    if profile.ih_ranks is None:
        raise InsufficientDataError("The Euler identity needs ih_ranks")
    if len(profile.ih_ranks) != 2 * profile.n + 1:
        raise InputError(f"ih_ranks needs {2 * profile.n + 1} entries, got {len(profile.ih_ranks)}")
    return list(profile.ih_ranks)


def euler_identity(profile: HypersurfaceProfile) -> EulerIdentity:
    """chi(reduced HI) - chi(IH) against -2 times the truncated link Euler characteristic."""
    profile = _ensure_resolved(profile)
    ih = _check_ih(profile)
    hi = hi_betti(profile)
    lhs = euler_characteristic(hi.reduced()) - euler_characteristic(ih)
    rhs = -2 * truncated_link_euler(link_profile(profile))
    return EulerIdentity(lhs=lhs, rhs=rhs, holds=lhs == rhs)


def intersection_euler_identity(profile: HypersurfaceProfile) -> EulerIdentity:
    """chi(V) - chi(IH) against the middle link ranks."""
    profile = _ensure_resolved(profile)
    ih = _check_ih(profile)
    if profile.singular_ranks is None:
        raise InsufficientDataError("The intersection homology Euler identity needs singular_ranks")
    n = profile.n
    links = link_profile(profile)
    lhs = euler_characteristic(profile.singular_ranks) - euler_characteristic(ih)
    if n == 1:
        rhs = profile.point_count - links.total(1)
    else:
        rhs = (-1) ** n * links.total(n)
    return EulerIdentity(lhs=lhs, rhs=rhs, holds=lhs == rhs)


def _joined(sources) -> str:
    return "+".join(sorted(set(sources))) or Provenance.FORMULA.value


def analyze(profile: HypersurfaceProfile, limit: Optional[int] = None) -> StabilityReport:
    """Run the whole pipeline and assemble the report."""
    trace: List[str] = []
    profile = resolve_profile(profile, limit, trace)
    n = profile.n
    smooth = smooth_hypersurface_betti(n, profile.d)
    _note(trace, f"b(V_s) = {smooth} from the Euler characteristic of a degree-{profile.d} hypersurface")
    hi = hi_betti(profile)
    _note(trace, f"b(IV) = {hi} from the rank formulas for intersection spaces")
    links = link_profile(profile)
    mu, rank = _totals(profile)
    rho, rho_source = resolve_rho(profile)
    _note(trace, f"rho = {rho} ({rho_source.value})")
    singular = singular_betti(profile)
    if singular is not None:
        _note(trace, f"b(V) = {singular} from the specialization sequence")
    verdict = stability_verdict(profile)
    bounds = middle_bounds(profile)
    expressions = list(middle_rank_expressions(profile))

    euler = intersection_euler = None
    if profile.ih_ranks is not None:
        euler = euler_identity(profile)
        _note(trace, f"chi(reduced HI) - chi(IH) = {euler.lhs}, -2 chi_<n(L) = {euler.rhs}")
        if profile.singular_ranks is not None:
            intersection_euler = intersection_euler_identity(profile)

    wang_exact = all(
        wang_sequence_defect(component.betti, s.mu, s.rank_T_minus_1, n) == (0, 0)
        for component, s in zip(links.components, profile.singularities)
    )
    checks = {
        "reduced_duality": reduced_duality_holds(hi, n) if profile.singularities else hi.ranks == hi.ranks[::-1],
        "middle_expressions_agree": expressions[0] == expressions[1],
        "bounds_hold": bounds.lower <= hi[n] and (bounds.upper is None or hi[n] <= bounds.upper),
        "wang_exact": wang_exact,
    }
    if singular is not None:
        checks["specialization_exact"] = specialization_sequence_defect(smooth, singular, mu, n) == 0
    for name, passed in checks.items():
        if not passed:
            logger.warning("Consistency check %s failed", name)

    provenance = {
        "smooth": Provenance.FORMULA.value,
        "intersection_space": Provenance.FORMULA.value,
        "mu_total": _joined(s.provenance["mu"] for s in profile.singularities),
        "rank_T_minus_1_total": _joined(s.provenance["rank_T_minus_1"] for s in profile.singularities),
        "rho": rho_source.value,
        "n": Provenance.USER.value,
        "d": Provenance.USER.value,
        "singular_point_count": Provenance.USER.value,
        "link_b0": Provenance.FORMULA.value,
        "link_bn": Provenance.FORMULA.value,
        "link_truncated_euler": Provenance.FORMULA.value,
        "middle_expressions": Provenance.FORMULA.value,
    }
    bound_sources = [Provenance.FORMULA.value]
    if "IH_n" in bounds.components:
        bound_sources.append(Provenance.USER.value)
    if profile.singularities and "H_n(M)" in bounds.components:
        bound_sources.append(rho_source.value)
    provenance["middle_bounds"] = _joined(bound_sources)
    if singular is not None:
        provenance["singular"] = Provenance.FORMULA.value if rho_source is not Provenance.DEFAULT else Provenance.DEFAULT.value
    if profile.ih_ranks is not None:
        provenance["ih_ranks"] = Provenance.USER.value
    if euler is not None:
        provenance["euler_identity"] = _joined([Provenance.FORMULA.value, Provenance.USER.value])
    if intersection_euler is not None:
        provenance["intersection_euler_identity"] = _joined([Provenance.FORMULA.value, Provenance.USER.value])

    return StabilityReport(
        n=n,
        d=profile.d,
        smooth=smooth,
        intersection_space=hi,
        singular=singular,
        link_b0=links.total(0),
        link_bn=links.total(n),
        link_truncated_euler=truncated_link_euler(links),
        mu_total=mu,
        rank_T_minus_1_total=rank,
        singular_point_count=profile.point_count,
        rho=rho,
        verdict=verdict,
        middle_bounds=bounds,
        middle_expressions=expressions,
        euler_identity=euler,
        intersection_euler_identity=intersection_euler,
        checks=checks,
        singularities=profile.singularities,
        provenance=provenance,
        trace=trace,
    )
