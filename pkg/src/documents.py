"""JSON documents read and written by the command-line front end.

Input documents reject unknown keys. Rationals travel as ``"p/q"`` strings;
plain integers are accepted wherever a rational is expected.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, ValidationError

from src.chains import PairComplex, chain_complex, chain_map
from src.errors import InputError
from src.stability import EulerIdentity, HypersurfaceProfile, MiddleBounds, SingularityData, StabilityReport


logger = logging.getLogger(__name__)

RationalText = Union[int, str]
MatrixRows = List[List[RationalText]]


class SingularityDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: str
    germ: Optional[str] = None
    point: Optional[List[RationalText]] = None
    weights: Optional[List[int]] = None
    weighted_degree: Optional[int] = None
    mu: Optional[NonNegativeInt] = None
    rank_T_minus_1: Optional[NonNegativeInt] = None
    branches: Optional[int] = Field(default=None, ge=1)
    count: int = Field(default=1, ge=1)

    def to_data(self) -> SingularityData:
        values = self.model_dump(exclude={"point"})
        if self.point is not None:
            values["point"] = [str(c) for c in self.point]
        return SingularityData(**values)


class ProfileDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1)
    d: int = Field(ge=1)
    polynomial: Optional[str] = None
    variables: Optional[List[str]] = None
    rho: Optional[NonNegativeInt] = None
    ih_ranks: Optional[List[NonNegativeInt]] = None
    singular_ranks: Optional[List[NonNegativeInt]] = None
    singularities: List[SingularityDocument] = Field(default_factory=list)

    def to_profile(self, rho: Optional[int] = None, assume_trivial_monodromy: bool = False) -> HypersurfaceProfile:
        return HypersurfaceProfile(
            n=self.n,
            d=self.d,
            polynomial=self.polynomial,
            variables=self.variables,
            singularities=[s.to_data() for s in self.singularities],
            rho=rho if rho is not None else self.rho,
            ih_ranks=self.ih_ranks,
            singular_ranks=self.singular_ranks,
            assume_trivial_monodromy=assume_trivial_monodromy,
        )


class ComplexDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dims: List[NonNegativeInt]
    boundaries: List[MatrixRows] = Field(default_factory=list, description="boundaries[i]: degree i+1 -> degree i")


class ChainDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: int = Field(ge=1, description="Dimension m of the exterior manifold")
    cutoff: int = Field(ge=0)
    link: ComplexDocument
    exterior: ComplexDocument
    inclusion: List[MatrixRows] = Field(description="One matrix per link degree, exterior rows by link columns")

    def to_pair(self, cutoff: Optional[int] = None) -> PairComplex:
        link = chain_complex(self.link.dims, self.link.boundaries)
        exterior = chain_complex(self.exterior.dims, self.exterior.boundaries)
        inclusion = chain_map(link, exterior, self.inclusion)
        return PairComplex(
            link=link,
            exterior=exterior,
            inclusion=inclusion,
            manifold_dim=self.dim,
            cutoff=self.cutoff if cutoff is None else cutoff,
        )


class SingularityRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: str
    count: int
    mu: int
    rank_T_minus_1: int
    branches: Optional[int] = None
    provenance: Dict[str, str]


class ReportDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    d: int
    smooth: List[int]
    intersection_space: List[int]
    singular: Optional[List[int]] = None
    link_b0: int
    link_bn: int
    link_truncated_euler: int
    mu_total: int
    rank_T_minus_1_total: int
    singular_point_count: int
    rho: int
    trivial_monodromy: bool
    stable: bool
    stability_flags: Dict[str, bool]
    middle_bounds: MiddleBounds
    middle_expressions: List[int]
    euler_identity: Optional[EulerIdentity] = None
    intersection_euler_identity: Optional[EulerIdentity] = None
    checks: Dict[str, bool]
    singularities: List[SingularityRecord]
    provenance: Dict[str, str]
    trace: Optional[List[str]] = None

    @classmethod
    def from_report(cls, report: StabilityReport, verbose: bool = False) -> "ReportDocument":
        return cls(
            n=report.n,
            d=report.d,
            smooth=report.smooth.ranks,
            intersection_space=report.intersection_space.ranks,
            singular=report.singular.ranks if report.singular is not None else None,
            link_b0=report.link_b0,
            link_bn=report.link_bn,
            link_truncated_euler=report.link_truncated_euler,
            mu_total=report.mu_total,
            rank_T_minus_1_total=report.rank_T_minus_1_total,
            singular_point_count=report.singular_point_count,
            rho=report.rho,
            trivial_monodromy=report.verdict.trivial_monodromy,
            stable=report.verdict.stable,
            stability_flags={str(degree): flag for degree, flag in report.verdict.flags.items()},
            middle_bounds=report.middle_bounds,
            middle_expressions=report.middle_expressions,
            euler_identity=report.euler_identity,
            intersection_euler_identity=report.intersection_euler_identity,
            checks=report.checks,
            singularities=[
                SingularityRecord(
                    label=s.label,
                    count=s.count,
                    mu=s.mu,
                    rank_T_minus_1=s.rank_T_minus_1,
                    branches=s.branches,
                    provenance=s.provenance,
                )
                for s in report.singularities
            ],
            provenance=report.provenance,
            trace=report.trace if verbose else None,
        )


class ChainReportDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    manifold_dim: int
    cutoff: int
    hi_from_pair: List[int]
    hi_via_cone: List[int]
    reduced: List[int]
    routes_agree: bool
    relative_homology: List[int]
    duality: Optional[bool] = None
    provenance: Dict[str, str] = Field(default_factory=dict)


class ErrorDocument(BaseModel):
    error: str
    message: str
    exit_code: int


def _read(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc.strerror}") from exc


def _validate(model, text: str, path):
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise InputError(f"{path}: {location}: {first['msg']}") from exc


def load_profile(path: Union[str, Path]) -> ProfileDocument:
    document = _validate(ProfileDocument, _read(path), path)
    logger.info("Loaded profile %s (n=%d, d=%d, %d singularity entries)", path, document.n, document.d,
                len(document.singularities))
    return document


def load_chain(path: Union[str, Path]) -> ChainDocument:
    document = _validate(ChainDocument, _read(path), path)
    logger.info("Loaded chain pair %s (m=%d, cutoff=%d)", path, document.dim, document.cutoff)
    return document


def dump(document: BaseModel) -> str:
    return json.dumps(document.model_dump(mode="json"), indent=2, sort_keys=False)
