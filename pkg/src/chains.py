"""Intersection-space homology straight from boundary matrices.

A pair (M, L) is the exterior of the singular set with its boundary link L.
HI is computed twice: once from the closed formulas read off the long exact
sequences of the pair, once as the homology of the algebraic mapping cone of
t_{<k}(L) -> L -> M. Both use augmented complexes (Q in degree -1) so that
every rank is a reduced rank.
"""
import logging
from dataclasses import dataclass, replace
from typing import List, Sequence, Tuple

from src.errors import MalformedComplexError, RangeError
from src.linalg import (
    QMatrix,
    block_matrix,
    entries,
    hstack,
    identity,
    image_complement_basis,
    is_zero,
    kernel_basis,
    matmul,
    negate,
    qmatrix,
    rank,
    zeros,
)
from src.topology import BettiVector


logger = logging.getLogger(__name__)


def _same(a: QMatrix, b: QMatrix) -> bool:
    return a.shape == b.shape and entries(a) == entries(b)


@dataclass(frozen=True)
class FiniteChainComplex:
    """Chain groups Q^{dims[i]} in degrees ``low``, ``low + 1``, ...

    ``boundaries[i]`` is the differential from degree ``low + i + 1`` down to
    degree ``low + i``.
    """

    dims: Tuple[int, ...]
    boundaries: Tuple[QMatrix, ...]
    low: int = 0

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise MalformedComplexError(f"Negative chain group dimension in {self.dims}")
        expected = max(len(self.dims) - 1, 0)
        if len(self.boundaries) != expected:
            raise MalformedComplexError(f"Expected {expected} boundary matrices, got {len(self.boundaries)}")
        for k in range(self.low + 1, self.top + 1):
            shape = (self.dim(k - 1), self.dim(k))
            if self.boundary(k).shape != shape:
                raise MalformedComplexError(
                    f"Boundary in degree {k} has shape {self.boundary(k).shape}, expected {shape}"
                )
        for k in range(self.low + 2, self.top + 1):
            if not is_zero(matmul(self.boundary(k - 1), self.boundary(k))):
                raise MalformedComplexError(f"Boundary composition in degree {k} is not zero")

    @property
    def top(self) -> int:
        return self.low + len(self.dims) - 1

    def degrees(self) -> range:
        return range(self.low, self.top + 1)

    def dim(self, k: int) -> int:
        if self.low <= k <= self.top:
            return self.dims[k - self.low]
        return 0

    def boundary(self, k: int) -> QMatrix:
        if self.low < k <= self.top:
            return self.boundaries[k - self.low - 1]
        return zeros(self.dim(k - 1), self.dim(k))

    def total_dim(self) -> int:
        return sum(self.dims)


@dataclass(frozen=True)
class ChainMap:
    """``matrices[i]`` maps degree ``source.low + i`` of source into target."""

    source: FiniteChainComplex
    target: FiniteChainComplex
    matrices: Tuple[QMatrix, ...]

    def __post_init__(self):
        if len(self.matrices) != len(self.source.dims):
            raise MalformedComplexError(
                f"Chain map needs {len(self.source.dims)} matrices, got {len(self.matrices)}"
            )
        for k in self.source.degrees():
            shape = (self.target.dim(k), self.source.dim(k))
            if self.matrix(k).shape != shape:
                raise MalformedComplexError(f"Chain map in degree {k} has shape {self.matrix(k).shape}, expected {shape}")
        low = min(self.source.low, self.target.low)
        high = max(self.source.top, self.target.top)
        for k in range(low + 1, high + 1):
            left = matmul(self.target.boundary(k), self.matrix(k))
            right = matmul(self.matrix(k - 1), self.source.boundary(k))
            if not _same(left, right):
                raise MalformedComplexError(f"Map does not commute with the boundaries in degree {k}")

    def matrix(self, k: int) -> QMatrix:
        if self.source.low <= k <= self.source.top:
            return self.matrices[k - self.source.low]
        return zeros(self.target.dim(k), self.source.dim(k))


@dataclass(frozen=True)
class PairComplex:
    link: FiniteChainComplex
    exterior: FiniteChainComplex
    inclusion: ChainMap
    manifold_dim: int
    cutoff: int

    def __post_init__(self):
        if self.inclusion.source is not self.link or self.inclusion.target is not self.exterior:
            raise MalformedComplexError("Inclusion must map the link complex into the exterior complex")
        if not 0 <= self.cutoff <= self.manifold_dim + 1:
            raise RangeError(f"Cutoff {self.cutoff} outside 0..{self.manifold_dim + 1}")
        if self.exterior.top > self.manifold_dim:
            raise MalformedComplexError(f"Exterior has cells above dimension {self.manifold_dim}")
        if self.link.top > self.manifold_dim - 1:
            raise MalformedComplexError(f"Link has cells above dimension {self.manifold_dim - 1}")

    def with_cutoff(self, cutoff: int) -> "PairComplex":
        return replace(self, cutoff=cutoff)


def chain_complex(dims: Sequence[int], boundaries: Sequence[Sequence[Sequence]], low: int = 0) -> FiniteChainComplex:
    """Build a complex from row lists; ``boundaries[i]`` maps degree i+1 to degree i."""
    dims = tuple(dims)
    if len(boundaries) != max(len(dims) - 1, 0):
        raise MalformedComplexError(f"Expected {max(len(dims) - 1, 0)} boundary matrices, got {len(boundaries)}")
    matrices = tuple(
        qmatrix(rows, dims[i], dims[i + 1]) for i, rows in enumerate(boundaries)
    )
    return FiniteChainComplex(dims=dims, boundaries=matrices, low=low)


def chain_map(source: FiniteChainComplex, target: FiniteChainComplex, matrices: Sequence[Sequence[Sequence]]) -> ChainMap:
    if len(matrices) != len(source.dims):
        raise MalformedComplexError(f"Chain map needs {len(source.dims)} matrices, got {len(matrices)}")
    converted = tuple(
        qmatrix(rows, target.dim(k), source.dim(k)) for k, rows in zip(source.degrees(), matrices)
    )
    return ChainMap(source=source, target=target, matrices=converted)


def identity_map(c: FiniteChainComplex) -> ChainMap:
    return ChainMap(source=c, target=c, matrices=tuple(identity(d) for d in c.dims))


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g after f."""
    if f.target is not g.source:
        raise MalformedComplexError("Chain maps are not composable")
    return ChainMap(
        source=f.source,
        target=g.target,
        matrices=tuple(matmul(g.matrix(k), f.matrix(k)) for k in f.source.degrees()),
    )


def homology_rank(c: FiniteChainComplex, k: int) -> int:
    return c.dim(k) - rank(c.boundary(k)) - rank(c.boundary(k + 1))


def homology_ranks(c: FiniteChainComplex) -> BettiVector:
    """Ranks of H_0 .. H_top; for an augmented complex these are reduced ranks."""
    return BettiVector(ranks=[homology_rank(c, k) for k in range(0, c.top + 1)])


def augment(c: FiniteChainComplex) -> FiniteChainComplex:
    """Add Q in degree -1 with the augmentation sending every 0-cell to 1."""
    if c.low != 0:
        raise MalformedComplexError("Only complexes starting in degree 0 can be augmented")
    if not c.dims:
        return FiniteChainComplex(dims=(1,), boundaries=(), low=-1)
    epsilon = qmatrix([[1] * c.dim(0)], 1, c.dim(0))
    if not is_zero(matmul(epsilon, c.boundary(1))):
        raise MalformedComplexError("Degree-1 boundaries do not preserve the augmentation")
    return FiniteChainComplex(dims=(1,) + c.dims, boundaries=(epsilon,) + c.boundaries, low=-1)


def augment_map(f: ChainMap, source: FiniteChainComplex, target: FiniteChainComplex) -> ChainMap:
    """Extend ``f`` by the identity on the augmentation degree."""
    matrices = (identity(1),) + f.matrices
    try:
        return ChainMap(source=source, target=target, matrices=matrices)
    except MalformedComplexError as exc:
        raise MalformedComplexError(f"Inclusion does not preserve the augmentation: {exc}") from exc


def mapping_cone(f: ChainMap) -> FiniteChainComplex:
    """Cone_k = A_{k-1} + B_k with d(a, b) = (-d a, f(a) + d b)."""
    a, b = f.source, f.target
    low = min(a.low + 1, b.low)
    top = max(a.top + 1, b.top)
    dims = tuple(a.dim(k - 1) + b.dim(k) for k in range(low, top + 1))
    boundaries = []
    for k in range(low + 1, top + 1):
        boundaries.append(block_matrix([
            [negate(a.boundary(k - 1)), zeros(a.dim(k - 2), b.dim(k))],
            [f.matrix(k - 1), b.boundary(k)],
        ]))
    return FiniteChainComplex(dims=dims, boundaries=tuple(boundaries), low=low)


def induced_map_rank(f: ChainMap, k: int) -> int:
    """Rank of H_k(f): rank [f Z_A | B_B] - rank B_B."""
    cycles = kernel_basis(f.source.boundary(k))
    images = matmul(f.matrix(k), cycles)
    boundaries = f.target.boundary(k + 1)
    return rank(hstack(images, boundaries)) - rank(boundaries)


def chain_truncation(c: FiniteChainComplex, k: int) -> Tuple[FiniteChainComplex, ChainMap]:
    """Spatial homology truncation t_{<k} at chain level.

    Degrees below k are kept, degree k is replaced by a complement Y of the
    cycles (standard vectors at the pivots of the boundary), degrees above k
    are dropped. The truncation has no homology from degree k on and maps
    isomorphically onto the homology of ``c`` below k.
    """
    if k > c.top:
        return c, identity_map(c)
    if k < c.low:
        raise RangeError(f"Cutoff {k} is below the lowest degree {c.low}")
    complement = image_complement_basis(c.boundary(k))
    dims = tuple(c.dim(j) for j in range(c.low, k)) + (complement.shape[1],)
    boundaries = tuple(c.boundary(j) for j in range(c.low + 1, k))
    if k > c.low:
        boundaries += (matmul(c.boundary(k), complement),)
    truncated = FiniteChainComplex(dims=dims, boundaries=boundaries, low=c.low)
    matrices = tuple(identity(c.dim(j)) for j in range(c.low, k)) + (complement,)
    logger.debug("Truncated below degree %d: Y has dimension %d", k, complement.shape[1])
    return truncated, ChainMap(source=truncated, target=c, matrices=matrices)


def _augmented_pair(p: PairComplex) -> Tuple[FiniteChainComplex, FiniteChainComplex, ChainMap]:
    link, exterior = augment(p.link), augment(p.exterior)
    return link, exterior, augment_map(p.inclusion, link, exterior)


def _ranks_through(c: FiniteChainComplex, top: int) -> List[int]:
    return [homology_rank(c, k) for k in range(0, top + 1)]


def relative_homology_ranks(p: PairComplex) -> BettiVector:
    """H_*(M, L) as the homology of the cone of the augmented inclusion."""
    _, _, inclusion = _augmented_pair(p)
    return BettiVector(ranks=_ranks_through(mapping_cone(inclusion), p.manifold_dim))


def hi_from_pair(p: PairComplex) -> BettiVector:
    """Reduced HI from the closed formulas.

    Above the cutoff HI_i is H_i(M), below it H_i(M, L), and in degree k it is
    H_k(M) plus the kernel of H_{k-1}(L) -> H_{k-1}(M), all reduced.
    """
    link, exterior, inclusion = _augmented_pair(p)
    m, k = p.manifold_dim, p.cutoff
    absolute = _ranks_through(exterior, m)
    if p.link.total_dim() == 0:
        return BettiVector(ranks=absolute)
    relative = relative_homology_ranks(p).ranks
    ranks = []
    for i in range(m + 1):
        if i > k:
            ranks.append(absolute[i])
        elif i < k:
            ranks.append(relative[i])
        else:
            kernel = homology_rank(link, k - 1) - induced_map_rank(inclusion, k - 1)
            ranks.append(absolute[i] + kernel)
    return BettiVector(ranks=ranks)


def hi_via_cone(p: PairComplex) -> BettiVector:
    """Reduced homology of the cone on t_{<k}(L) -> L -> M."""
    link, exterior, inclusion = _augmented_pair(p)
    if p.link.total_dim() == 0:
        return BettiVector(ranks=_ranks_through(exterior, p.manifold_dim))
    truncated, truncation = chain_truncation(link, p.cutoff)
    cone = mapping_cone(compose(inclusion, truncation))
    return BettiVector(ranks=_ranks_through(cone, p.manifold_dim))


def augment_ranks(reduced: BettiVector) -> BettiVector:
    """Unreduced ranks for reports: one more in degree 0."""
    ranks = list(reduced.ranks) or [0]
    ranks[0] += 1
    return BettiVector(ranks=ranks)


def duality_rank_check(p: PairComplex) -> bool:
    """Reduced HI with cutoff k against cutoff m - k in the mirrored degree."""
    m = p.manifold_dim
    if not 0 <= m - p.cutoff <= m + 1:
        return False
    first = hi_from_pair(p)
    second = hi_from_pair(p.with_cutoff(m - p.cutoff))
    return all(first[i] == second[m - i] for i in range(m + 1))


def long_exact_sequence_defect(p: PairComplex) -> List[int]:
    """Per-degree exactness defect of ... -> H_i(L) -> H_i(M) -> H_i(M, L) -> H_{i-1}(L) -> ...

    Uses unreduced ranks; every entry is 0 for a valid pair.
    """
    m = p.manifold_dim
    relative = relative_homology_ranks(p)
    link_ranks = _ranks_through(p.link, m)
    exterior_ranks = _ranks_through(p.exterior, m)
    images = [induced_map_rank(p.inclusion, i) for i in range(m + 1)]
    defects = []
    for i in range(m + 1):
        cokernel = exterior_ranks[i] - images[i]
        kernel_below = link_ranks[i - 1] - images[i - 1] if i > 0 else 0
        defects.append(relative[i] - cokernel - kernel_below)
    return defects
