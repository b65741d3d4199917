"""Exact linear algebra over the rationals.

Matrices are sympy ``DomainMatrix`` objects over ``QQ``; every Betti number in
the package is eventually a rank computed here. Helpers guard the empty
shapes (0 x n, n x 0) that chain complexes produce in their end degrees.
"""
import re
import logging
from typing import List, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src.errors import InputError


logger = logging.getLogger(__name__)

Rational = QQ.dtype
QMatrix = DomainMatrix
Scalar = Union[int, str, Rational]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: Scalar) -> Rational:
    """Accept ints, ``QQ`` elements and ``"p"`` / ``"p/q"`` strings."""
    if isinstance(value, bool):
        raise InputError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise InputError(f"Not a rational number: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise InputError(f"Zero denominator in {value!r}")
        return QQ(numerator, denominator)
    try:
        return QQ.convert(value)
    except Exception as exc:
        raise InputError(f"Not a rational number: {value!r}") from exc


def format_rational(value: Rational) -> str:
    numerator, denominator = QQ.numer(value), QQ.denom(value)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def qmatrix(rows: Sequence[Sequence[Scalar]], n_rows: int = None, n_cols: int = None) -> QMatrix:
    """Build a dense rational matrix; explicit sizes allow empty shapes."""
    if n_rows is None:
        n_rows = len(rows)
    if n_cols is None:
        n_cols = len(rows[0]) if rows else 0
    if len(rows) != n_rows:
        raise InputError(f"Expected {n_rows} rows, got {len(rows)}")
    converted = []
    for index, row in enumerate(rows):
        if len(row) != n_cols:
            raise InputError(f"Row {index} has {len(row)} entries, expected {n_cols}")
        converted.append([parse_rational(entry) for entry in row])
    return DomainMatrix(converted, (n_rows, n_cols), QQ)


def zeros(n_rows: int, n_cols: int) -> QMatrix:
    return DomainMatrix([[QQ.zero] * n_cols for _ in range(n_rows)], (n_rows, n_cols), QQ)


def identity(n: int) -> QMatrix:
    return DomainMatrix(
        [[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)], (n, n), QQ
    )


def from_columns(columns: Sequence[Sequence[Rational]], n_rows: int) -> QMatrix:
    rows = [[column[i] for column in columns] for i in range(n_rows)]
    return DomainMatrix(rows, (n_rows, len(columns)), QQ)


def entries(m: QMatrix) -> List[List[Rational]]:
    n_rows, n_cols = m.shape
    if n_rows == 0 or n_cols == 0:
        return [[] for _ in range(n_rows)]
    return m.to_list()


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    if a.shape[1] != b.shape[0]:
        raise InputError(f"Cannot multiply {a.shape} by {b.shape}")
    if 0 in a.shape or 0 in b.shape:
        return zeros(a.shape[0], b.shape[1])
    return a.matmul(b)


def hstack(*blocks: QMatrix) -> QMatrix:
    n_rows = blocks[0].shape[0]
    rows = [[] for _ in range(n_rows)]
    for block in blocks:
        if block.shape[0] != n_rows:
            raise InputError(f"Row mismatch in hstack: {block.shape[0]} != {n_rows}")
        for i, row in enumerate(entries(block)):
            rows[i].extend(row)
    return DomainMatrix(rows, (n_rows, sum(b.shape[1] for b in blocks)), QQ)


def vstack(*blocks: QMatrix) -> QMatrix:
    n_cols = blocks[0].shape[1]
    rows = []
    for block in blocks:
        if block.shape[1] != n_cols:
            raise InputError(f"Column mismatch in vstack: {block.shape[1]} != {n_cols}")
        rows.extend(entries(block))
    return DomainMatrix(rows, (len(rows), n_cols), QQ)


def block_matrix(grid: Sequence[Sequence[QMatrix]]) -> QMatrix:
    return vstack(*[hstack(*row) for row in grid])


def is_zero(m: QMatrix) -> bool:
    return all(entry == QQ.zero for row in entries(m) for entry in row)


def rank(m: QMatrix) -> int:
    if 0 in m.shape:
        return 0
    return m.rank()


def rref(m: QMatrix) -> Tuple[QMatrix, List[int]]:
    """Reduced row echelon form with pivots in increasing column order."""
    if 0 in m.shape:
        return m, []
    reduced, pivots = m.rref()
    return reduced, sorted(pivots)


def nullity(m: QMatrix) -> int:
    return m.shape[1] - rank(m)


def kernel_basis(m: QMatrix) -> QMatrix:
    """Columns form a basis of ker(m), one column per non-pivot column."""
    n_cols = m.shape[1]
    if m.shape[0] == 0:
        return identity(n_cols)
    reduced, pivots = rref(m)
    rows = entries(reduced)
    free = [j for j in range(n_cols) if j not in pivots]
    columns = []
    for f in free:
        vector = [QQ.zero] * n_cols
        vector[f] = QQ.one
        for row_index, p in enumerate(pivots):
            vector[p] = -rows[row_index][f]
        columns.append(vector)
    return from_columns(columns, n_cols)


def image_complement_basis(m: QMatrix) -> QMatrix:
    """Standard basis vectors at the pivot columns of rref(m).

    Their span meets ker(m) only in 0 and has dimension rank(m), so it is a
    complement of the kernel in the domain.
    """
    n_cols = m.shape[1]
    _, pivots = rref(m)
    columns = []
    for p in pivots:
        vector = [QQ.zero] * n_cols
        vector[p] = QQ.one
        columns.append(vector)
    return from_columns(columns, n_cols)


def negate(m: QMatrix) -> QMatrix:
    rows = [[-value for value in row] for row in entries(m)]
    return DomainMatrix(rows, m.shape, QQ)


def format_matrix(m: QMatrix) -> List[List[str]]:
    return [[format_rational(value) for value in row] for row in entries(m)]
