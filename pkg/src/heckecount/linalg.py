"""Exact dense linear algebra over the package's coefficient domains.

Small matrices (character tables, class-polynomial systems) use plain
object arithmetic; the high-volume finite-field kernels live in ffmat.py.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloNum
from .ff import FFElem
from .laurent import LaurentPoly, RatFunc


def rank_field(rows: list[list]) -> int:
    """Rank by Gaussian elimination; entries must support /, -, * and bool."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = _invert(prow[col])
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                f = f * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        rank += 1
        col += 1
    return rank


def _invert(x):
    if hasattr(x, "inverse"):
        return x.inverse()
    return 1 / x


def solve_field(matrix: list[list], rhs: list[list]) -> list[list]:
    """Solve A X = B over a field; A square invertible. Columns of B/X."""
    n = len(matrix)
    ncols = len(rhs[0])
    aug = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ValueError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = _invert(aug[col][col])
        aug[col] = [inv * a for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def rank_bareiss(rows: list[list[LaurentPoly]]) -> int:
    """Fraction-free rank for Laurent-polynomial matrices (Bareiss)."""
    rows = [[e if isinstance(e, LaurentPoly) else e.as_poly() for e in r] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    prev = LaurentPoly.one()
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            r = rows[i]
            rows[i] = [
                (p * r[j] - r[col] * rows[rank][j]).exact_div(prev)
                for j in range(ncols)
            ]
        prev = p
        rank += 1
        col += 1
    return rank


def mat_mul(a: list[list], b: list[list], zero) -> list[list]:
    """Plain object-level matrix product; ``zero`` is the additive identity."""
    ncols = len(b[0])
    out = []
    for row in a:
        orow = []
        for j in range(ncols):
            s = zero
            for k, x in enumerate(row):
                if x:
                    s = s + x * b[k][j]
            orow.append(s)
        out.append(orow)
    return out


def mat_eye(n: int, zero, one) -> list[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


class ExactMatrix:
    """A rectangular matrix over one exact domain, with rank and JSON dump."""

    def __init__(self, rows: list[list]):
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        kinds = {type(e) for row in rows for e in row}
        allowed = {FFElem, CycloNum, LaurentPoly, RatFunc, Fraction}
        if not kinds <= allowed:
            raise ValueError(f"unsupported entry types: {kinds - allowed}")
        if kinds & {FFElem, CycloNum} and kinds & {LaurentPoly, RatFunc, Fraction}:
            raise ValueError("mixed-domain matrix")
        if FFElem in kinds and CycloNum in kinds:
            raise ValueError("mixed-domain matrix")
        self.rows = [list(r) for r in rows]
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    def rank(self) -> int:
        if not self.rows:
            return 0
        kinds = {type(e) for row in self.rows for e in row}
        if kinds <= {FFElem} or kinds <= {CycloNum} or kinds <= {Fraction}:
            return rank_field(self.rows)
        if kinds <= {LaurentPoly}:
            return rank_bareiss(self.rows)
        # rational functions: clear denominators row by row, then Bareiss
        cleared = []
        for row in self.rows:
            den = LaurentPoly.one()
            rfs = [e if isinstance(e, RatFunc) else RatFunc(e) for e in row]
            for e in rfs:
                den = den * e.den
            cleared.append([(e.num * den.exact_div(e.den)) for e in rfs])
        return rank_bareiss(cleared)

    def to_json(self) -> dict:
        def enc(e):
            if isinstance(e, LaurentPoly):
                return e.to_str("v")
            if isinstance(e, RatFunc):
                return e.to_str("v")
            if isinstance(e, FFElem):
                return list(e.coeffs)
            if isinstance(e, CycloNum):
                return [str(c) for c in e.coeffs]
            return str(e)

        return {
            "nrows": self.nrows,
            "ncols": self.ncols,
            "entries": [enc(e) for row in self.rows for e in row],
        }


def exact_rank(matrix) -> int:
    """Rank of an ExactMatrix or a plain list-of-lists over one domain."""
    if not isinstance(matrix, ExactMatrix):
        matrix = ExactMatrix(matrix)
    return matrix.rank()
